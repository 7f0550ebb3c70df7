"""Corona certificates, the involution group, Dixmier averaging, and the
block-decomposition pipeline for product minimal functions.

The corona solver returns two things on purpose: the *exact* minimal coset
norm (an operator norm on the complementary model space, cheap and exact)
and a near-optimal explicit witness produced by convex sup-norm minimization
over a polynomial coset slice.  Group elements, unitarizers and
decompositions are all certified by measured residuals against the bounds
the construction promises.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from . import defaults
from .blaschke import (
    BlaschkeProduct,
    eta_constant,
    pairwise_coprime,
    product_of,
)
from .errors import (
    DuplicatePoint,
    GroupLawViolation,
    HypothesisViolated,
    LowAccuracy,
    NotCoprime,
    NotPositiveDefinite,
    OptimizationStalled,
)
from .funrep import FunctionRep, HermiteData, NewtonPolynomial, Polynomial, RationalQuotient, interpolant
from .modelspace import (
    C0Instance,
    apply_function,
    inner_matrix,
    kernel_basis,
    kernel_span_check,
    model_instance,
    model_matrix,
    quotient_norm,
    restricted_norm,
    spectral_norm,
)
from .similarity import (
    SimilarityCertificate,
    beta_gate,
    build_similarity_dim2,
    build_similarity_from_isomorphism_bound,
    FIVE_SQRT2,
    _certify,
)


# ---------------------------------------------------------------------------
# corona / Bezout certificates


@dataclass(frozen=True)
class CoronaCertificate:
    """Witness pair for f·theta_A + g·(theta/theta_A) = 1 with norm data."""

    f: FunctionRep
    g: FunctionRep
    f_norm: float
    g_norm: float
    bezout_residual: float
    minimal_f_norm: float


def _lawson_sup_minimizer(
    beta_vals: np.ndarray,
    degree: int,
    target: float,
    max_iter: int = 200,
) -> tuple[np.ndarray, float]:
    """min over polynomials q (deg <= degree) of sup_grid |beta + q|.

    Lawson reweighting with FFT-built Toeplitz normal equations; the grid is
    uniform on the circle, so the weighted Gram matrix of the monomials is a
    section of the Fourier transform of the weights.  Returns the best
    coefficient vector and its achieved grid supremum.
    """
    g = len(beta_vals)
    if degree + 1 >= g:
        raise ValueError("polynomial slice must be smaller than the grid")
    w = np.full(g, 1.0 / g)
    idx = (np.arange(degree + 1)[:, None] - np.arange(degree + 1)[None, :]) % g
    best_sup = np.inf
    best_p = np.zeros(degree + 1, dtype=complex)
    stall = 0
    for _ in range(max_iter):
        hat_w = np.fft.fft(w)
        gram = hat_w[idx]
        rhs = -np.fft.fft(w * beta_vals)[: degree + 1]
        gram = gram + np.eye(degree + 1) * (1e-14 * abs(hat_w[0]))
        p = np.linalg.solve(gram, rhs)
        padded = np.zeros(g, dtype=complex)
        padded[: degree + 1] = p
        q_vals = g * np.fft.ifft(padded)
        resid = beta_vals + q_vals
        sup = float(np.max(np.abs(resid)))
        if sup < best_sup * (1.0 - 1e-5):
            stall = 0
        else:
            stall += 1
        if sup < best_sup:
            best_sup = sup
            best_p = p
        if best_sup <= target or stall >= 15:
            break
        w = w * np.abs(resid)
        floor = 1e-15 * w.max()
        w = np.maximum(w, floor)
        w = w / w.sum()
    return best_p, best_sup


def corona_solve(
    theta_a: BlaschkeProduct,
    theta_comp: BlaschkeProduct,
    grid: int = defaults.CORONA_GRID,
    degree_margin: int = defaults.CORONA_DEGREE_MARGIN,
    grid_slack: float = defaults.GRID_SLACK,
) -> CoronaCertificate:
    """Solve f·theta_a + g·theta_comp = 1 for coprime inner factors.

    f interpolates 1/theta_a at the zeros of theta_comp (with confluent
    derivative conditions), so 1 - f·theta_a is divisible by theta_comp and
    g = (1 - f·theta_a)/theta_comp is analytic.  The minimal possible
    sup-norm of f over its coset is computed exactly as a quotient norm;
    the returned f is a witness within ``grid_slack`` of that optimum.
    """
    shared = set(theta_a.values.tolist()) & set(theta_comp.values.tolist())
    if shared:
        raise NotCoprime(f"factors share zeros {sorted(shared, key=abs)}")

    if theta_comp.degree == 0:
        return CoronaCertificate(
            f=Polynomial([0.0]),
            g=Polynomial([1.0]),
            f_norm=0.0,
            g_norm=1.0,
            bezout_residual=0.0,
            minimal_f_norm=0.0,
        )
    if theta_a.degree == 0:
        return CoronaCertificate(
            f=Polynomial([1.0]),
            g=Polynomial([0.0]),
            f_norm=1.0,
            g_norm=0.0,
            bezout_residual=0.0,
            minimal_f_norm=1.0,
        )

    f0 = _minimal_interpolant(theta_a, theta_comp)
    minimal = quotient_norm(f0, theta_comp)

    pts = defaults.boundary_grid(grid)
    f0_vals = f0.boundary_values(pts)
    tc_vals = theta_comp.boundary_values(pts)
    degree = theta_a.degree + theta_comp.degree + degree_margin
    p, achieved = _lawson_sup_minimizer(
        np.conj(tc_vals) * f0_vals, degree, target=minimal * (1.0 + 0.2 * grid_slack)
    )
    if achieved > minimal * (1.0 + grid_slack) + 1e-12:
        raise OptimizationStalled(
            f"witness sup {achieved:.6f} exceeds optimum {minimal:.6f} by more than {grid_slack:.0%}"
        )

    f = f0 + theta_comp * Polynomial(p)
    g = RationalQuotient(Polynomial([1.0]) - f * theta_a, theta_comp)

    f_vals = f.boundary_values(pts)
    ta_vals = theta_a.boundary_values(pts)
    g_vals = g.boundary_values(pts)
    residual = float(np.max(np.abs(f_vals * ta_vals + g_vals * tc_vals - 1.0)))
    return CoronaCertificate(
        f=f,
        g=g,
        f_norm=float(np.max(np.abs(f_vals))),
        g_norm=float(np.max(np.abs(g_vals))),
        bezout_residual=residual,
        minimal_f_norm=float(minimal),
    )


# ---------------------------------------------------------------------------
# generalized Carleson constant


@dataclass(frozen=True)
class SubsetRow:
    mask: int
    f_norm: float
    g_norm: float
    residual: float


@dataclass(frozen=True)
class CarlesonTable:
    constant: float
    rows: tuple
    exhaustive: bool


def _mask_split(family, mask: int) -> tuple[BlaschkeProduct, BlaschkeProduct]:
    inside = [family[i] for i in range(len(family)) if mask >> i & 1]
    outside = [family[i] for i in range(len(family)) if not mask >> i & 1]
    return product_of(inside), product_of(outside)


def generalized_carleson_constant(
    family,
    subset_budget: int = defaults.SUBSET_BUDGET,
    seed: int = 0,
) -> CarlesonTable:
    """max over examined subsets A of max(||f_A||, ||g_A||).

    Exhaustive over all 2^m subsets while that count fits the budget;
    otherwise a seeded uniform sample of masks, flagged in the result.
    """
    if not pairwise_coprime(family):
        raise NotCoprime("family members must be pairwise coprime")
    m = len(family)
    exhaustive = 2**m <= subset_budget
    if exhaustive:
        masks = range(2**m)
    else:
        rng = np.random.default_rng(seed)
        masks = sorted({int(x) for x in rng.integers(0, 2**m, size=subset_budget)})
    rows = []
    constant = 0.0
    for mask in masks:
        theta_a, theta_comp = _mask_split(family, mask)
        cert = corona_solve(theta_a, theta_comp)
        rows.append(
            SubsetRow(mask=mask, f_norm=cert.f_norm, g_norm=cert.g_norm, residual=cert.bezout_residual)
        )
        constant = max(constant, cert.f_norm, cert.g_norm)
    return CarlesonTable(constant=constant, rows=tuple(rows), exhaustive=exhaustive)


# ---------------------------------------------------------------------------
# the involution group


@dataclass(frozen=True)
class InvolutionGroup:
    """All k_A = 2·phi_A(T) - I indexed by subset bitmask."""

    family: tuple
    elements: dict
    projections: dict
    norm_sup: float
    corona_constant: float
    pair_checks_exhaustive: bool


def _phi_rep(theta_a: BlaschkeProduct, cert: CoronaCertificate) -> FunctionRep:
    # phi_A = g_A · theta/theta_A = 1 - f_A·theta_A
    return Polynomial([1.0]) - cert.f * theta_a


def _minimal_interpolant(theta_a: BlaschkeProduct, theta_comp: BlaschkeProduct) -> NewtonPolynomial:
    """Lowest-degree polynomial interpolating 1/theta_a at theta_comp's zeros."""
    recip = RationalQuotient(Polynomial([1.0]), theta_a)
    return interpolant(recip, theta_comp.values.tolist())


def phi_symbol(theta_a: BlaschkeProduct, theta_comp: BlaschkeProduct) -> HermiteData:
    """phi_A = g_A·theta/theta_A as explicit node data at the zeros of theta.

    Whatever corona solution is used, phi_A is 1 to full multiplicity at the
    zeros of theta_A and 0 to full multiplicity at the zeros of the
    complement, so its class modulo theta·H-infinity is pinned by that node
    data alone.  This canonical representative keeps the functional calculus
    well conditioned where an explicit corona witness would blow up off its
    interpolation nodes.
    """
    nodes: dict[complex, list] = {}
    for z, m in theta_a.distinct_zeros():
        nodes[z] = [1.0] + [0.0] * (m - 1)
    for z, m in theta_comp.distinct_zeros():
        nodes[z] = [0.0] * m
    return HermiteData(nodes)


def _phi_matrix(t: np.ndarray, theta: BlaschkeProduct, theta_a: BlaschkeProduct, theta_comp: BlaschkeProduct) -> np.ndarray:
    eye = np.eye(t.shape[0], dtype=complex)
    if theta_comp.degree == 0:
        return eye
    if theta_a.degree == 0:
        return np.zeros_like(eye)
    return apply_function(phi_symbol(theta_a, theta_comp), t, theta)


def build_involution_group(
    inst: C0Instance,
    family,
    pair_check_cap: int = defaults.PAIR_CHECK_CAP,
    seed: int = 0,
) -> InvolutionGroup:
    """Construct and verify the abelian group of corona involutions.

    Checks, within 1e-8: every element squares to the identity, the product
    law on complements of symmetric differences, multiplicativity of the
    projections on intersections, and the two pinned elements (full set to
    +I, empty set to -I).
    """
    m = len(family)
    if 2**m > defaults.GROUP_SIZE_CAP:
        raise ValueError(f"2^{m} exceeds the group size cap {defaults.GROUP_SIZE_CAP}")
    if not pairwise_coprime(family):
        raise NotCoprime("family members must be pairwise coprime")
    theta = product_of(family)
    t = inst.matrix
    if sorted(theta.values.tolist(), key=lambda z: (z.real, z.imag)) != sorted(
        inst.theta.values.tolist(), key=lambda z: (z.real, z.imag)
    ):
        raise HypothesisViolated("minimal-function", "family product differs from instance theta")
    resid = spectral_norm(inner_matrix(theta, t))
    if resid > 10 * defaults.ANNIHILATION_TOL:
        raise HypothesisViolated("annihilation", f"theta(T) residual {resid:.3e}")

    full = 2**m - 1
    eye = np.eye(t.shape[0], dtype=complex)
    projections: dict[int, np.ndarray] = {}
    elements: dict[int, np.ndarray] = {}
    constant = 0.0
    for mask in range(2**m):
        theta_a, theta_comp = _mask_split(family, mask)
        cert = corona_solve(theta_a, theta_comp)
        constant = max(constant, cert.f_norm, cert.g_norm)
        p = _phi_matrix(t, theta, theta_a, theta_comp)
        projections[mask] = p
        elements[mask] = 2.0 * p - eye

    for mask, k in elements.items():
        err = spectral_norm(k @ k - eye)
        if err > 1e-8:
            raise GroupLawViolation(f"k_{mask:b} fails involution by {err:.3e}")
    if spectral_norm(elements[full] - eye) > 1e-8:
        raise GroupLawViolation("full-set element is not the identity")
    if spectral_norm(elements[0] + eye) > 1e-8:
        raise GroupLawViolation("empty-set element is not minus the identity")

    size = 2**m
    exhaustive = size <= pair_check_cap
    if exhaustive:
        # batched products; Frobenius dominates spectral so the vectorized
        # screen is conservative, and any offender is re-measured exactly
        ks = np.stack([elements[a] for a in range(size)])
        ps = np.stack([projections[a] for a in range(size)])
        ab = np.arange(size)
        k_target = (full & ~(ab[:, None] ^ ab[None, :])).astype(int)
        p_target = (ab[:, None] & ab[None, :]).astype(int)
        k_res = ks[:, None] @ ks[None, :] - ks[k_target]
        p_res = ps[:, None] @ ps[None, :] - ps[p_target]
        for res, mats, targets, label in (
            (k_res, ks, k_target, "element product"),
            (p_res, ps, p_target, "projection product"),
        ):
            fro = np.linalg.norm(res, axis=(2, 3))
            a, b = np.unravel_index(int(np.argmax(fro)), fro.shape)
            if fro[a, b] > 1e-8:
                err = spectral_norm(mats[a] @ mats[b] - mats[targets[a, b]])
                if err > 1e-8:
                    raise GroupLawViolation(
                        f"{label} law fails for masks ({a:b}, {b:b}) by {err:.3e}"
                    )
    else:
        rng = np.random.default_rng(seed)
        for _ in range(2048):
            a = int(rng.integers(0, size))
            b = int(rng.integers(0, size))
            target = full & ~(a ^ b)
            err = spectral_norm(elements[a] @ elements[b] - elements[target])
            if err > 1e-8:
                raise GroupLawViolation(
                    f"k_{a:b}·k_{b:b} != k on complement of symmetric difference (err {err:.3e})"
                )
            err = spectral_norm(projections[a] @ projections[b] - projections[a & b])
            if err > 1e-8:
                raise GroupLawViolation(
                    f"phi_{a:b}·phi_{b:b} != phi on intersection (err {err:.3e})"
                )

    norm_sup = max(spectral_norm(k) for k in elements.values())
    return InvolutionGroup(
        family=tuple(family),
        elements=elements,
        projections=projections,
        norm_sup=norm_sup,
        corona_constant=constant,
        pair_checks_exhaustive=exhaustive,
    )


# ---------------------------------------------------------------------------
# Dixmier averaging


@dataclass(frozen=True)
class UnitarizationResult:
    x: np.ndarray
    x_inv: np.ndarray
    unitarity_residual: float
    norm_x: float
    norm_x_inv: float
    norm_sup: float


def dixmier_unitarizer(group: InvolutionGroup) -> UnitarizationResult:
    """Conjugate the whole group to unitaries via the averaged Gram operator.

    For a finite abelian bounded group the invariant mean is the plain
    average: M = avg(k*·k) satisfies g*·M·g = M, so X = M^(1/2) turns every
    element unitary, and C^(-2)·I <= M <= C^2·I pins both norms by the
    group's sup-norm C.
    """
    mats = list(group.elements.values())
    n = mats[0].shape[0]
    m = np.zeros((n, n), dtype=complex)
    for k in mats:
        m += k.conj().T @ k
    m /= len(mats)
    m = (m + m.conj().T) / 2.0
    w, v = np.linalg.eigh(m)
    if w[0] <= 0:
        raise NotPositiveDefinite(f"averaged Gram operator has eigenvalue {w[0]:.3e}")
    x = (v * np.sqrt(w)) @ v.conj().T
    x_inv = (v / np.sqrt(w)) @ v.conj().T
    eye = np.eye(n)
    residual = 0.0
    for k in mats:
        u = x @ k @ x_inv
        residual = max(residual, spectral_norm(u.conj().T @ u - eye))
    if residual > 1e-8:
        raise LowAccuracy(f"unitarization residual {residual:.3e} above 1e-8")
    norm_x = spectral_norm(x)
    norm_x_inv = spectral_norm(x_inv)
    if max(norm_x, norm_x_inv) > group.norm_sup * (1.0 + 1e-6):
        raise LowAccuracy(
            f"unitarizer norms ({norm_x:.4f}, {norm_x_inv:.4f}) exceed group sup {group.norm_sup:.4f}"
        )
    return UnitarizationResult(
        x=x,
        x_inv=x_inv,
        unitarity_residual=residual,
        norm_x=norm_x,
        norm_x_inv=norm_x_inv,
        norm_sup=group.norm_sup,
    )


# ---------------------------------------------------------------------------
# block decomposition


@dataclass(frozen=True)
class BlockDecomposition:
    y: np.ndarray
    y_inv: np.ndarray
    blocks: tuple
    offdiag_residual: float
    norm_y: float
    norm_y_inv: float
    corona_constant: float
    norm_bound: float
    eigen_match_error: float
    span_ok: bool
    group: InvolutionGroup = field(repr=False, default=None)


def block_decompose(inst: C0Instance, family, seed: int = 0) -> BlockDecomposition:
    """Similarity onto the direct sum of the restrictions T|ker theta_n(T).

    The Dixmier unitarizer X turns the corona projections into orthogonal
    ones; their ranges give an adapted unitary U, and the change of basis
    back to orthonormal kernel coordinates makes every block the literal
    compression of T to its kernel subspace (a contraction with minimal
    function theta_n).  Both ||Y|| and ||Y^{-1}|| stay below (2C+1)^2 with C
    the achieved corona constant.
    """
    group = build_involution_group(inst, family, seed=seed)
    dix = dixmier_unitarizer(group)
    t = inst.matrix
    n = t.shape[0]
    m = len(family)

    u_blocks = []
    k_blocks = []
    g_inv_blocks = []
    for i in range(m):
        d = family[i].degree
        q = dix.x @ group.projections[1 << i] @ dix.x_inv
        qmat, _, _ = scipy.linalg.qr(q, pivoting=True)
        u_i = qmat[:, :d]
        k_i = kernel_basis(t, family[i])
        u_blocks.append(u_i)
        k_blocks.append(k_i)
        g_inv_blocks.append(k_i.conj().T @ dix.x_inv @ u_i)

    u = np.hstack(u_blocks)
    if spectral_norm(u.conj().T @ u - np.eye(n)) > 1e-8:
        raise LowAccuracy("adapted range basis failed to be unitary")

    g_inv = scipy.linalg.block_diag(*g_inv_blocks)
    y = g_inv @ u.conj().T @ dix.x
    y_inv = np.linalg.inv(y)
    blocks = tuple(k.conj().T @ t @ k for k in k_blocks)
    direct_sum = scipy.linalg.block_diag(*blocks)
    offdiag = spectral_norm(y @ t @ y_inv - direct_sum)
    if offdiag > 1e-7:
        raise LowAccuracy(f"block off-diagonal residual {offdiag:.3e} above 1e-7")

    c = group.corona_constant
    bound = (2.0 * c + 1.0) ** 2
    norm_y = spectral_norm(y)
    norm_y_inv = spectral_norm(y_inv)
    if max(norm_y, norm_y_inv) > bound * (1.0 + 1e-6):
        raise LowAccuracy(
            f"decomposition norms ({norm_y:.4f}, {norm_y_inv:.4f}) exceed (2C+1)^2 = {bound:.4f}"
        )

    from scipy.optimize import linear_sum_assignment

    match_err = 0.0
    for i, b in enumerate(blocks):
        eigs = np.linalg.eigvals(b)
        cost = np.abs(eigs[:, None] - family[i].values[None, :])
        ri, ci = linear_sum_assignment(cost)
        match_err = max(match_err, float(cost[ri, ci].max()) if len(ri) else 0.0)

    span = kernel_span_check(t, family)
    return BlockDecomposition(
        y=y,
        y_inv=y_inv,
        blocks=blocks,
        offdiag_residual=offdiag,
        norm_y=norm_y,
        norm_y_inv=norm_y_inv,
        corona_constant=c,
        norm_bound=bound,
        eigen_match_error=match_err,
        span_ok=span.ok,
        group=group,
    )


# ---------------------------------------------------------------------------
# end-to-end pipeline for product minimal functions


def pipeline_similarity(
    inst: C0Instance,
    family,
    beta: float,
    seed: int = 0,
    spot_check_samples: int = 3,
) -> SimilarityCertificate:
    """Global certified similarity with S(theta) for theta a coprime product.

    Decomposes both the instance and the model into blocks along the family,
    matches each pair of blocks through the per-block constructions (the
    dimension-two route when a factor has at most two roots, the alpha-orbit
    route otherwise), and composes.  Hypotheses checked: the separation gate
    on beta - 5*sqrt(2)*eta when any factor has three or more roots, and the
    restricted-norm floor on every factor for sampled symbols.
    """
    family = list(family)
    theta = product_of(family)
    if sorted(theta.values.tolist(), key=lambda z: (z.real, z.imag)) != sorted(
        inst.theta.values.tolist(), key=lambda z: (z.real, z.imag)
    ):
        raise HypothesisViolated("minimal-function", "family product differs from instance theta")
    n_max = max(f.degree for f in family)
    eta = max(eta_constant(f) for f in family)

    if n_max > 2:
        shifted = beta - FIVE_SQRT2 * eta
        gate = beta_gate(n_max)
        if not gate < shifted < 1.0:
            raise HypothesisViolated(
                "eta-gate",
                f"beta - 5*sqrt(2)*eta = {shifted:.6f} outside ({gate:.6f}, 1)",
            )

    rng = np.random.default_rng(seed)
    t = inst.matrix
    for idx, factor in enumerate(family):
        for _ in range(spot_check_samples):
            deg = int(rng.integers(1, max(theta.degree, 2)))
            u = Polynomial(rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1))
            lhs = restricted_norm(u, t, factor, theta)
            rhs = beta * quotient_norm(u, factor)
            if lhs < rhs - 1e-9:
                raise HypothesisViolated(
                    f"restricted-norm-block-{idx}",
                    f"||u(T)|ker|| = {lhs:.6f} < beta·quotient = {rhs:.6f}",
                )

    dec_t = block_decompose(inst, family, seed=seed)
    dec_s = block_decompose(model_instance(theta), family, seed=seed + 1)

    z_blocks = []
    block_bounds = []
    routes = []
    psi_norm = 1.0 / beta
    for i, factor in enumerate(family):
        d = factor.degree
        if d == 1:
            z_blocks.append(np.eye(1, dtype=complex))
            block_bounds.append(1.0)
            routes.append("scalar")
            continue
        inst_t = C0Instance(matrix=dec_t.blocks[i], theta=factor, provenance={"generator": "block", "side": "instance"})
        inst_s = C0Instance(matrix=dec_s.blocks[i], theta=factor, provenance={"generator": "block", "side": "model"})
        if d == 2:
            cert_t = build_similarity_dim2(inst_t, psi_norm, seed=seed + 11 * i)
            cert_s = build_similarity_dim2(inst_s, psi_norm, seed=seed + 11 * i + 5)
        else:
            cert_t = build_similarity_from_isomorphism_bound(inst_t, psi_norm, seed=seed + 11 * i)
            cert_s = build_similarity_from_isomorphism_bound(inst_s, psi_norm, seed=seed + 11 * i + 5)
        z_blocks.append(np.linalg.solve(cert_s.x, cert_t.x))
        block_bounds.append(cert_t.theoretical_bound * cert_s.theoretical_bound)
        routes.append(cert_t.bound_params.get("route", "alpha-orbit"))

    z = scipy.linalg.block_diag(*z_blocks)
    x = dec_s.y_inv @ z @ dec_t.y
    bound = dec_t.norm_bound * dec_s.norm_bound * max(block_bounds)
    params = {
        "route": "product-family-pipeline",
        "beta": beta,
        "eta": eta,
        "blockRoutes": routes,
        "blockBounds": block_bounds,
        "coronaConstants": [dec_t.corona_constant, dec_s.corona_constant],
        "decompositionBounds": [dec_t.norm_bound, dec_s.norm_bound],
    }
    return _certify(x, t, model_matrix(theta), bound, params, resid_tol=1e-7)


# ---------------------------------------------------------------------------
# diagonal witness for singleton families


@dataclass(frozen=True)
class DiagonalWitness:
    values: tuple
    ok: bool
    floor: float


def diagonal_witness(zeros, beta: float) -> DiagonalWitness:
    """Per-index floors |psi_n(lam_n)| for the diagonal direct sum.

    On T = diag(lam_1, ..., lam_N) the symbol psi_n vanishes at every other
    diagonal entry, so ||psi_n(T)|| = |psi_n(lam_n)|; the witness reports
    whether every floor clears beta.
    """
    vals = [complex(getattr(z, "value", z)) for z in zeros]
    if len(set(vals)) != len(vals):
        raise DuplicatePoint("diagonal witness requires distinct points")
    theta = BlaschkeProduct(vals)
    out = []
    for n_idx in range(len(vals)):
        psi = theta.psi(n_idx)
        out.append(abs(complex(psi.eval(np.array([vals[n_idx]]))[0])))
    floor = min(out) if out else 1.0
    return DiagonalWitness(values=tuple(out), ok=all(v >= beta for v in out), floor=floor)
