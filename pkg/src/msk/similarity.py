"""Cyclic-vector search and certified similarities between instances.

The change of basis is the one the underlying theorem constructs: pick unit
cyclic vectors xi_i whose partial-product orbits {alpha_k(T_i)·xi_i} form
well-conditioned bases, and map one orbit onto the other.  Every certificate
records the measured norms, the intertwining residual and the closed-form
bound its hypotheses entitle it to; a certificate whose measurements violate
its own bound is a build failure, not a warning.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import defaults
from .blaschke import BlaschkeProduct, eta_constant, eval_factor
from .errors import (
    HypothesisViolated,
    LowAccuracy,
    NotApplicable,
    SearchExhausted,
    SingularBasis,
    ThresholdUnreachable,
)
from .instances import krylov_sigma_min
from .modelspace import (
    C0Instance,
    inner_matrix,
    kernel_coordinates,
    mobius_matrix,
    model_instance,
    model_matrix,
    spectral_norm,
)

FIVE_SQRT2 = 5.0 * np.sqrt(2.0)


def beta_gate(n: int) -> float:
    """Lower admissible bound for beta: sqrt(1 - 1/(N-1)^2); 0 when N <= 2."""
    if n <= 2:
        return 0.0
    return float(np.sqrt(1.0 - 1.0 / (n - 1) ** 2))


# ---------------------------------------------------------------------------
# divisor enumeration


def enumerate_proper_divisors(
    theta: BlaschkeProduct,
    cap: int = defaults.DIVISOR_CAP,
    seed: int = 0,
) -> tuple[list[BlaschkeProduct], bool]:
    """All inner divisors of theta except theta itself.

    Exhaustive while the count stays within ``cap``; otherwise a seeded
    sample of exponent tuples.  Returns (divisors, exhaustive_flag).
    """
    distinct = theta.distinct_zeros()
    total = 1
    for _, m in distinct:
        total *= m + 1
    total -= 1  # exclude theta itself
    if total <= cap:
        out = []
        exps = [0] * len(distinct)
        while True:
            # advance mixed-radix counter
            zeros: list[complex] = []
            for (z, _), e in zip(distinct, exps):
                zeros.extend([z] * e)
            if len(zeros) < theta.degree:
                out.append(BlaschkeProduct(zeros))
            i = 0
            while i < len(exps):
                exps[i] += 1
                if exps[i] <= distinct[i][1]:
                    break
                exps[i] = 0
                i += 1
            if i == len(exps):
                break
        return out, True
    rng = np.random.default_rng(seed)
    seen = set()
    out = []
    while len(out) < cap:
        exps = tuple(int(rng.integers(0, m + 1)) for _, m in distinct)
        if sum(exps) == theta.degree or exps in seen:
            continue
        seen.add(exps)
        zeros = []
        for (z, _), e in zip(distinct, exps):
            zeros.extend([z] * e)
        out.append(BlaschkeProduct(zeros))
    return out, False


def divisor_floor(
    t: np.ndarray,
    theta: BlaschkeProduct,
    xi: np.ndarray,
    cap: int = defaults.DIVISOR_CAP,
    seed: int = 0,
) -> tuple[float, BlaschkeProduct | None, bool]:
    """min over enumerated proper inner divisors phi of ||phi(T)·xi||."""
    divisors, exhaustive = enumerate_proper_divisors(theta, cap=cap, seed=seed)
    worst = np.inf
    worst_phi: BlaschkeProduct | None = None
    # reuse Moebius factors of the distinct zeros
    factors = {z: mobius_matrix(z, t) for z, _ in theta.distinct_zeros()}
    for phi in divisors:
        v = xi
        for z in phi.values:
            v = factors[complex(z)] @ v
        norm = float(np.linalg.norm(v))
        if norm < worst:
            worst, worst_phi = norm, phi
    if not np.isfinite(worst):
        worst = float(np.linalg.norm(xi))
    return worst, worst_phi, exhaustive


# ---------------------------------------------------------------------------
# cyclic-vector search


@dataclass(frozen=True)
class CyclicVectorReport:
    vector: np.ndarray
    psi_n_norm: float
    krylov_sigma_min: float
    divisor_floor: float
    samples_tried: int
    found: bool
    strategy: str
    divisor_enumeration_exhaustive: bool = True


def _search_unit_vector(
    t: np.ndarray,
    functional: np.ndarray,
    threshold: float,
    max_samples: int,
    rng: np.random.Generator,
) -> tuple[Optional[np.ndarray], int, str, float, float]:
    """Find a unit xi with ||functional·xi|| > threshold and full Krylov rank.

    Phase 1 samples the rotation-invariant distribution on the sphere.  If
    the qualifying set is too thin for that (the functional is a near-rank-one
    spike), phase 2 samples rotation-invariant perturbations of shrinking
    radius around the norm-attaining vector — the same density argument that
    guarantees existence in the first place.
    """
    n = t.shape[0]
    tried = 0
    best_score = -np.inf
    best = None

    def qualify(cols: np.ndarray, strategy: str):
        nonlocal tried, best_score, best
        norms = np.linalg.norm(cols, axis=0)
        cols = cols / norms
        images = functional @ cols
        vals = np.linalg.norm(images, axis=0)
        for i in range(cols.shape[1]):
            tried += 1
            if vals[i] > best_score:
                best_score = vals[i]
                best = cols[:, i]
            if vals[i] > threshold:
                sig = krylov_sigma_min(t, cols[:, i])
                if sig > defaults.KRYLOV_TOL:
                    return cols[:, i], strategy
        return None, strategy

    batch = 256
    phase1 = min(max_samples, 2000)
    while tried < phase1:
        take = min(batch, phase1 - tried)
        g = rng.standard_normal((n, take)) + 1j * rng.standard_normal((n, take))
        hit, _ = qualify(g, "uniform")
        if hit is not None:
            return hit, tried, "uniform", best_score, float(np.linalg.norm(functional @ hit))

    # phase 2: perturb the maximizer
    _, _, vh = np.linalg.svd(functional)
    vmax = vh[0].conj()
    radii = [0.5, 0.25, 0.1, 0.05, 0.02, 0.01, 3e-3, 1e-3, 3e-4, 1e-4, 1e-5, 1e-6]
    per_radius = 32
    while tried < max_samples:
        for rho in radii:
            if tried >= max_samples:
                break
            take = min(per_radius, max_samples - tried)
            g = rng.standard_normal((n, take)) + 1j * rng.standard_normal((n, take))
            g = g / np.linalg.norm(g, axis=0)
            cols = vmax[:, None] + rho * g
            hit, _ = qualify(cols, "perturbed-maximizer")
            if hit is not None:
                return hit, tried, "perturbed-maximizer", best_score, float(
                    np.linalg.norm(functional @ hit)
                )
    return best, tried, "exhausted", best_score, best_score


def find_cyclic_vector(
    inst: C0Instance,
    threshold: float,
    max_samples: int = defaults.MAX_SAMPLES,
    seed: int = 0,
    functional: BlaschkeProduct | None = None,
) -> CyclicVectorReport:
    """Unit cyclic vector xi with ||psi_N(T)·xi|| > threshold.

    ``functional`` may replace psi_N (the product omitting the last zero)
    by another inner sub-product; the dimension-two route uses this.
    Raises ThresholdUnreachable when the threshold exceeds ||psi_N(T)||;
    returns a flagged best-so-far report when the sample budget runs out.
    """
    theta = inst.theta
    t = inst.matrix
    psi = functional if functional is not None else theta.psi(theta.degree - 1)
    mat = inner_matrix(psi, t)
    attainable = spectral_norm(mat)
    if threshold >= attainable:
        raise ThresholdUnreachable(
            f"threshold {threshold:.6f} >= ||psi(T)|| = {attainable:.6f}"
        )
    rng = np.random.default_rng(seed)
    hit, tried, strategy, best_score, achieved = _search_unit_vector(
        t, mat, threshold, max_samples, rng
    )
    if strategy == "exhausted" or hit is None:
        vec = hit if hit is not None else np.zeros(t.shape[0], dtype=complex)
        floor, _, exhaustive = divisor_floor(t, theta, vec, seed=seed)
        return CyclicVectorReport(
            vector=vec,
            psi_n_norm=float(best_score),
            krylov_sigma_min=krylov_sigma_min(t, vec) if hit is not None else 0.0,
            divisor_floor=floor,
            samples_tried=tried,
            found=False,
            strategy=strategy,
            divisor_enumeration_exhaustive=exhaustive,
        )
    floor, _, exhaustive = divisor_floor(t, theta, hit, seed=seed)
    return CyclicVectorReport(
        vector=hit,
        psi_n_norm=achieved,
        krylov_sigma_min=krylov_sigma_min(t, hit),
        divisor_floor=floor,
        samples_tried=tried,
        found=True,
        strategy=strategy,
        divisor_enumeration_exhaustive=exhaustive,
    )


# ---------------------------------------------------------------------------
# the alpha-orbit basis


def alpha_basis(t: np.ndarray, theta: BlaschkeProduct, xi: np.ndarray) -> np.ndarray:
    """Matrix with columns alpha_k(T)·xi, k = 0..N-1 (alpha_0 = 1)."""
    n = theta.degree
    cols = np.empty((t.shape[0], n), dtype=complex)
    v = xi.astype(complex)
    cols[:, 0] = v
    for k in range(1, n):
        v = mobius_matrix(theta.values[k - 1], t) @ v
        cols[:, k] = v
    sigma = np.linalg.svd(cols, compute_uv=False)
    if sigma[-1] <= 0 or sigma[0] / sigma[-1] > 1e12:
        raise SingularBasis(
            f"alpha-orbit condition number {sigma[0] / max(sigma[-1], 1e-300):.3e} exceeds 1e12"
        )
    return cols


@dataclass(frozen=True)
class AngleReport:
    ok: bool
    angle_ok: bool
    divisor_ok: bool
    worst_pair: tuple[int, int]
    worst_angle_margin: float
    divisor_floor: float
    worst_divisor_degree: int


def angle_check(
    t: np.ndarray,
    theta: BlaschkeProduct,
    xi: np.ndarray,
    beta: float,
    cap: int = defaults.DIVISOR_CAP,
    seed: int = 0,
) -> AngleReport:
    """Verify the two conclusions the similarity bound rests on.

    (1) |<alpha_j·xi, alpha_k·xi>| <= sqrt(1-beta^2)·||alpha_j·xi||·||alpha_k·xi||
        for 0 <= j < k <= N-1, and
    (2) ||phi(T)·xi|| >= beta for every enumerated proper inner divisor phi.
    """
    n = theta.degree
    cols = np.empty((t.shape[0], n), dtype=complex)
    v = xi.astype(complex)
    cols[:, 0] = v
    for k in range(1, n):
        v = mobius_matrix(theta.values[k - 1], t) @ v
        cols[:, k] = v
    bound = float(np.sqrt(max(0.0, 1.0 - beta**2)))
    angle_ok = True
    worst_pair = (-1, -1)
    worst_margin = np.inf
    for j in range(n):
        for k in range(j + 1, n):
            lhs = abs(np.vdot(cols[:, k], cols[:, j]))
            rhs = bound * np.linalg.norm(cols[:, j]) * np.linalg.norm(cols[:, k])
            margin = rhs - lhs
            if margin < worst_margin:
                worst_margin = margin
                worst_pair = (j, k)
            if lhs > rhs + 1e-12:
                angle_ok = False
    floor, worst_phi, _ = divisor_floor(t, theta, xi, cap=cap, seed=seed)
    divisor_ok = floor >= beta - 1e-12
    if not np.isfinite(worst_margin):
        worst_margin = 0.0
    return AngleReport(
        ok=angle_ok and divisor_ok,
        angle_ok=angle_ok,
        divisor_ok=divisor_ok,
        worst_pair=worst_pair,
        worst_angle_margin=float(worst_margin),
        divisor_floor=floor,
        worst_divisor_degree=worst_phi.degree if worst_phi is not None else 0,
    )


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class SimilarityCertificate:
    """Invertible X with X·T1 = T2·X, plus its measured and promised norms."""

    x: np.ndarray
    norm_x: float
    norm_x_inv: float
    intertwine_residual: float
    resid_tol: float
    theoretical_bound: float | None
    bound_params: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        from .jsonio import FORMAT_VERSION, matrix_to_json

        return {
            "formatVersion": FORMAT_VERSION,
            "X": matrix_to_json(self.x),
            "normX": self.norm_x,
            "normXinv": self.norm_x_inv,
            "intertwineResidual": self.intertwine_residual,
            "residTol": self.resid_tol,
            "theoreticalBound": self.theoretical_bound,
            "boundParams": self.bound_params,
        }


def _certify(
    x: np.ndarray,
    t1: np.ndarray,
    t2: np.ndarray,
    bound: float | None,
    params: dict,
    resid_tol: float,
) -> SimilarityCertificate:
    norm_x = spectral_norm(x)
    x_inv = np.linalg.inv(x)
    norm_x_inv = spectral_norm(x_inv)
    resid = spectral_norm(x @ t1 - t2 @ x)
    if resid > resid_tol:
        raise LowAccuracy(f"intertwining residual {resid:.3e} exceeds {resid_tol:.3e}")
    if bound is not None and max(norm_x, norm_x_inv) > bound * (1.0 + 1e-6):
        raise LowAccuracy(
            f"certificate norms ({norm_x:.4f}, {norm_x_inv:.4f}) exceed promised bound {bound:.4f}"
        )
    return SimilarityCertificate(
        x=x,
        norm_x=norm_x,
        norm_x_inv=norm_x_inv,
        intertwine_residual=resid,
        resid_tol=resid_tol,
        theoretical_bound=bound,
        bound_params=params,
    )


def _norm_bound_term(beta: float, n: int) -> float:
    """One side of the closed-form bound: (beta^2/N·(1-(N-1)·sqrt(1-beta^2)))^(-1/2)."""
    inner = 1.0 - (n - 1) * np.sqrt(max(0.0, 1.0 - beta**2))
    if inner <= 0:
        raise HypothesisViolated("beta-gate", f"beta {beta:.4f} not above gate for N = {n}")
    return float((beta**2 / n * inner) ** -0.5)


def build_similarity(
    t1: C0Instance,
    t2: C0Instance,
    beta1: float,
    beta2: float,
    seed: int = 0,
    max_samples: int = defaults.MAX_SAMPLES,
) -> SimilarityCertificate:
    """Certified X with X·T1 = T2·X for instances sharing the minimal function.

    Hypotheses checked, in order: identical zero sequences; beta range
    (strictly between the gate and 1); ||psi_N(T_i)|| > beta_i + 5·sqrt(2)·eta.
    The bound is max of the two closed-form terms.
    """
    theta = t1.theta
    if theta != t2.theta:
        raise HypothesisViolated("same-theta", "instances carry different zero sequences")
    n = theta.degree
    gate = beta_gate(n)
    for name, beta in (("beta1", beta1), ("beta2", beta2)):
        if not gate < beta < 1.0:
            raise HypothesisViolated(
                f"{name}-range", f"{beta:.6f} outside ({gate:.6f}, 1)"
            )
    eta = eta_constant(theta)
    pairs = []
    for label, inst, beta in (("T1", t1, beta1), ("T2", t2, beta2)):
        floor = inst.psi_norm()
        need = beta + FIVE_SQRT2 * eta
        if floor <= need:
            raise HypothesisViolated(
                f"psi-floor-{label}",
                f"||psi_N({label})|| = {floor:.6f} <= beta + 5*sqrt(2)*eta = {need:.6f}",
            )
        pairs.append((label, inst, beta, need))

    bases = []
    searches = []
    for round_idx, (label, inst, beta, need) in enumerate(pairs):
        report = None
        for attempt in range(3):
            report = find_cyclic_vector(
                inst, threshold=need, max_samples=max_samples, seed=seed + 7 * round_idx + 1009 * attempt
            )
            if not report.found:
                raise SearchExhausted(
                    f"no qualifying vector for {label} within {max_samples} samples", report
                )
            check = angle_check(inst.matrix, theta, report.vector, beta, seed=seed)
            if check.ok:
                break
            report = None
        if report is None:
            raise SearchExhausted(f"angle verification kept failing for {label}", None)
        searches.append(report)
        bases.append(alpha_basis(inst.matrix, theta, report.vector))

    b1, b2 = bases
    x = np.linalg.solve(b1.conj().T, b2.conj().T).conj().T  # B2 · B1^{-1}
    bound = max(_norm_bound_term(beta1, n), _norm_bound_term(beta2, n))
    params = {
        "route": "alpha-orbit",
        "beta1": beta1,
        "beta2": beta2,
        "N": n,
        "eta": eta,
        "searchSamples": [s.samples_tried for s in searches],
        "searchStrategies": [s.strategy for s in searches],
        "divisorFloors": [s.divisor_floor for s in searches],
    }
    return _certify(
        x, t1.matrix, t2.matrix, bound, params, resid_tol=defaults.RESID_TOL_FACTOR * n
    )


def build_similarity_from_isomorphism_bound(
    t: C0Instance,
    psi_norm: float,
    seed: int = 0,
    max_samples: int = defaults.MAX_SAMPLES,
) -> SimilarityCertificate:
    """Certified similarity of T with the compressed shift on H(theta).

    ``psi_norm`` bounds the norm of the calculus isomorphism onto the model
    algebra; beta = 1/psi_norm - 5·sqrt(2)·eta must clear the gate.  The
    model side satisfies ||psi_N(S(theta))|| = 1, so the same beta serves
    both operators.
    """
    if psi_norm < 1.0:
        raise HypothesisViolated("isomorphism-norm", f"psi_norm {psi_norm} must be >= 1")
    theta = t.theta
    n = theta.degree
    eta = eta_constant(theta)
    beta = 1.0 / psi_norm - FIVE_SQRT2 * eta
    gate = beta_gate(n)
    if not gate < beta < 1.0:
        raise HypothesisViolated(
            "beta-range",
            f"1/psi_norm - 5*sqrt(2)*eta = {beta:.6f} outside ({gate:.6f}, 1)",
        )
    floor = t.psi_norm()
    if floor < (1.0 / psi_norm) * (1.0 - 1e-9):
        raise HypothesisViolated(
            "psi-vs-isomorphism",
            f"||psi_N(T)|| = {floor:.6f} below 1/psi_norm = {1.0 / psi_norm:.6f}",
        )
    cert = build_similarity(
        t, model_instance(theta), beta, beta, seed=seed, max_samples=max_samples
    )
    params = dict(cert.bound_params)
    params.update({"route": "isomorphism-bound", "psiNorm": psi_norm, "beta": beta})
    return SimilarityCertificate(
        x=cert.x,
        norm_x=cert.norm_x,
        norm_x_inv=cert.norm_x_inv,
        intertwine_residual=cert.intertwine_residual,
        resid_tol=cert.resid_tol,
        theoretical_bound=cert.theoretical_bound,
        bound_params=params,
    )


# ---------------------------------------------------------------------------
# dimension two


def dim2_lower_bound(mu: complex, beta: float) -> float:
    """sqrt((1-|mu|)^2 - (1-|mu|^2)(1-beta^2)) - |mu|.

    Lower bound for ||b_2(T)·xi|| given ||b_1(T)·xi|| >= beta, where
    mu is the value of one factor at the other's zero.  Raises
    NotApplicable when the discriminant is negative.
    """
    m = abs(mu)
    if m >= 1.0:
        raise ValueError("mu must lie in the open disk")
    if not 0.0 < beta <= 1.0:
        raise ValueError("beta must lie in (0, 1]")
    disc = (1.0 - m) ** 2 - (1.0 - m**2) * (1.0 - beta**2)
    if disc < 0.0:
        raise NotApplicable(
            f"(1-|mu|)^2 = {(1 - m) ** 2:.6f} < (1-|mu|^2)(1-beta^2) = {(1 - m**2) * (1 - beta**2):.6f}"
        )
    return float(np.sqrt(disc) - m)


def dim2_branch_radius(beta: float) -> float:
    """Largest |mu| below which the kernel-vector route keeps its constants.

    Bisects (to 1e-12) for the supremum of |mu| with both
    dim2_lower_bound(mu, beta) > beta/2 and 1 - 2|mu| > 1/2.
    """

    def good(m: float) -> bool:
        if 1.0 - 2.0 * m <= 0.5:
            return False
        try:
            return dim2_lower_bound(m, beta) > beta / 2.0
        except NotApplicable:
            return False

    lo, hi = 0.0, 0.25
    if good(hi):
        return hi
    for _ in range(60):
        mid = (lo + hi) / 2.0
        if good(mid):
            lo = mid
        else:
            hi = mid
    return lo


def build_similarity_dim2(
    t: C0Instance,
    psi_norm: float,
    seed: int = 0,
    max_samples: int = defaults.MAX_SAMPLES,
) -> SimilarityCertificate:
    """Similarity with S(theta) in dimension two, no separation hypothesis.

    Separated roots go through the spectral block decomposition; close roots
    use the kernel-vector basis on the model side, with the closed-form
    bounds ||X||^2 <= 8/(beta^2·(1-sqrt(1-beta^2))) and ||X^{-1}||^2 <= 8.
    A repeated root is routed to the general alpha-orbit construction
    (eta = 0 there, so its gate is checkable).
    """
    theta = t.theta
    if theta.degree != 2:
        raise ValueError(f"dimension-two route requires degree 2, got {theta.degree}")
    if psi_norm < 1.0:
        raise HypothesisViolated("isomorphism-norm", f"psi_norm {psi_norm} must be >= 1")
    lam1, lam2 = (complex(z) for z in theta.values)
    if lam1 == lam2:
        return build_similarity_from_isomorphism_bound(
            t, psi_norm, seed=seed, max_samples=max_samples
        )

    mu = complex(eval_factor(lam1, lam2))
    beta = 0.99 / psi_norm
    radius = dim2_branch_radius(beta)

    if abs(mu) >= radius:
        from .carleson import block_decompose

        family = [BlaschkeProduct([lam1]), BlaschkeProduct([lam2])]
        dec_t = block_decompose(t, family)
        dec_s = block_decompose(model_instance(theta), family)
        x = np.linalg.solve(dec_s.y, dec_t.y)
        bound = dec_t.norm_bound * dec_s.norm_bound
        params = {
            "route": "dim2-separated-roots",
            "mu": abs(mu),
            "branchRadius": radius,
            "coronaConstants": [dec_t.corona_constant, dec_s.corona_constant],
        }
        return _certify(
            x, t.matrix, model_matrix(theta), bound, params, resid_tol=defaults.RESID_TOL_FACTOR * 2
        )

    # kernel-vector branch
    op_norm = spectral_norm(mobius_matrix(lam2, t.matrix))
    if op_norm < (1.0 / psi_norm) * (1.0 - 1e-9):
        raise HypothesisViolated(
            "factor-norm",
            f"||b_2(T)|| = {op_norm:.6f} below 1/psi_norm = {1.0 / psi_norm:.6f}",
        )
    report = find_cyclic_vector(
        t,
        threshold=beta,
        max_samples=max_samples,
        seed=seed,
        functional=BlaschkeProduct([lam2]),
    )
    if not report.found:
        raise SearchExhausted("no unit vector with ||b_2(T)xi|| above beta", report)
    xi = report.vector

    s = model_matrix(theta)
    zeta = kernel_coordinates(theta, lam1)
    zeta = zeta / np.linalg.norm(zeta)
    b1_s_zeta = mobius_matrix(lam1, s) @ zeta
    gamma = 1.0 - 2.0 * abs(mu)
    if np.linalg.norm(b1_s_zeta) < gamma - 1e-10:
        raise LowAccuracy("model kernel vector lost its factor-norm floor")
    if abs(np.vdot(b1_s_zeta, zeta)) > 1e-10:
        raise LowAccuracy("model kernel vector lost orthogonality")

    b_t = np.column_stack([xi, mobius_matrix(lam1, t.matrix) @ xi])
    b_s = np.column_stack([zeta, b1_s_zeta])
    x = np.linalg.solve(b_t.conj().T, b_s.conj().T).conj().T  # B_S · B_T^{-1}
    bound = float(
        max(np.sqrt(8.0 / (beta**2 * (1.0 - np.sqrt(1.0 - beta**2)))), np.sqrt(8.0))
    )
    beta_prime = dim2_lower_bound(mu, beta)
    measured_prime = float(np.linalg.norm(b_t[:, 1]))
    if measured_prime < beta_prime * (1.0 - 1e-9):
        raise LowAccuracy(
            f"measured ||b_1(T)xi|| = {measured_prime:.6f} below promised floor {beta_prime:.6f}"
        )
    params = {
        "route": "dim2-kernel-vector",
        "mu": abs(mu),
        "branchRadius": radius,
        "beta": beta,
        "betaPrime": beta_prime,
        "betaPrimeMeasured": measured_prime,
        "gamma": gamma,
        "inverseBoundSquared": 8.0,
        "searchSamples": report.samples_tried,
        "searchStrategy": report.strategy,
    }
    return _certify(
        x, t.matrix, s, bound, params, resid_tol=defaults.RESID_TOL_FACTOR * 2
    )
