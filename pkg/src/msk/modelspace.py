"""Model spaces H(theta), compressed shifts, and the H-infinity calculus.

The compressed shift S(theta) is materialized in the Takenaka-Malmquist
orthonormal basis

    phi_k(z) = sqrt(1-|lam_k|^2)/(1 - conj(lam_k)·z) · prod_{j<k} b_{lam_j}(z),

in which it is lower triangular with the zeros on the diagonal and
subdiagonal entries sqrt(1-|lam_j|^2)·sqrt(1-|lam_k|^2)·prod(-conj(lam_i)).
The closed form is validated against the annihilation, contraction and
eigenvalue invariants at construction (and against circle quadrature in the
test suite).

Two independent evaluation routes coexist on purpose:

* ``apply_function`` computes u(T) through the Hermite interpolant of u at
  the zeros of the minimal function (the quotient-algebra route);
* ``inner_matrix`` multiplies Moebius resolvent factors directly and is the
  oracle for inner functions (and the way annihilation residuals are
  measured, where the interpolation route would be trivially zero).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import defaults
from .blaschke import BlaschkeProduct
from .errors import DegenerateKernel, LowAccuracy, SizeCapExceeded
from .funrep import (
    FunctionRep,
    NewtonPolynomial,
    Polynomial,
    newton_coefficients,
    newton_eval_matrix,
)


# ---------------------------------------------------------------------------
# construction


def shift_matrix(theta: BlaschkeProduct) -> np.ndarray:
    """Matrix of the compressed shift in the Takenaka-Malmquist basis."""
    vals = theta.values
    n = len(vals)
    a = np.zeros((n, n), dtype=complex)
    w = np.sqrt(1.0 - np.abs(vals) ** 2)
    for k in range(n):
        a[k, k] = vals[k]
        prod = 1.0 + 0j
        for j in range(k + 1, n):
            a[j, k] = w[j] * w[k] * prod
            prod *= -np.conj(vals[j])
    return a


def tm_basis_values(theta: BlaschkeProduct, points: np.ndarray) -> np.ndarray:
    """Takenaka-Malmquist basis functions sampled at ``points``; shape (N, len)."""
    vals = theta.values
    pts = np.asarray(points, dtype=complex)
    out = np.empty((len(vals), len(pts)), dtype=complex)
    running = np.ones(len(pts), dtype=complex)
    for k, lam in enumerate(vals):
        out[k] = np.sqrt(1.0 - abs(lam) ** 2) / (1.0 - np.conj(lam) * pts) * running
        running = running * (pts - lam) / (1.0 - np.conj(lam) * pts)
    return out


def kernel_coordinates(theta: BlaschkeProduct, lam: complex) -> np.ndarray:
    """Coordinates of the Szego kernel kappa_lam in the TM basis.

    Requires theta(lam) = 0 so that kappa_lam lies in H(theta); the j-th
    coordinate is conj(phi_j(lam)).
    """
    phi = tm_basis_values(theta, np.array([complex(lam)]))[:, 0]
    return np.conj(phi)


@dataclass(frozen=True)
class ModelOperator:
    """H(theta) with its orthonormal basis tag and the matrix of S(theta)."""

    theta: BlaschkeProduct
    matrix: np.ndarray
    basis: str = "takenaka-malmquist"

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def build_model_operator(theta: BlaschkeProduct, size_cap: int = defaults.SIZE_CAP) -> ModelOperator:
    """Compressed shift on H(theta); validates the class-C0 invariants."""
    n = theta.degree
    if n < 1:
        raise ValueError("model space requires at least one zero")
    if n > size_cap:
        raise SizeCapExceeded(f"degree {n} exceeds cap {size_cap}")
    a = shift_matrix(theta)
    top = np.linalg.svd(a, compute_uv=False)[0]
    if top > 1.0 + defaults.CONTRACTION_TOL:
        raise LowAccuracy(f"shift matrix not a contraction: sigma_max = {top}")
    resid = spectral_norm(inner_matrix(theta, a))
    if resid > defaults.ANNIHILATION_TOL:
        raise LowAccuracy(f"theta(S) residual {resid:.3e} above {defaults.ANNIHILATION_TOL}")
    return ModelOperator(theta=theta, matrix=a)


@lru_cache(maxsize=512)
def _cached_shift(values: tuple) -> np.ndarray:
    m = build_model_operator(BlaschkeProduct(values)).matrix
    m.setflags(write=False)
    return m


def model_matrix(theta: BlaschkeProduct) -> np.ndarray:
    """Cached S(theta) matrix."""
    return _cached_shift(tuple(theta.values.tolist()))


# ---------------------------------------------------------------------------
# functional calculus


def mobius_matrix(lam: complex, t: np.ndarray) -> np.ndarray:
    """b_lam(T) = (T - lam)·(I - conj(lam)·T)^(-1) for a contraction T."""
    n = t.shape[0]
    eye = np.eye(n, dtype=complex)
    return np.linalg.solve(eye - np.conj(lam) * t, t - lam * eye)


def inner_matrix(theta: BlaschkeProduct, t: np.ndarray) -> np.ndarray:
    """theta(T) as an ordered product of Moebius factors."""
    n = t.shape[0]
    out = np.eye(n, dtype=complex)
    for lam in theta.values:
        out = mobius_matrix(lam, t) @ out
    return out


def spectral_norm(a: np.ndarray) -> float:
    if a.size == 0:
        return 0.0
    return float(np.linalg.svd(a, compute_uv=False)[0])


def apply_function(u: FunctionRep, t: np.ndarray, theta: BlaschkeProduct) -> np.ndarray:
    """u(T) for any T annihilated by theta.

    Computes the Hermite interpolant p of u at the zeros of theta (with
    multiplicities) and returns p(T); u - p lies in theta·H-infinity so the
    result equals u(T).  Polynomials of degree < deg(theta) are evaluated
    directly.
    """
    n = theta.degree
    if isinstance(u, Polynomial) and u.degree < n:
        eye = np.eye(t.shape[0], dtype=complex)
        out = u.coeffs[-1] * eye
        for c in u.coeffs[-2::-1]:
            out = t @ out + c * eye
        return out
    if isinstance(u, NewtonPolynomial) and u.degree < n:
        return u.eval_matrix(t)
    coeffs, nodes = newton_coefficients(u, theta.values.tolist())
    return newton_eval_matrix(coeffs, nodes, t)


def quotient_norm(u: FunctionRep, theta: BlaschkeProduct) -> float:
    """Coset norm of u modulo theta·H-infinity, as the norm of u(S(theta))."""
    return spectral_norm(apply_function(u, model_matrix(theta), theta))


def hankel_quotient_norm(
    u: FunctionRep,
    theta: BlaschkeProduct,
    m: int,
    check: bool = True,
    cross_tol: float = defaults.CROSS_TOL,
) -> float:
    """Nehari-route oracle for the quotient norm.

    Largest singular value of the m-by-m Hankel matrix of the negative
    Fourier coefficients of conj(theta)·u sampled on a 2m-point circle grid.
    Doubling m must move the value by less than ``cross_tol``.
    """
    if m < 4 * max(theta.degree, 1):
        raise ValueError(f"truncation {m} too small; need at least 4·deg = {4 * theta.degree}")

    def at(size: int) -> float:
        grid = 2 * size
        pts = defaults.boundary_grid(grid)
        symbol = np.conj(theta.boundary_values(pts)) * u.boundary_values(pts)
        coeff = np.fft.fft(symbol) / grid
        # index -r lives at position grid - r
        neg = coeff[::-1]  # neg[r-1] = coeff[-r], r = 1..grid
        idx = np.add.outer(np.arange(size), np.arange(size))
        return spectral_norm(neg[idx])

    value = at(m)
    if check:
        doubled = at(2 * m)
        if abs(doubled - value) > cross_tol:
            raise LowAccuracy(
                f"Hankel truncation unstable: {value:.8f} -> {doubled:.8f} on doubling"
            )
    return value


# ---------------------------------------------------------------------------
# kernels of divisor evaluations


def kernel_basis(
    t: np.ndarray,
    phi: BlaschkeProduct,
    null_tol_factor: float = defaults.NULL_TOL_FACTOR,
) -> np.ndarray:
    """Orthonormal basis of ker phi(T) as columns.

    The dimension is known a priori (deg phi); the singular-value threshold
    only confirms it.  Raises DegenerateKernel when the spectrum disagrees.
    """
    n = t.shape[0]
    d = phi.degree
    if d == 0:
        return np.zeros((n, 0), dtype=complex)
    if d > n:
        raise DegenerateKernel(f"divisor degree {d} exceeds dimension {n}")
    a = inner_matrix(phi, t)
    _, sigma, vh = np.linalg.svd(a)
    cutoff = null_tol_factor * max(sigma[0], 1e-300)
    small = int(np.sum(sigma <= cutoff))
    if d == n:
        if sigma[0] > cutoff and sigma[0] > null_tol_factor:
            raise DegenerateKernel(
                f"expected full kernel, largest singular value {sigma[0]:.3e}"
            )
        return np.eye(n, dtype=complex)
    if small != d:
        raise DegenerateKernel(
            f"ker phi(T): expected dimension {d}, singular values flag {small} "
            f"(sigma = {np.array2string(sigma, precision=3)})"
        )
    return vh[n - d :].conj().T


def restricted_norm(
    u: FunctionRep,
    t: np.ndarray,
    phi: BlaschkeProduct,
    theta: BlaschkeProduct,
) -> float:
    """Norm of u(T) restricted to ker phi(T), for an inner divisor phi."""
    if not phi.divides(theta):
        raise ValueError("phi must divide theta (zero multiset containment)")
    k = kernel_basis(t, phi)
    return spectral_norm(apply_function(u, t, theta) @ k)


@dataclass(frozen=True)
class SpanReport:
    ok: bool
    rank: int
    expected: int
    smallest_kept: float


def kernel_span_check(t: np.ndarray, family) -> SpanReport:
    """Do the kernels of the family members jointly span the whole space?

    True exactly when the least common inner multiple of the family is the
    minimal function; a missing zero shows up as a rank deficit.
    """
    n = t.shape[0]
    columns = [kernel_basis(t, theta) for theta in family]
    stacked = np.hstack(columns) if columns else np.zeros((n, 0), dtype=complex)
    if stacked.shape[1] == 0:
        return SpanReport(ok=(n == 0), rank=0, expected=n, smallest_kept=0.0)
    sigma = np.linalg.svd(stacked, compute_uv=False)
    tol = defaults.NULL_TOL_FACTOR * sigma[0]
    rank = int(np.sum(sigma > tol))
    kept = float(sigma[rank - 1]) if rank else 0.0
    return SpanReport(ok=(rank == n), rank=rank, expected=n, smallest_kept=kept)


# ---------------------------------------------------------------------------
# operator instances


@dataclass(frozen=True)
class C0Instance:
    """A concrete matrix with a prescribed finite Blaschke minimal function."""

    matrix: np.ndarray
    theta: BlaschkeProduct
    provenance: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def psi_norm(self, j: int | None = None) -> float:
        """Norm of psi_j(T) via the Moebius route; defaults to the last index."""
        idx = self.theta.degree - 1 if j is None else j
        return spectral_norm(inner_matrix(self.theta.psi(idx), self.matrix))


def model_instance(theta: BlaschkeProduct) -> C0Instance:
    return C0Instance(
        matrix=model_matrix(theta).copy(),
        theta=theta,
        provenance={"generator": "modelItself"},
    )
