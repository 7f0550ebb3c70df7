"""Blaschke factors, finite Blaschke products, and scalar separation constants.

Conventions
-----------
A factor is b_lam(z) = (z - lam)/(1 - conj(lam)·z), vanishing at lam, of
modulus one on the unit circle.  The Hardy-space inner product is linear in
the first argument: <f, g> = sum a_n·conj(b_n) = mean of f·conj(g) on the
circle.  The Szego kernel is kappa_lam(z) = 1/(1 - conj(lam)·z) and the
normalized companion is e_lam = (1 - |lam|^2)·kappa_lam.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import defaults
from .errors import DuplicatePoint, LowAccuracy, PointOutsideDisk
from .funrep import FunctionRep, factor_jet, jet_mul


@dataclass(frozen=True)
class DiskPoint:
    """A point strictly inside the unit disk.

    Rejects moduli above 1 - MIN_MODULUS_MARGIN: kernels at near-boundary
    points make every Gram matrix downstream numerically singular.
    """

    value: complex

    def __post_init__(self):
        v = complex(self.value)
        object.__setattr__(self, "value", v)
        if abs(v) > 1.0 - defaults.MIN_MODULUS_MARGIN:
            raise PointOutsideDisk(
                f"|{v}| = {abs(v):.6f} exceeds {1.0 - defaults.MIN_MODULUS_MARGIN}"
            )


def _as_value(p) -> complex:
    return p.value if isinstance(p, DiskPoint) else DiskPoint(complex(p)).value


def eval_factor(lam, z):
    """b_lam(z); vectorized over z, defined on the closed disk."""
    lam = _as_value(lam)
    z = np.asarray(z, dtype=complex)
    return (z - lam) / (1.0 - np.conj(lam) * z)


def eval_kernel(lam, z, normalized: bool = False):
    """Szego kernel kappa_lam(z), or e_lam(z) = (1-|lam|^2)·kappa_lam(z)."""
    lam = _as_value(lam)
    z = np.asarray(z, dtype=complex)
    k = 1.0 / (1.0 - np.conj(lam) * z)
    return (1.0 - abs(lam) ** 2) * k if normalized else k


class BlaschkeProduct(FunctionRep):
    """Finite Blaschke product given by its ordered zero list.

    Repetitions are allowed; the empty product is the constant 1.  The zero
    order is significant for the partial products ``alpha(k)`` and is under
    caller control throughout.
    """

    def __init__(self, zeros=()):
        pts = tuple(z if isinstance(z, DiskPoint) else DiskPoint(complex(z)) for z in zeros)
        self.zeros = pts
        self.values = np.array([p.value for p in pts], dtype=complex)

    @property
    def degree(self) -> int:
        return len(self.zeros)

    def __len__(self):
        return len(self.zeros)

    def __eq__(self, other):
        return isinstance(other, BlaschkeProduct) and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash(tuple(self.values.tolist()))

    def __repr__(self):
        return f"BlaschkeProduct(degree={self.degree})"

    # -- function evaluation ------------------------------------------------

    def eval(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.ones_like(z)
        for lam in self.values:
            out = out * (z - lam) / (1.0 - np.conj(lam) * z)
        return out

    def boundary_values(self, points):
        return self.eval(points)

    def jet(self, z, order):
        out = np.zeros(order + 1, dtype=complex)
        out[0] = 1.0
        for lam in self.values:
            out = jet_mul(out, factor_jet(lam, z, order), order)
        return out

    def multiplicity_at(self, z) -> int:
        """Number of zeros exactly equal to z (bitwise complex equality)."""
        z = complex(z)
        return int(np.sum(self.values == z))

    # -- derived sub-products ----------------------------------------------

    def psi(self, j: int) -> "BlaschkeProduct":
        """The degree-(N-1) sub-product omitting zero index j (0-based)."""
        if not 0 <= j < self.degree:
            raise IndexError(f"zero index {j} out of range for degree {self.degree}")
        return BlaschkeProduct(self.zeros[:j] + self.zeros[j + 1 :])

    def alpha(self, k: int) -> "BlaschkeProduct":
        """Partial product of the first k factors; alpha(0) is constant 1."""
        if not 0 <= k <= self.degree:
            raise IndexError(f"partial-product length {k} out of range")
        return BlaschkeProduct(self.zeros[:k])

    def subproduct(self, indices) -> "BlaschkeProduct":
        return BlaschkeProduct(tuple(self.zeros[i] for i in indices))

    def concat(self, other: "BlaschkeProduct") -> "BlaschkeProduct":
        return BlaschkeProduct(self.zeros + other.zeros)

    def divides(self, other: "BlaschkeProduct") -> bool:
        """Zero multiset containment (exact values)."""
        mine = _multiset(self.values)
        theirs = _multiset(other.values)
        return all(theirs.get(z, 0) >= m for z, m in mine.items())

    def distinct_zeros(self) -> list[tuple[complex, int]]:
        """Distinct zero values with multiplicities, in first-seen order."""
        out: list[tuple[complex, int]] = []
        seen: dict[complex, int] = {}
        for z in self.values:
            z = complex(z)
            if z in seen:
                seen[z] += 1
                for i, (w, _) in enumerate(out):
                    if w == z:
                        out[i] = (w, seen[z])
            else:
                seen[z] = 1
                out.append((z, 1))
        return out


def _multiset(values) -> dict[complex, int]:
    out: dict[complex, int] = {}
    for z in values:
        z = complex(z)
        out[z] = out.get(z, 0) + 1
    return out


def product_of(family) -> BlaschkeProduct:
    """Concatenate a family of Blaschke products in order."""
    zeros: tuple = ()
    for theta in family:
        zeros = zeros + tuple(theta.zeros)
    return BlaschkeProduct(zeros)


def pairwise_coprime(family) -> bool:
    seen: set[complex] = set()
    for theta in family:
        vals = {complex(z) for z in theta.values}
        if vals & seen:
            return False
        seen |= vals
    return True


# ---------------------------------------------------------------------------
# inner products


def factor_gram(lj, lk) -> complex:
    """<b_j, b_k> in closed form: (1 + lj·conj(lk) - |lj|^2 - |lk|^2)/(1 - conj(lj)·lk)."""
    a = _as_value(lj)
    b = _as_value(lk)
    return (1.0 + a * np.conj(b) - abs(a) ** 2 - abs(b) ** 2) / (1.0 - np.conj(a) * b)


def factor_gram_quadrature(lj, lk, grid: int | None = None, check: bool = True) -> complex:
    """<b_j, b_k> by FFT-grade circle quadrature; the independent oracle.

    With ``check`` the grid is doubled and the results must agree to 1e-10,
    otherwise LowAccuracy is raised.
    """
    a = _as_value(lj)
    b = _as_value(lk)

    def approx(n):
        t = defaults.boundary_grid(n)
        return complex(np.mean(eval_factor(a, t) * np.conj(eval_factor(b, t))))

    n = grid if grid is not None else defaults.boundary_grid_size()
    v1 = approx(n)
    if check:
        v2 = approx(2 * n)
        if abs(v1 - v2) > 1e-10:
            raise LowAccuracy(f"quadrature unstable: doubling moved result by {abs(v1 - v2):.3e}")
    return v1


def boundary_norm_squared(values: np.ndarray) -> float:
    """Mean of |f|^2 over a uniform circle grid (H^2 norm squared)."""
    return float(np.mean(np.abs(values) ** 2))


# ---------------------------------------------------------------------------
# separation constants


def eta_constant(theta: BlaschkeProduct) -> float:
    """sup over ordered zero pairs of |b_j(lam_k)|^(1/2) / (1 - max|.|^2)^(1/2).

    Diagonal pairs contribute 0 (b vanishes at its own zero), so a single
    zero gives 0.
    """
    vals = theta.values
    n = len(vals)
    if n <= 1:
        return 0.0
    best = 0.0
    for j in range(n):
        for k in range(n):
            num = abs(eval_factor(vals[j], vals[k])) ** 0.5
            den = (1.0 - max(abs(vals[j]), abs(vals[k])) ** 2) ** 0.5
            best = max(best, num / den)
    return best


def carleson_constant(points) -> float:
    """inf over k of prod_{j != k} |b_j(lam_k)| for pairwise distinct points."""
    vals = np.array([_as_value(p) for p in points], dtype=complex)
    if len(set(vals.tolist())) != len(vals):
        raise DuplicatePoint("Carleson condition requires pairwise distinct points")
    if len(vals) == 1:
        return 1.0
    best = np.inf
    for k in range(len(vals)):
        prod = 1.0
        for j in range(len(vals)):
            if j != k:
                prod *= abs(eval_factor(vals[j], vals[k]))
        best = min(best, prod)
    return float(best)


def delta_constant(family) -> float:
    """inf over factors and distinct-index zero pairs of |b_lam(mu)|^(1/2).

    A repeated zero inside one factor forces 0.  If no factor contains a
    pair the infimum runs over the empty set and is taken to be 1; with that
    convention all-singleton families report full separation.
    """
    best = np.inf
    for theta in family:
        vals = theta.values
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                best = min(best, abs(eval_factor(vals[i], vals[j])) ** 0.5)
    return 1.0 if not np.isfinite(best) else float(best)


@dataclass(frozen=True)
class SequenceConstants:
    """eta/delta separation constants plus the classical Carleson constant."""

    eta: float
    delta: float
    carleson: float | None

    def __post_init__(self):
        if self.eta < 0 or self.delta < 0:
            raise ValueError("constants must be nonnegative")
        if self.carleson is not None and not 0.0 <= self.carleson <= 1.0 + 1e-12:
            raise ValueError("Carleson constant must lie in [0, 1]")


def sequence_constants(family) -> SequenceConstants:
    """Aggregate eta (max over factors, within-factor pairs), delta, and the
    classical Carleson constant of all zeros when they are pairwise distinct."""
    eta = max((eta_constant(theta) for theta in family), default=0.0)
    delta = delta_constant(family)
    all_zeros = [z for theta in family for z in theta.values]
    try:
        car = carleson_constant(all_zeros) if all_zeros else None
    except DuplicatePoint:
        car = None
    return SequenceConstants(eta=eta, delta=delta, carleson=car)


# ---------------------------------------------------------------------------
# JSON zero lists


def zeros_to_json(theta: BlaschkeProduct) -> list[dict]:
    """Zeros as {re, im, mult} records, consecutive equal values grouped."""
    out: list[dict] = []
    for z in theta.values:
        z = complex(z)
        if out and complex(out[-1]["re"], out[-1]["im"]) == z:
            out[-1]["mult"] += 1
        else:
            out.append({"re": z.real, "im": z.imag, "mult": 1})
    return out


def zeros_from_json(records) -> BlaschkeProduct:
    zeros: list[complex] = []
    for rec in records:
        mult = int(rec.get("mult", 1))
        if mult < 1:
            raise ValueError(f"mult must be >= 1, got {mult}")
        zeros.extend([complex(rec["re"], rec["im"])] * mult)
    return BlaschkeProduct(zeros)
