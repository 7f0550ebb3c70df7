"""Representable bounded analytic functions and their jet arithmetic.

A ``FunctionRep`` is anything the functional calculus can consume: it must
produce truncated Taylor expansions (jets) at interior points and values on
the boundary circle.  The public constructors are ``Polynomial``,
``BlaschkeProduct`` (defined in :mod:`msk.blaschke`), ``RationalQuotient``
and ``HermiteData``; sums, differences and products of representations are
themselves representations, which is how compound symbols such as
``psi_j - psi_k`` or ``1 - f*theta_A`` are expressed.

Jets are numpy arrays ``a`` with ``a[i] = f^(i)(z)/i!``.
"""

from __future__ import annotations

import numbers

import numpy as np

from .errors import NodeEvaluationFailure


# ---------------------------------------------------------------------------
# jet helpers


def jet_mul(a: np.ndarray, b: np.ndarray, order: int) -> np.ndarray:
    """Product of two jets truncated at ``order``."""
    out = np.convolve(a[: order + 1], b[: order + 1])[: order + 1]
    if len(out) < order + 1:
        out = np.pad(out, (0, order + 1 - len(out)))
    return out


def jet_div(a: np.ndarray, b: np.ndarray, order: int, cancel: int = 0) -> np.ndarray:
    """Jet of a/b truncated at ``order``.

    ``cancel`` shifts both series down by a common vanishing order; the
    caller asserts (structurally) that both numerator and denominator vanish
    to that order.  The discarded leading numerator coefficients are checked
    to be negligible relative to the retained ones.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if cancel:
        scale = max(np.max(np.abs(a)), 1e-300)
        lead = np.max(np.abs(a[:cancel])) if cancel <= len(a) else 0.0
        if lead > 1e-6 * scale:
            raise NodeEvaluationFailure(
                f"expected vanishing to order {cancel}, leading jet {lead:.3e} vs scale {scale:.3e}"
            )
        a = a[cancel:]
        b = b[cancel:]
    if len(b) == 0 or b[0] == 0:
        raise NodeEvaluationFailure("pole at evaluation node does not cancel")
    a = np.pad(a[: order + 1], (0, max(0, order + 1 - len(a))))
    b = np.pad(b[: order + 1], (0, max(0, order + 1 - len(b))))
    q = np.zeros(order + 1, dtype=complex)
    for i in range(order + 1):
        q[i] = (a[i] - np.dot(q[:i], b[i:0:-1])) / b[0]
    return q


def poly_jet(coeffs: np.ndarray, z: complex, order: int) -> np.ndarray:
    """Jet of a polynomial (ascending coefficients) at z, by Taylor shift."""
    work = np.array(coeffs, dtype=complex)
    out = np.zeros(order + 1, dtype=complex)
    for i in range(order + 1):
        if len(work) == 0:
            break
        # synthetic division of work by (w - z): remainder is the jet coeff
        rem = work[-1]
        quo = np.empty(max(len(work) - 1, 0), dtype=complex)
        for j in range(len(work) - 2, -1, -1):
            quo[j] = rem
            rem = work[j] + rem * z
        out[i] = rem
        work = quo
    return out


def factor_jet(lam: complex, z: complex, order: int) -> np.ndarray:
    """Jet at z of the disk automorphism (w - lam)/(1 - conj(lam)·w).

    Closed form: with d = 1 - conj(lam)·z and r = conj(lam)/d, the k-th
    coefficient is (b(z)·r^k + r^(k-1))/d for k >= 1.
    """
    c = np.conj(lam)
    d = 1.0 - c * z
    out = np.zeros(order + 1, dtype=complex)
    out[0] = (z - lam) / d
    if order >= 1:
        r = c / d
        rk = np.ones(order, dtype=complex)
        for k in range(1, order):
            rk[k] = rk[k - 1] * r
        out[1:] = (out[0] * r * rk + rk) / d
    return out


# ---------------------------------------------------------------------------
# representation classes


class FunctionRep:
    """Base class: jets at interior points, values on the boundary."""

    def jet(self, z: complex, order: int) -> np.ndarray:
        raise NotImplementedError

    def boundary_values(self, points: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def __call__(self, z):
        pts = np.atleast_1d(np.asarray(z, dtype=complex))
        vals = np.array([self.jet(p, 0)[0] for p in pts])
        return vals[0] if np.isscalar(z) or np.asarray(z).shape == () else vals

    # closure under the arithmetic the calculus needs
    def __add__(self, other):
        return _Sum(self, _coerce(other))

    def __radd__(self, other):
        return _Sum(_coerce(other), self)

    def __sub__(self, other):
        return _Sum(self, _Scaled(-1.0, _coerce(other)))

    def __rsub__(self, other):
        return _Sum(_coerce(other), _Scaled(-1.0, self))

    def __mul__(self, other):
        if isinstance(other, numbers.Number):
            return _Scaled(complex(other), self)
        return _Product(self, _coerce(other))

    def __rmul__(self, other):
        if isinstance(other, numbers.Number):
            return _Scaled(complex(other), self)
        return _Product(_coerce(other), self)

    def __neg__(self):
        return _Scaled(-1.0, self)


def _coerce(x) -> FunctionRep:
    if isinstance(x, FunctionRep):
        return x
    if isinstance(x, numbers.Number):
        return Polynomial([complex(x)])
    raise TypeError(f"cannot interpret {type(x).__name__} as a function representation")


class Polynomial(FunctionRep):
    """Polynomial with ascending complex coefficients."""

    def __init__(self, coeffs):
        arr = np.atleast_1d(np.asarray(coeffs, dtype=complex))
        if arr.ndim != 1 or len(arr) == 0:
            raise ValueError("coefficients must be a nonempty 1-d sequence")
        self.coeffs = arr

    @property
    def degree(self) -> int:
        nz = np.nonzero(self.coeffs)[0]
        return int(nz[-1]) if len(nz) else 0

    def jet(self, z, order):
        return poly_jet(self.coeffs, z, order)

    def boundary_values(self, points):
        return np.polynomial.polynomial.polyval(points, self.coeffs)

    def __repr__(self):
        return f"Polynomial(deg={len(self.coeffs) - 1})"


class NewtonPolynomial(FunctionRep):
    """Polynomial kept in Newton form over its own nodes.

    Expansion into the monomial basis is catastrophically ill-conditioned
    for clustered nodes, so interpolants stay in this form; jets are
    computed by Taylor-mode Horner over the node chain.
    """

    def __init__(self, coeffs, nodes):
        self.coeffs = np.asarray(coeffs, dtype=complex)
        self.nodes = [complex(z) for z in nodes]
        if len(self.coeffs) != len(self.nodes):
            raise ValueError("one Newton coefficient per node required")
        if len(self.coeffs) == 0:
            raise ValueError("at least one coefficient required")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def jet(self, z, order):
        out = np.zeros(order + 1, dtype=complex)
        out[0] = self.coeffs[-1]
        for k in range(len(self.coeffs) - 2, -1, -1):
            lin = np.zeros(order + 1, dtype=complex)
            lin[0] = z - self.nodes[k]
            if order >= 1:
                lin[1] = 1.0
            out = jet_mul(out, lin, order)
            out[0] += self.coeffs[k]
        return out

    def boundary_values(self, points):
        return newton_eval_points(self.coeffs, self.nodes, points)

    def eval_matrix(self, t: np.ndarray) -> np.ndarray:
        return newton_eval_matrix(self.coeffs, self.nodes, t)

    def __repr__(self):
        return f"NewtonPolynomial(deg={self.degree})"


class RationalQuotient(FunctionRep):
    """Quotient numerator/denominator with an inner (Blaschke) denominator.

    The quotient is assumed analytic: at zeros of the denominator the
    numerator must vanish to the same order, which jet division verifies.
    """

    def __init__(self, numerator: FunctionRep, denominator):
        self.numerator = _coerce(numerator)
        self.denominator = denominator  # BlaschkeProduct

    def jet(self, z, order):
        cancel = self.denominator.multiplicity_at(z)
        num = self.numerator.jet(z, order + cancel)
        den = self.denominator.jet(z, order + cancel)
        return jet_div(num, den, order, cancel=cancel)

    def boundary_values(self, points):
        den = self.denominator.boundary_values(points)
        vals = self.numerator.boundary_values(points) / den
        if not np.all(np.isfinite(vals)):
            raise NodeEvaluationFailure("quotient unbounded on the boundary grid")
        return vals

    def __repr__(self):
        return f"RationalQuotient({self.numerator!r} / deg-{self.denominator.degree} inner)"


class HermiteData(FunctionRep):
    """A function given by node values and derivative values.

    ``nodes`` maps each (exact) complex node to the list
    ``[u(z), u'(z), u''(z), ...]``; the length of the list is the
    multiplicity served at that node.  Away from its nodes the function is
    represented by its Hermite interpolating polynomial (the canonical coset
    representative).
    """

    def __init__(self, nodes: dict):
        if not nodes:
            raise ValueError("at least one node required")
        self.nodes = {complex(z): np.asarray(v, dtype=complex) for z, v in nodes.items()}

    @property
    def total_multiplicity(self) -> int:
        return sum(len(v) for v in self.nodes.values())

    def jet(self, z, order):
        z = complex(z)
        if z not in self.nodes:
            raise NodeEvaluationFailure(f"no data at node {z}")
        vals = self.nodes[z]
        if order >= len(vals):
            raise NodeEvaluationFailure(
                f"node {z} carries {len(vals)} derivatives, order {order} requested"
            )
        fact = 1.0
        out = np.zeros(order + 1, dtype=complex)
        for k in range(order + 1):
            if k:
                fact *= k
            out[k] = vals[k] / fact
        return out

    def interpolant_nodes(self):
        flat = []
        for z, vals in self.nodes.items():
            flat.extend([z] * len(vals))
        return flat

    def boundary_values(self, points):
        coeffs, nodes = newton_coefficients(self, self.interpolant_nodes())
        return newton_eval_points(coeffs, nodes, points)

    def __repr__(self):
        return f"HermiteData(nodes={len(self.nodes)}, mult={self.total_multiplicity})"


class _Sum(FunctionRep):
    def __init__(self, a, b):
        self.a, self.b = a, b

    def jet(self, z, order):
        return self.a.jet(z, order) + self.b.jet(z, order)

    def boundary_values(self, points):
        return self.a.boundary_values(points) + self.b.boundary_values(points)


class _Product(FunctionRep):
    def __init__(self, a, b):
        self.a, self.b = a, b

    def jet(self, z, order):
        return jet_mul(self.a.jet(z, order), self.b.jet(z, order), order)

    def boundary_values(self, points):
        return self.a.boundary_values(points) * self.b.boundary_values(points)


class _Scaled(FunctionRep):
    def __init__(self, scalar, a):
        self.scalar, self.a = complex(scalar), a

    def jet(self, z, order):
        return self.scalar * self.a.jet(z, order)

    def boundary_values(self, points):
        return self.scalar * self.a.boundary_values(points)


# ---------------------------------------------------------------------------
# confluent Newton interpolation


def group_nodes(nodes) -> list[complex]:
    """Order nodes so that exact repetitions are adjacent (first-seen order)."""
    order: list[complex] = []
    counts: dict[complex, int] = {}
    for z in nodes:
        z = complex(z)
        if z not in counts:
            order.append(z)
            counts[z] = 0
        counts[z] += 1
    flat: list[complex] = []
    for z in order:
        flat.extend([z] * counts[z])
    return flat


def newton_coefficients(u: FunctionRep, nodes) -> tuple[np.ndarray, list[complex]]:
    """Divided-difference (confluent Hermite) coefficients of u at ``nodes``.

    Repeated nodes request derivative jets from ``u``.  Returns the Newton
    coefficients and the grouped node order they refer to.
    """
    flat = group_nodes(nodes)
    n = len(flat)
    mult: dict[complex, int] = {}
    for z in flat:
        mult[z] = mult.get(z, 0) + 1
    jets = {z: u.jet(z, m - 1) for z, m in mult.items()}

    col = np.array([jets[z][0] for z in flat], dtype=complex)
    coeffs = np.empty(n, dtype=complex)
    coeffs[0] = col[0]
    for k in range(1, n):
        new = np.empty(n - k, dtype=complex)
        for i in range(n - k):
            if flat[i + k] == flat[i]:
                new[i] = jets[flat[i]][k]
            else:
                new[i] = (col[i + 1] - col[i]) / (flat[i + k] - flat[i])
        col = new
        coeffs[k] = col[0]
    return coeffs, flat


def newton_eval_points(coeffs: np.ndarray, nodes, points: np.ndarray) -> np.ndarray:
    """Evaluate the Newton-form polynomial at scalar points."""
    pts = np.asarray(points, dtype=complex)
    out = np.full(pts.shape, coeffs[-1], dtype=complex)
    for k in range(len(coeffs) - 2, -1, -1):
        out = out * (pts - nodes[k]) + coeffs[k]
    return out


def newton_eval_matrix(coeffs: np.ndarray, nodes, t: np.ndarray) -> np.ndarray:
    """Evaluate the Newton-form polynomial at a square matrix."""
    n = t.shape[0]
    eye = np.eye(n, dtype=complex)
    out = coeffs[-1] * eye
    for k in range(len(coeffs) - 2, -1, -1):
        out = (t - nodes[k] * eye) @ out + coeffs[k] * eye
    return out


def interpolant(u: FunctionRep, nodes) -> NewtonPolynomial:
    """Hermite interpolant of u at ``nodes`` (repeats request derivatives)."""
    coeffs, flat = newton_coefficients(u, nodes)
    return NewtonPolynomial(coeffs, flat)
