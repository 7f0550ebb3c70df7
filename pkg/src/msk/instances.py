"""Generation, validation and serialization of operator instances.

The generators manufacture matrices with a prescribed minimal function by
conjugating the compressed shift: similarity preserves the minimal function
and class membership, and a unitary conjugation preserves the contraction
property exactly.  Non-unitary conjugations are repaired back to the
contraction regime by shrinking the singular-value spread of the conjugator
(never by rescaling the matrix itself, which would move the eigenvalues and
hence change the minimal function).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import defaults
from .blaschke import BlaschkeProduct
from .errors import ContractionRepairFailed
from .modelspace import C0Instance, inner_matrix, model_matrix, spectral_norm

KINDS = ("modelItself", "unitaryConjugate", "invertibleConjugate", "diagonalIfDistinct")


@dataclass(frozen=True)
class GeneratorSpec:
    """Recipe for one instance: minimal function, conjugator conditioning, seed."""

    theta: BlaschkeProduct
    conditioning: float = 1.0
    seed: int = 0
    kind: str = "unitaryConjugate"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}; choose from {KINDS}")
        if self.conditioning < 1.0:
            raise ValueError("conditioning must be >= 1")
        # conditioning 1 admits no spread: force the unitary generator
        if self.kind == "invertibleConjugate" and self.conditioning == 1.0:
            object.__setattr__(self, "kind", "unitaryConjugate")


def haar_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(g)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def _conjugator(n: int, conditioning: float, rng: np.random.Generator, spread_exp: float) -> np.ndarray:
    q1 = haar_unitary(n, rng)
    q2 = haar_unitary(n, rng)
    if n == 1:
        return q1 @ q2
    sing = np.logspace(0.0, -np.log10(conditioning) * spread_exp, n)
    return q1 @ np.diag(sing) @ q2


def generate(spec: GeneratorSpec) -> C0Instance:
    """Produce a validated instance with minimal function spec.theta."""
    theta = spec.theta
    n = theta.degree
    base = model_matrix(theta)

    if spec.kind == "modelItself":
        return C0Instance(
            matrix=base.copy(),
            theta=theta,
            provenance={"generator": "modelItself", "seed": spec.seed, "conditioning": 1.0},
        )

    if spec.kind == "diagonalIfDistinct":
        vals = theta.values
        if len(set(vals.tolist())) != n:
            raise ValueError("diagonal generator requires pairwise distinct zeros")
        return C0Instance(
            matrix=np.diag(vals),
            theta=theta,
            provenance={"generator": "diagonalIfDistinct", "seed": spec.seed, "conditioning": 1.0},
        )

    rng = np.random.default_rng(spec.seed)
    for attempt in range(16):
        if spec.kind == "unitaryConjugate":
            q = haar_unitary(n, rng)
            mat = q @ base @ q.conj().T
            achieved = 1.0
            exponent = 0.0
        else:
            # shrink the singular-value spread geometrically until the
            # conjugate is a contraction; directions stay fixed per attempt
            hi = 1.0
            mat = None
            achieved = 1.0
            exponent = 0.0
            seed_state = rng.bit_generator.state
            for _ in range(60):
                rng.bit_generator.state = seed_state
                v = _conjugator(n, spec.conditioning, rng, hi)
                cand = v @ base @ np.linalg.inv(v)
                if spectral_norm(cand) <= 1.0 + defaults.CONTRACTION_TOL:
                    mat = cand
                    exponent = hi
                    achieved = np.linalg.cond(v)
                    break
                hi /= 2.0
            if mat is None:
                rng.bit_generator.state = seed_state
                q = haar_unitary(n, rng) @ haar_unitary(n, rng)
                mat = q @ base @ q.conj().T
                achieved = 1.0
                exponent = 0.0

        inst = C0Instance(
            matrix=mat,
            theta=theta,
            provenance={
                "generator": spec.kind,
                "seed": spec.seed,
                "conditioning": float(spec.conditioning),
                "conditioningAchieved": float(achieved),
                "spreadExponent": float(exponent),
                "attempt": attempt,
            },
        )
        if validate(inst).ok:
            return inst
    raise ContractionRepairFailed(
        f"no contraction with intact minimal function after 16 attempts (theta degree {n})"
    )


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class ValidationClause:
    name: str
    passed: bool
    measured: float
    bound: float


@dataclass(frozen=True)
class ValidationReport:
    clauses: tuple

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.clauses)

    def failing(self) -> list[str]:
        return [c.name for c in self.clauses if not c.passed]


def krylov_sigma_min(t: np.ndarray, xi: np.ndarray) -> float:
    n = t.shape[0]
    cols = np.empty((n, n), dtype=complex)
    v = xi.astype(complex)
    for k in range(n):
        cols[:, k] = v
        v = t @ v
    return float(np.linalg.svd(cols, compute_uv=False)[-1])


def best_krylov_sigma(t: np.ndarray, samples: int = 8, seed: int = 0) -> float:
    """Largest Krylov smallest-singular-value over a few sampled vectors."""
    n = t.shape[0]
    rng = np.random.default_rng(seed)
    best = 0.0
    for _ in range(samples):
        xi = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        xi /= np.linalg.norm(xi)
        best = max(best, krylov_sigma_min(t, xi))
    return best


def validate(inst: C0Instance) -> ValidationReport:
    """Re-check every instance invariant; report measured residuals per clause."""
    t = inst.matrix
    theta = inst.theta
    clauses = []

    top = spectral_norm(t)
    clauses.append(
        ValidationClause("contraction", top <= 1.0 + defaults.CONTRACTION_TOL, top, 1.0 + defaults.CONTRACTION_TOL)
    )

    resid = spectral_norm(inner_matrix(theta, t))
    clauses.append(
        ValidationClause("annihilation", resid <= defaults.ANNIHILATION_TOL, resid, defaults.ANNIHILATION_TOL)
    )

    worst = np.inf
    for j in range(theta.degree):
        worst = min(worst, spectral_norm(inner_matrix(theta.psi(j), t)))
    worst = 1.0 if theta.degree == 0 else worst
    clauses.append(
        ValidationClause("minimality", worst > defaults.MINIMALITY_TOL, float(worst), defaults.MINIMALITY_TOL)
    )

    sigma = best_krylov_sigma(t)
    clauses.append(
        ValidationClause("multiplicity-free", sigma > defaults.KRYLOV_TOL, sigma, defaults.KRYLOV_TOL)
    )

    return ValidationReport(clauses=tuple(clauses))
