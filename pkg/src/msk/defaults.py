"""Shared numerical defaults and the boundary grid.

All tolerances that appear in more than one module live here so that the
test suite and the CLI agree on a single source of truth.
"""

from __future__ import annotations

import os

import numpy as np

# DiskPoint construction rejects |lambda| > 1 - MIN_MODULUS_MARGIN.
MIN_MODULUS_MARGIN = 5e-4

# Largest model-space dimension materialized as a dense matrix.
SIZE_CAP = 64

# Default circle grid for quadrature and sup-norm sampling (MSK_GRID overrides).
DEFAULT_GRID = 4096

# Kernel extraction: singular values below NULL_TOL_FACTOR * sigma_max count as zero.
NULL_TOL_FACTOR = 1e-8

# Agreement tolerance between quotient norms and the Hankel oracle.
CROSS_TOL = 1e-4

# Intertwining residual tolerance scales as RESID_TOL_FACTOR * N.
RESID_TOL_FACTOR = 1e-8

# Corona witness optimization.
CORONA_GRID = 2048
CORONA_DEGREE_MARGIN = 32
GRID_SLACK = 0.05

# Cyclic-vector search.
MAX_SAMPLES = 10_000
DIVISOR_CAP = 4096
KRYLOV_TOL = 1e-10

# Subset enumeration caps.
SUBSET_BUDGET = 4096
GROUP_SIZE_CAP = 4096
PAIR_CHECK_CAP = 256

# C0Instance invariants.
CONTRACTION_TOL = 1e-10
ANNIHILATION_TOL = 1e-9
MINIMALITY_TOL = 1e-8


def boundary_grid_size() -> int:
    """Grid size for boundary sampling; the MSK_GRID env var overrides."""
    raw = os.environ.get("MSK_GRID")
    if raw is None:
        return DEFAULT_GRID
    try:
        n = int(raw)
    except ValueError as exc:
        raise ValueError(f"MSK_GRID must be an integer, got {raw!r}") from exc
    if n < 16:
        raise ValueError(f"MSK_GRID too small: {n}")
    return n


def boundary_grid(n: int | None = None) -> np.ndarray:
    """Uniform points exp(2*pi*i*k/n) on the unit circle."""
    if n is None:
        n = boundary_grid_size()
    return np.exp(2j * np.pi * np.arange(n) / n)
