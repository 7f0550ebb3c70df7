"""Exception types raised by the library.

Names follow the operation contracts; every error carries a message with
the measured quantities that triggered it.
"""

from __future__ import annotations


class MskError(Exception):
    """Base class for all library errors."""


class PointOutsideDisk(MskError, ValueError):
    """A point violates the open-disk margin required at construction."""


class DuplicatePoint(MskError, ValueError):
    """Distinct points were required but two coincide."""


class SizeCapExceeded(MskError, ValueError):
    """Requested model-space dimension exceeds the dense-matrix cap."""


class LowAccuracy(MskError):
    """A self-check (grid doubling, residual) exceeded its tolerance."""


class NodeEvaluationFailure(MskError):
    """A function could not supply the value/derivatives needed at a node."""


class DegenerateKernel(MskError):
    """ker phi(T) does not have the dimension C0 theory prescribes."""


class ThresholdUnreachable(MskError):
    """The requested search threshold exceeds the attainable supremum."""


class SearchExhausted(MskError):
    """Sampling budget spent without a qualifying vector.

    Carries the best-so-far report in ``report``.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class SingularBasis(MskError):
    """The alpha-basis matrix is numerically singular (vector not cyclic)."""


class HypothesisViolated(MskError):
    """A theorem hypothesis failed; ``clause`` names the failing inequality."""

    def __init__(self, clause: str, message: str = ""):
        super().__init__(f"{clause}: {message}" if message else clause)
        self.clause = clause


class NotApplicable(MskError):
    """The closed-form bound is undefined for these parameters."""


class NotCoprime(MskError, ValueError):
    """Inner functions share a zero where coprimality is required."""


class OptimizationStalled(MskError):
    """Witness search ended above the certified optimum times the slack."""


class GroupLawViolation(MskError):
    """A group identity failed numerically; names the offending pair."""


class NotPositiveDefinite(MskError):
    """Group averaging produced a non-positive operator (broken upstream)."""


class ContractionRepairFailed(MskError):
    """Could not repair a conjugated instance to a contraction."""


class ParseError(MskError, ValueError):
    """Malformed input file or literal."""
