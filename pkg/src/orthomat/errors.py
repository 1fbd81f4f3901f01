"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class OrthomatError(Exception):
    """Base class for all package-specific errors."""


class ShapeMismatch(OrthomatError):
    """Operands have incompatible dimensions."""


class NormMismatch(OrthomatError):
    """Operands carry different norm descriptors."""


class NotHermitian(OrthomatError):
    """Matrix fails the Hermitian symmetry check."""


class NotPsd(OrthomatError):
    """Matrix has an eigenvalue below the positivity floor."""


class NotProjection(OrthomatError):
    """Matrix is not a Hermitian idempotent."""


class NotUnit(OrthomatError):
    """Vector is not normalized to unit Euclidean length."""


class ZeroOperator(OrthomatError):
    """Operation undefined for the zero matrix."""


class HypothesisViolated(OrthomatError):
    """A stated precondition on the operands does not hold numerically."""


class ComplexFieldUnsupported(OrthomatError):
    """Relation is only defined over the real field."""


class PreconditionUnmet(OrthomatError):
    """A prerequisite check (e.g. an earlier relation) did not hold."""


class TheoremViolation(OrthomatError):
    """A guaranteed implication failed decisively; indicates a bug.

    Carries the evidence needed to replay the failure.
    """

    def __init__(self, message: str, evidence: dict | None = None):
        super().__init__(message)
        self.evidence = evidence or {}


class CriterionMismatch(OrthomatError):
    """Two independent deciders disagreed decisively on the same query."""

    def __init__(self, message: str, margins: dict | None = None):
        super().__init__(message)
        self.margins = margins or {}


class BadKind(OrthomatError):
    """Unknown generator kind."""


class BadSuite(OrthomatError):
    """Unknown suite name."""


class DegenerateZeroSet(OrthomatError):
    """The quadratic-form zero set does not meet the unit sphere."""
