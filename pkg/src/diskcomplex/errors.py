"""Exception hierarchy.

Two families, matching the CLI exit-code contract:

* DomainError (exit code 2): the caller violated a documented precondition,
  e.g. asked for the curve class of a word that reduces to the identity or
  for the dimension formula outside its hypothesis range.  These are the
  user's problem and carry an actionable message.

* InternalInvariantError (exit code 1): a structural invariant of the
  computation itself failed (odd linked-pair count, Euler characteristic not
  additive under a split, ...).  These are bugs or corrupted inputs and are
  never silently swallowed.
"""

__all__ = [
    "DomainError",
    "TrivialWordError",
    "IntervalError",
    "HypothesisError",
    "CurveError",
    "UnsupportedCut",
    "BudgetError",
    "SchemaError",
    "InternalInvariantError",
]


class DomainError(ValueError):
    """A documented precondition was violated by the caller."""


class TrivialWordError(DomainError):
    """Word reduces to the identity; it names no curve class."""


class IntervalError(DomainError):
    """Malformed interval: empty, out of range, or not contiguous."""


class HypothesisError(DomainError):
    """Surface outside the hypothesis window of the requested formula."""


class CurveError(DomainError):
    """A curve argument fails its precondition (not a disk-bounding class,
    not primitive where primitivity is required, ...)."""


class UnsupportedCut(DomainError):
    """Requested cut system lies outside the supported fragment."""


class BudgetError(DomainError):
    """Enumeration exceeded its hard budget; results would be incomplete."""


class SchemaError(DomainError):
    """Persisted document failed schema or version validation."""


class InternalInvariantError(AssertionError):
    """An internal consistency check failed; indicates a bug, not misuse."""
