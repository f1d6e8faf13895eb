"""Exception types shared across the package."""


class AnysortError(Exception):
    """Base class for errors raised by this package."""


class InconsistentOrderError(AnysortError):
    """A comparison outcome contradicts the partial order built so far."""


class ResourceLimitError(AnysortError):
    """An enumeration exceeded its configured size guard."""


class SortStateError(AnysortError):
    """The step protocol (next_pair / record_outcome) was violated."""


class NativeEstimateUnavailable(AnysortError):
    """The algorithm has no natural list-shaped internal state."""
