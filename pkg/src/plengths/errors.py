"""Exception types shared across the package."""


class PlengthsError(Exception):
    """Base class for all package errors."""


class GcdNotOneError(PlengthsError, ValueError):
    """Generators have a common divisor greater than 1."""


class NotMinimalError(PlengthsError, ValueError):
    """Some generator is representable from the others."""


class ContainsOneError(PlengthsError, ValueError):
    """1 appears among several generators."""


class DegenerateError(PlengthsError, ValueError):
    """The single generator 1 gives every value a unique trivial factorization."""


class ModulusNotInSemigroupError(PlengthsError, ValueError):
    """Apery modulus must itself belong to the semigroup."""


class NotInSemigroupError(PlengthsError, ValueError):
    """Requested value has no factorization (empty solution set)."""


class ThresholdNotMetError(PlengthsError, ValueError):
    """Closed form only valid above its threshold; caller must fall back."""


class BudgetExceededError(PlengthsError, RuntimeError):
    """Enumeration or search exceeded its configured budget."""


class WindowTooShortError(PlengthsError, ValueError):
    """Sample window too short for the requested operation."""


class NotIdempotentError(PlengthsError, ValueError):
    """Multiplicative congruence class is not closed: a^2 != a mod b."""


class NotInMonoidError(PlengthsError, ValueError):
    """Element is not a non-unit member of the monoid."""


class ConstructionInvalidError(PlengthsError, RuntimeError):
    """A self-verifying construction failed its own product check."""
