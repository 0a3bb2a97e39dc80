"""Exception types shared across the package.

Input-range violations (outside the signed 64-bit window) raise the
builtin OverflowError instead; everything domain-specific lives here.
"""


class Dioph3Error(Exception):
    """Base class for all domain errors raised by this package."""


class NoSolutionError(Dioph3Error):
    """The equation or congruence has no integer solution at all."""


class NoNonnegativeError(Dioph3Error):
    """Integer solutions exist, but none with every component nonnegative."""


class NotCoprimeError(Dioph3Error):
    """An operation requiring coprime arguments received gcd > 1."""


class ExactHalfError(Dioph3Error):
    """Nearest-integer rounding is undefined for an exact half-integer."""


class BudgetExceededError(Dioph3Error):
    """The requested computation exceeds its iteration budget."""


class ZeroDenominatorError(Dioph3Error):
    """Linear-combination coefficients sum to zero."""


class NotIntegralError(Dioph3Error):
    """A combined triple has a component that is not an exact integer."""


class NegativeComponentError(Dioph3Error):
    """A combined triple has a negative component."""
