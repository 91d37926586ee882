"""Exception hierarchy shared by every module of the package."""


class DomainError(ValueError):
    """Base class for errors caused by inputs outside an operation's domain."""


class RadicandMismatch(DomainError):
    """Two surds with different radicands were combined."""


class NonPositiveDiscriminant(DomainError):
    """A**2 + 4*B <= 0, so the characteristic roots are not distinct reals."""


class IrrationalCoefficients(DomainError):
    """Roots or coefficients do not produce a recurrence over the rationals."""


class RootOrderError(DomainError):
    """The roots were not supplied with x_minus < x_plus."""


class ZeroDominantCoefficient(DomainError):
    """The coefficient on the dominant root vanishes."""


class ZeroTerm(DomainError, ZeroDivisionError):
    """A sequence term used as a divisor is zero."""


class IndexOutOfRange(DomainError):
    """An index lies outside the range an operation is defined on."""


class DegenerateIndex(IndexOutOfRange):
    """k = 0 requested without the permissive flag."""


class ConsistencyError(ArithmeticError):
    """An internal cross-check between two computations disagreed.

    Reaching this always signals a bug in the arithmetic, never bad input.
    """


class IrrationalResidue(ConsistencyError):
    """A closed-form evaluation failed to collapse to a rational number."""
