"""Exception types raised across the package."""


class CherednikError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(CherednikError, ZeroDivisionError):
    pass


class IncompatibleField(CherednikError, ValueError):
    """Operands live in cyclotomic fields of different order."""


class IncompatibleRing(CherednikError, ValueError):
    """Polynomials disagree on the number of variables or on r."""


class IncompatibleGroup(CherednikError, ValueError):
    pass


class InvalidGroup(CherednikError, ValueError):
    """(r, p, n) does not describe a group G(r,p,n)."""


class NotDivisible(CherednikError, ArithmeticError):
    """Exact division by a linear form left a nonzero remainder."""


class DegreeMismatch(CherednikError, ValueError):
    pass


class NotConnected(CherednikError, RuntimeError):
    """Two elements of one descent class are not joined by simple transpositions."""


class GenericityFailure(CherednikError, ArithmeticError):
    """A denominator that must be nonzero for generic parameters vanished.

    The message names the vanishing expression so that the parameters can be
    reselected.
    """


class NotEigenvector(CherednikError, ValueError):
    pass


class ZeroPolynomial(CherednikError, ValueError):
    pass
