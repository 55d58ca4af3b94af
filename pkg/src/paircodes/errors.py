"""Exception taxonomy for the package.

Everything raised on purpose derives from :class:`PairCodeError`, so callers
(and the CLI) can catch one base class.  The subclasses separate the three
broad kinds of failure: bad constructions (rejected inputs), bad arithmetic
(division by a non-unit and friends), and verification mismatches between a
closed-form prediction and an exhaustive computation.
"""


class PairCodeError(Exception):
    """Base class for all errors raised by this package."""


# --- construction / validation -------------------------------------------

class NotPrime(PairCodeError):
    """The claimed characteristic is not a prime number."""


class ReducibleModulus(PairCodeError):
    """A supplied field modulus is not irreducible."""


class DegreeMismatch(PairCodeError):
    """A polynomial has the wrong degree (or shape) for its role."""


class ConstructionRefused(PairCodeError):
    """Quotient-ring parameters violate a structural requirement."""


class ConstraintViolation(PairCodeError):
    """Code parameters fall outside their admissible range."""


class BetaMismatch(PairCodeError):
    """A code family does not exist over the given ambient ring."""


class NotUnitNorZero(PairCodeError):
    """A polynomial that must be zero or a unit is neither."""


class NotChainCode(PairCodeError):
    """The operation needs a code over the two-component ring."""


class LengthTooShort(PairCodeError):
    """Pair-symbol reads need words of length at least two."""


class DegenerateInput(PairCodeError):
    """Equal or everywhere-different words have no block decomposition."""


class ZeroPolynomial(PairCodeError):
    """The zero polynomial was given where a nonzero one is required."""


class ZeroElement(PairCodeError):
    """A zero element was given where a nonzero one is required."""


# --- arithmetic -----------------------------------------------------------

class DivisionByZero(PairCodeError):
    """Inversion of zero in a field."""


class NonUnit(PairCodeError):
    """Inversion of a non-unit in the two-component ring."""


class FieldMismatch(PairCodeError):
    """Two elements from different fields were combined."""


class RingMismatch(PairCodeError):
    """Two polynomials from different quotient rings were combined."""


class ExponentOutOfRange(PairCodeError):
    """A power of the radical generator outside its nilpotency range."""


# --- computation outcomes -------------------------------------------------

class Exhausted(PairCodeError):
    """A full enumeration would exceed the word budget.

    This is a normal outcome for large codes, not a bug; catch it and fall
    back to sampling or to the closed-form route.
    """


class BudgetExceeded(PairCodeError):
    """An exact answer was demanded but the budget only allows sampling."""


class VerificationMismatch(PairCodeError):
    """An exhaustive computation contradicts the closed-form prediction."""
