"""Exception hierarchy shared by every module of the package."""


class CyclicRankError(Exception):
    """Base class for all errors raised by cyclicrank."""


class PreconditionError(CyclicRankError, ValueError):
    """A mathematical hypothesis required by an operation does not hold.

    ``condition`` carries the violated condition as a short formula string
    (for example ``"n | m"``) so that callers such as the CLI can report it.
    """

    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition


class GenusError(PreconditionError):
    """Ramification data is inconsistent with the Riemann-Hurwitz formula."""


class UnsupportedDivisorError(CyclicRankError, ValueError):
    """The divisor is not of a shape the exact h^0 routines can handle."""


class InsufficientBoundError(CyclicRankError):
    """A brute-force search bound is too small to certify completeness."""

    def __init__(self, message, needed):
        super().__init__(message)
        self.needed = needed


class TruncationError(CyclicRankError, ArithmeticError):
    """A coefficient was requested beyond the guaranteed precision of a series."""


class OracleMismatchError(CyclicRankError):
    """The residue oracle disagrees with a closed-form rank formula.

    This is never an expected outcome: it means the implementation is wrong.
    """


class OrbitCapError(CyclicRankError):
    """A braid orbit exceeded the configured size cap."""


class CycleParseError(CyclicRankError, ValueError):
    """Malformed permutation text in cycle notation."""
