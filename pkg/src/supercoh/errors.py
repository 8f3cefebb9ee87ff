"""Exception types shared across the package."""


class SupercohError(Exception):
    """Base class for every error raised by this package."""


class UsageError(SupercohError):
    """A caller violated an operation precondition (shapes, moduli, parities)."""


class ParseError(SupercohError):
    """Input text could not be parsed into an algebra description."""


class ValidationError(SupercohError):
    """An algebra or module description violates a structural axiom."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotACocycleError(SupercohError):
    """A map handed to an extension constructor fails its cocycle condition."""


class DegreeOverflowError(SupercohError):
    """A product in a degree-truncated enveloping algebra left the window."""


class NotInIdealError(SupercohError):
    """An element expected to lie in the module-generated ideal does not."""


class NoSolutionError(SupercohError):
    """A linear system required to be solvable has no solution."""


class ValueNotInvariantError(SupercohError):
    """A twisting map takes values outside the invariant subspace."""


class DifferentUnderlyingError(SupercohError):
    """Two extensions compared for equivalence have different brackets."""


class InvariantViolationError(SupercohError):
    """An internal consistency property failed; indicates an upstream bug."""
