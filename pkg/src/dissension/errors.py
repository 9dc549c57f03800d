"""Exception types shared across the package."""


class DissensionError(Exception):
    """Base class for every error raised by this package."""


class NotHermitian(DissensionError):
    """Matrix deviates from its adjoint beyond tolerance."""


class NotAState(DissensionError):
    """Matrix violates a density-matrix invariant."""


class InvalidParam(DissensionError):
    """State-family parameter outside its admissible range."""


class BadSubset(DissensionError):
    """Qubit selection is empty, duplicated, or out of range."""


class NotProjector(DissensionError):
    """Operator is not an orthogonal projector within tolerance."""


class NegativeArgument(DissensionError):
    """Entropy argument below zero."""
