"""Shared exception types.

Precondition violations raise plain ValueError; everything that can fail
*during* a computation derives from ComputationError so the CLI can map it
to a structured error with exit code 3.
"""


class ComputationError(Exception):
    """A computation could not be completed as specified."""


class PrecisionInsufficientError(ComputationError):
    """Input error bounds or working precision are too coarse to decide.

    Re-evaluate the inputs at higher precision and retry.
    """


class InconsistentAError(ComputationError):
    """No single rational scale matches the Bernoulli sum for every residue.

    This would falsify the implementation, not the underlying identity.
    """


class DegenerateSumError(ComputationError):
    """Every probe residue produced a vanishing Bernoulli sum."""
