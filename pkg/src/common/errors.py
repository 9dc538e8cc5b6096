"""
Error types raised by the residue generator toolkit
"""


class ResidueGenError(ValueError):
    """Base class for invalid parameters or malformed circuits."""


class OutOfRangeError(ResidueGenError):
    """A value lies outside the range accepted by an encoding."""


class WidthMismatchError(ResidueGenError):
    """Operand vectors or input vectors do not have the expected width."""


class CompositionError(ResidueGenError):
    """Two netlists cannot be stitched together with the given wiring."""


class ImpossibleTargetError(ResidueGenError):
    """A carry-save reduction was asked for fewer than two bits per class."""


class BudgetExceededError(ResidueGenError):
    """An exhaustive sweep would evaluate more vectors than allowed."""


class GoldenMissingError(FileNotFoundError):
    """A golden reference file is not present."""
