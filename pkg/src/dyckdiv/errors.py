"""Exception types shared across the package."""


class DyckDivError(ValueError):
    """Base class for every error raised on bad input."""


class InvalidDenominator(DyckDivError):
    pass


class LambdaOutOfRange(DyckDivError):
    pass


class InvalidArgument(DyckDivError):
    pass


class NotADyckWord(DyckDivError):
    pass


class OddLength(DyckDivError):
    pass


class EncodingInvariantError(AssertionError):
    """Raised when an encoding violates a guaranteed structural property.

    This signals a bug in the encoder, never bad input.
    """
