"""Exception hierarchy shared across the package."""


class BrickworkError(Exception):
    """Base class for every error raised by brickwork."""


class ValidationError(BrickworkError, ValueError):
    """Malformed input: bad config, bad spec file, failed invariant."""


class ZeroDenominator(BrickworkError, ZeroDivisionError):
    pass


class NotAdmissible(ValidationError):
    pass


class WrongIdempotents(ValidationError):
    pass


class ScalarMismatch(ValidationError):
    pass


class ZeroModule(ValidationError):
    pass


class UnsupportedCharacteristic(BrickworkError):
    pass


class NotZeroCokernel(ValidationError):
    pass


class LiftFailed(BrickworkError):
    pass


class NotInRadical(ValidationError):
    pass


class OutsideDh(ValidationError):
    """The evaluation point is a root of the localizing polynomial."""


class NonSplitDenominator(BrickworkError):
    pass


class NonSplitContent(BrickworkError):
    pass


class SingularInput(ValidationError):
    pass


class MalformedSpec(ValidationError):
    pass


class NotNormal(ValidationError):
    pass


class RankDeficient(ValidationError):
    pass
