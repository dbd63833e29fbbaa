"""Exception hierarchy shared by every module."""


class CirculantError(ValueError):
    """Base class for invalid input to the circulant toolkit."""


class NoSolution(CirculantError):
    pass


class InvalidRange(CirculantError):
    pass


class NotCoprime(CirculantError):
    pass


class InvalidJump(CirculantError):
    pass


class DuplicateJump(CirculantError):
    pass


class JumpCoincidence(CirculantError):
    pass


class KOutOfRange(CirculantError):
    pass


class PreconditionViolated(CirculantError):
    pass


class SizeMismatch(CirculantError):
    pass


class UnknownVertex(CirculantError):
    pass


class TooLarge(CirculantError):
    pass


class Unsupported(CirculantError):
    pass
