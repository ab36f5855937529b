"""Exception types raised across the package."""


class ZinbielError(Exception):
    """Base class for all package errors."""


class DegreeOneSupport(ZinbielError):
    pass


class DegreeTooSmall(ZinbielError):
    pass


class UnindexedKey(ZinbielError):
    pass


class CoordinateizerMismatch(ZinbielError):
    pass


class NotLie(ZinbielError):
    pass


class NotLieInput(ZinbielError):
    pass


class CorruptLie(ZinbielError):
    pass


class ShapeMismatch(ZinbielError):
    pass


class UnassignedLeaf(ZinbielError):
    pass


class CertificateViolation(ZinbielError):
    pass


class CapMismatch(ZinbielError):
    pass


class CapTooSmall(ZinbielError):
    pass


class AlphabetError(ZinbielError):
    pass


class ExprSyntaxError(ZinbielError):
    """Parse failure; ``pos`` is the 0-based offset in the source text."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos
