"""Exception hierarchy shared by every ringseg module."""


class RingsegError(Exception):
    """Base class for domain errors raised by ringseg."""


class ShapeError(RingsegError, ValueError):
    """Operands do not share width and height."""


class IncompatibleRingError(RingsegError, ValueError):
    """Operands live in rings with different moduli."""


class PixelRangeError(RingsegError, ValueError):
    """A pixel value falls outside ``[0, n - 1]``."""


class PgmParseError(RingsegError, ValueError):
    """Malformed graymap header or payload.

    ``offset`` is the byte position at which parsing failed.
    """

    def __init__(self, message, offset):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class PgmLengthError(PgmParseError):
    """Graymap payload is shorter than the header promises."""
