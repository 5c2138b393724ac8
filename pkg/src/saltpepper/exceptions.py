"""Exception hierarchy.

Every error raised on purpose by the package derives from
:class:`SaltPepperError`; each concrete class also inherits the closest
builtin so callers can keep catching ``ValueError`` / ``OSError``.
"""


class SaltPepperError(Exception):
    """Base class for all package errors."""


class CoordinateError(SaltPepperError, IndexError):
    """A pixel coordinate lies outside the image."""


class DomainError(SaltPepperError, ValueError):
    """A statistic was requested over an empty or out-of-range value list."""


class ImageValueError(SaltPepperError, ValueError):
    """An array cannot be interpreted as an 8-bit grayscale image."""


class ShapeError(SaltPepperError, ValueError):
    """Images that must share dimensions do not."""


class NoiseSpecError(SaltPepperError, ValueError):
    """Invalid noise density, salt fraction or seed."""


class PipelineError(SaltPepperError, KeyError):
    """Unknown filter identifier or empty filter pipeline."""

    def __str__(self):
        # KeyError.__str__ would repr() the message
        return str(self.args[0]) if self.args else ""


class ParameterError(SaltPepperError, ValueError):
    """Invalid filter parameter (window size, option value)."""


class PGMError(SaltPepperError, ValueError):
    """Base class for PGM decoding problems."""


class PGMHeaderError(PGMError):
    """Malformed or unsupported PGM header."""


class PGMDepthError(PGMError):
    """PGM maxval other than 255."""


class PGMTruncatedError(PGMError):
    """PGM payload shorter than the header promises."""
