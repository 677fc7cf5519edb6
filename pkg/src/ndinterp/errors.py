"""Exception types raised by interpolation, collection and table operations."""


class InterpolationError(Exception):
    """Base class of all errors that can be routed through an error policy."""


class TooFewPointsError(InterpolationError):
    """Not enough elements for the requested interpolation method.

    ``key_path`` holds the abscissa values of the enclosing map levels when the
    error was detected inside a multi-dimensional structure.
    """

    def __init__(self, message, key_path=()):
        self.key_path = tuple(key_path)
        if self.key_path:
            message = f"{message} (key path {self.key_path})"
        super().__init__(message)


class ValueOutOfRangeError(InterpolationError):
    """Abscissa value outside the range of a collection."""


class AbscissaMismatchError(InterpolationError):
    """Collections combined arithmetically have different abscissa values."""


class DuplicateAbscissaError(InterpolationError):
    """Two elements lie within the precision of the distance operator."""


class ShapeMismatchError(InterpolationError):
    """Composite results of differing type or length were combined."""


class TableFormatError(InterpolationError):
    """Malformed, truncated or unwritable binary table."""

    def __init__(self, message, offset=None):
        self.offset = offset
        if offset is not None:
            message = f"{message} at byte offset {offset}"
        super().__init__(message)


class NotCompiledError(RuntimeError):
    """Evaluation attempted before ``compile()`` or after a modification."""


class ArgumentCountError(TypeError):
    """Number of arguments does not match the number of dimensions."""
