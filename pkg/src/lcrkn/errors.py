"""Exception hierarchy. Everything raised on bad domain input derives from LcrError."""


class LcrError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class GeometryError(LcrError, ValueError):
    pass


class GeneralPositionError(GeometryError):
    """Raised when a point set has a repeated point or a collinear triple.

    ``ids`` holds the offending point ids (two for a duplicate, three for a
    collinear triple).
    """

    def __init__(self, message, ids=()):
        super().__init__(message)
        self.ids = tuple(ids)


class PointSetParseError(LcrError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CalibrationError(LcrError):
    def __init__(self, message, diagnostic=None):
        super().__init__(message)
        self.diagnostic = diagnostic


class LemmaViolation(LcrError, AssertionError):
    """A separation witness or certificate failed to exist or to be sound.

    This must never fire; it indicates a bug rather than bad input.
    """
