"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class SurfaceError(ValueError):
    """Bad input: malformed files, invalid triangulations, wrong-length vectors.

    The CLI reports these with exit status 1.
    """


class ParseError(SurfaceError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(SurfaceError):
    pass


class InvariantViolation(RuntimeError):
    """An internal consistency check failed (CLI exit status 2)."""
