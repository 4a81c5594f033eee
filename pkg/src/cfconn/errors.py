"""Exception hierarchy shared by the library and the CLI."""


class CfcError(Exception):
    """Base class for every error raised by cfconn."""


class GraphParseError(CfcError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotConnectedError(CfcError, ValueError):
    pass


class PreconditionError(CfcError, ValueError):
    """An operation was called on a graph outside its domain."""


class ColoringError(CfcError, ValueError):
    """A coloring is not total on the edge set, or names edges the graph lacks."""

    def __init__(self, message: str, missing=(), alien=()):
        self.missing = list(missing)
        self.alien = list(alien)
        super().__init__(message)


class ScaleError(CfcError):
    """A desk-scale limit was exceeded; carries the limit that tripped."""

    def __init__(self, message: str, limits: dict | None = None):
        self.limits = dict(limits or {})
        super().__init__(message)


class HUndecidableError(ScaleError):
    """h(G) needs the exact oracle on a tree component that is too large."""

    def __init__(self, message: str, component=None, limits: dict | None = None):
        self.component = component
        super().__init__(message, limits)


class MethodRefused(CfcError):
    """No closed-form result applies and the caller forbade the oracle."""


class InternalError(CfcError, RuntimeError):
    """A construction or search contradicted a result it relies on."""
