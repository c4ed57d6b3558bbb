"""Exception hierarchy shared by every module of the package."""


class IndReconError(Exception):
    """Base class for all errors raised by indrecon."""


class SizeConstraintError(IndReconError, ValueError):
    """A family parameter or graph order is outside the supported range."""


class ParseError(IndReconError, ValueError):
    """Malformed edge-list input. ``line`` is 1-based (0 when unknown)."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        prefix = f"line {line}: " if line else ""
        super().__init__(prefix + message)


class MalformedHeaderError(ParseError):
    pass


class VertexOutOfRangeError(ParseError):
    pass


class SelfLoopError(ParseError):
    pass


class DuplicateEdgeError(ParseError):
    pass


class ResourceLimitError(IndReconError):
    """Enumeration would produce more independent sets than the configured cap."""


class NotAVertexError(IndReconError, KeyError):
    """A query set is not a vertex of the reconfiguration graph."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "not a vertex"


class EmptyGraphInputError(IndReconError, ValueError):
    """The operation needs at least one vertex."""


class UnknownClaimError(IndReconError, KeyError):
    pass


class InvariantViolation(IndReconError, AssertionError):
    """An internal consistency check failed; indicates a bug."""
