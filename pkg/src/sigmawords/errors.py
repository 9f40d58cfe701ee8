"""Exception types shared across the package."""


class SigmaError(Exception):
    pass


class CapExceeded(SigmaError):
    """Requested word is longer than the materialization cap."""


class ParseError(SigmaError, ValueError):
    pass


class OddLengthRequired(SigmaError, ValueError):
    pass


class DomainError(SigmaError, ValueError):
    pass


class Unsupported(SigmaError):
    """The formula engine has no recurrence for this pattern; use the oracle."""


class OverlappingBlocks(Unsupported):
    pass


class OverlapAtAnchor(Unsupported):
    pass
