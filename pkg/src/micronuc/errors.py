"""Exception hierarchy shared by the library and the CLI."""


class MicronucError(Exception):
    """Base class for all library errors."""


class InvalidWordError(MicronucError, ValueError):
    pass


class NotDoubleOccurrence(InvalidWordError):
    pass


class MalformedToken(InvalidWordError):
    pass


class NotFourValent(MicronucError, ValueError):
    pass


class VertexNotOnPath(MicronucError, ValueError):
    pass


class UnknownHpp(MicronucError, KeyError):
    pass


class MultiComponent(MicronucError, ValueError):
    pass


class CompositeToken(MicronucError, ValueError):
    pass


class MixedSignWarning(UserWarning):
    """Two MDS pieces of opposite orientation were fused into one token."""


class ParseError(MicronucError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class BudgetExceeded(MicronucError, RuntimeError):
    pass
