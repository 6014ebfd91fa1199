"""Exception hierarchy shared by every module."""


class PolytopeError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(PolytopeError, ValueError):
    pass


class AlphaOutOfRange(PolytopeError, ValueError):
    pass


class EmptyInput(PolytopeError, ValueError):
    pass


class NotChainForm(PolytopeError, ValueError):
    pass


class CapExceeded(PolytopeError, RuntimeError):
    """An enumeration would exceed its configured size limit."""


class InvalidArgument(PolytopeError, ValueError):
    pass


class KindMismatch(PolytopeError, TypeError):
    """Operands have representation kinds the requested operation cannot combine."""


class ParseError(PolytopeError, ValueError):
    pass
