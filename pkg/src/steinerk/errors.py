"""Exception types raised by the library."""


class SteinerError(ValueError):
    """Base class for every error raised by steinerk."""


class MalformedInput(SteinerError):
    """Tree text could not be parsed."""


class NotATree(SteinerError):
    """Edge list is not a spanning tree on the declared vertex set."""


class VertexOutOfRange(SteinerError):
    pass


class KOutOfRange(SteinerError):
    pass


class NotAnEdge(SteinerError):
    pass


class ParameterOutOfRange(SteinerError):
    pass


class EntryOutOfRange(SteinerError):
    pass


class CapExceeded(SteinerError):
    pass


class UnknownCheck(SteinerError):
    pass
