"""Exception hierarchy shared by the library and the CLI."""


class CYaoError(Exception):
    """Base class for every error raised by :mod:`cyao`."""


class CoincidentPoints(CYaoError, ValueError):
    pass


class EmptyInput(CYaoError, ValueError):
    pass


class DuplicatePoints(CYaoError, ValueError):
    pass


class InvalidParameter(CYaoError, ValueError):
    pass


class OutOfProvenRange(CYaoError, ValueError):
    """The requested aperture has no proven dilation bound."""


class NoRealRoot(CYaoError, ValueError):
    pass


class DomainError(CYaoError, ValueError):
    pass


class PreconditionViolated(CYaoError, ValueError):
    pass


class ParseError(CYaoError, ValueError):
    pass


class DimensionMismatch(CYaoError, ValueError):
    pass
