"""Exception hierarchy shared by the library and the CLI."""


class KnotoidError(Exception):
    """Base class for all errors raised by this package."""


class GaussSyntaxError(KnotoidError, ValueError):
    """A Gauss-code token does not match ``('O'|'U') INT ('+'|'-')``."""


class ValidationError(KnotoidError, ValueError):
    """A well-formed Gauss code does not describe a valid Gauss diagram."""


class UnknownChord(KnotoidError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class UnknownName(KnotoidError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class DomainError(KnotoidError, ValueError):
    pass


class NotInCn(KnotoidError, ValueError):
    """The chord's intersection index is not a multiple of ``n``."""


class InvalidMove(KnotoidError, ValueError):
    pass


class EmptyDiagram(KnotoidError, ValueError):
    pass
