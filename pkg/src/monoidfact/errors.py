"""Exception hierarchy shared by the library and the CLI."""


class MonoidError(ValueError):
    """Base class for domain errors (bad input to a well-formed request)."""


class PresentationError(MonoidError):
    """A monoid presentation violates its own invariants."""


class TrivialMonoidError(MonoidError):
    """The presentation generates only the zero element."""


class DimensionError(MonoidError):
    pass


class NotInMonoidError(MonoidError):
    pass


class MissingBoundError(MonoidError):
    """A bounded search was requested without a bound."""


class ResourceLimitError(MonoidError):
    """A safety cap was hit before the computation finished."""
