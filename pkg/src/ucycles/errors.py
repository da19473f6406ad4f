"""Exception types shared across the package."""


class UcycleError(Exception):
    """Base class for all errors raised by :mod:`ucycles`."""


class BadForm(UcycleError):
    """The form has no entry occurring exactly once."""


class InvalidDrop(UcycleError):
    """Requested dropped value is not a singleton of the form."""


class NotBad(UcycleError):
    """A bad pattern was required but the pattern contains a 1."""


class NotGood(UcycleError):
    """A good class was required but the class has no singleton value."""


class InvalidRepChoice(UcycleError):
    """A representative choice names a value that is not a singleton of its class."""


class MissingAnchor(UcycleError):
    """The all-ones vertex is absent from a transition graph."""


class NotEulerian(UcycleError):
    """A component has unbalanced degrees or is not connected."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SymbolOutOfRange(UcycleError):
    """A sequence symbol lies outside ``1..n``."""


class BudgetExceeded(UcycleError):
    """A computation would exceed its work budget.

    ``best`` carries the best partial answer found so far, when one exists.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
