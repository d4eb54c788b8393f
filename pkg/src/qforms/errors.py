"""Exception hierarchy shared by the engine and the command line."""


class QFError(Exception):
    """Base class for every error raised by :mod:`qforms`."""

    exit_code = 2


class ParseError(QFError, ValueError):
    """Malformed field descriptor, coefficient or form expression."""

    def __init__(self, message, text=None, pos=None):
        self.text = text
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class DegenerateFormError(QFError, ValueError):
    """A zero entry or scalar was supplied where a unit is required."""


class FieldMismatchError(QFError, ValueError):
    """Operands live over different field descriptors."""


class UnsupportedFieldError(QFError):
    """The requested operation has no decision procedure over this field."""

    exit_code = 3


class ResourceBoundError(QFError):
    """A configured search, factoring or enumeration budget was exceeded."""

    exit_code = 4


class FactoringBoundError(ResourceBoundError):
    pass


class BudgetExceededError(ResourceBoundError):
    pass
