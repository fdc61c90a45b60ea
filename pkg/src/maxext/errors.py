"""Exception hierarchy shared by every module."""


class MaxExtError(Exception):
    """Base class for all errors raised by this package."""


class InputError(MaxExtError, ValueError):
    """Malformed user input: set literals, formula text, instance files.

    ``line`` and ``column`` are 1-based when known.
    """

    def __init__(self, message, line=None, column=None, source=None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        super().__init__(self._render())

    def _render(self):
        where = ""
        if self.source:
            where = f"{self.source}:"
        if self.line is not None:
            where += f"{self.line}:{self.column or 1}: "
        elif where:
            where += " "
        return f"{where}{self.message}"


class PreconditionError(MaxExtError, ValueError):
    """An operation was called on arguments outside its contract."""


class IndexRangeError(MaxExtError, OverflowError):
    """A finite set does not fit the requested index width."""


class BudgetError(MaxExtError, RuntimeError):
    """A search or enumeration limit was hit before an answer was reached.

    Distinct from a negative answer: the question is left undecided.
    """
