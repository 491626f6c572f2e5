"""Exception types shared across the package."""


class JoinalgError(Exception):
    """Base class for all package errors."""


class NotAssociativeError(JoinalgError):
    """Raised when a table fails associativity; carries the first bad triple."""

    def __init__(self, triple, message=None):
        self.triple = tuple(triple)
        super().__init__(message or f"operation is not associative, witness {self.triple}")


class PreconditionError(JoinalgError):
    """A structural precondition of an operation or battery does not hold."""


class SizeLimitError(JoinalgError):
    """An enumeration was requested above its configured size limit."""


class ParseError(JoinalgError):
    """A structure file could not be parsed; carries line/column."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        loc = "" if line is None else f" at line {line}" + ("" if column is None else f", column {column}")
        super().__init__(message + loc)


class InvariantViolation(JoinalgError):
    """Two independent computations of the same fact disagree.

    This signals either an implementation bug or a counterexample to a law
    the package treats as an invariant; it is always worth a report.
    """

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message if witness is None else f"{message}; witness {witness}")
