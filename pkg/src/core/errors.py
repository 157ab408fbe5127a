"""Exception hierarchy for the q-Whittaker toolkit."""


class QWhittakerError(Exception):
    """Base class for all library errors."""

    pass


class ShapeError(QWhittakerError, ValueError):
    """Raised when a shape is malformed or not of the required kind."""

    pass


class CellOutOfShapeError(QWhittakerError, ValueError):
    """Raised when a cell does not belong to the diagram it is queried against."""

    pass


class VariableCountError(QWhittakerError, ValueError):
    """Raised when polynomials over different variable sets are combined."""

    pass


class ColumnStrictnessError(QWhittakerError, ValueError):
    """Raised when an operation needs a column strict filling and gets something else."""

    pass


class PatternError(QWhittakerError, ValueError):
    """Raised for invalid Gelfand-Tsetlin patterns or non-semistandard tableaux."""

    pass


class OverlayError(QWhittakerError, ValueError):
    """Raised when a partition overlay does not fit its NE x SE box."""

    pass


class StrictTupleError(QWhittakerError, ValueError):
    """Raised when a tuple is not strictly decreasing or leaves its box."""

    pass


class IndexRangeError(QWhittakerError, ValueError):
    """Raised when an (i, j) or column index is outside its admissible range."""

    pass


class NegativePowerError(QWhittakerError, ValueError):
    """Raised when an operation is only defined on non-negative powers."""

    pass


class SearchBudgetExceeded(QWhittakerError):
    """Raised when an exhaustive search explores more states than allowed."""

    pass


class StabilizationError(QWhittakerError):
    """Raised when a truncated limit does not stabilize before the K cap."""

    pass


class StatisticMismatchError(QWhittakerError):
    """Raised when two independent computations of a statistic disagree."""

    pass


class InputFormatError(QWhittakerError, ValueError):
    """Raised when JSON or command-line input cannot be decoded."""

    pass
