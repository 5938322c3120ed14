"""Exception types shared across the package."""


class GenSudokuError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(GenSudokuError, ValueError):
    """A vector length does not match what the operation expects."""


class InvalidPermutationError(GenSudokuError, ValueError):
    """An image sequence is not a bijection on {1, ..., size}."""


class InvalidPartitionError(GenSudokuError, ValueError):
    """A cell partition is malformed; ``cell`` is the first offending cell."""

    def __init__(self, message, cell=None):
        super().__init__(message)
        self.cell = cell


class NotApplicableError(GenSudokuError):
    """The sign of a vector with a zero component was requested.

    A zero component means two cells tied to the same constraint group hold
    equal values, so the distinctness condition is violated.  ``index`` is
    the 1-based position of the offending component.
    """

    def __init__(self, index):
        super().__init__(f"zero component at index {index}")
        self.index = index


class ParityError(GenSudokuError):
    """Reconstruction hit an odd intermediate component at 1-based ``index``.

    Unreachable for integer inputs (the sign sums always share the parity of
    n+1), but checked rather than truncated.
    """

    def __init__(self, index, value):
        super().__init__(f"odd component {value} at index {index}")
        self.index = index
        self.value = value


class PuzzleFormatError(GenSudokuError, ValueError):
    """Malformed puzzle or region file; carries the 1-based position."""

    def __init__(self, message, line, column=None):
        pos = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{pos}: {message}")
        self.line = line
        self.column = column


class SearchSpaceError(GenSudokuError, ValueError):
    """Brute-force enumeration refused: the search space exceeds the guard."""
