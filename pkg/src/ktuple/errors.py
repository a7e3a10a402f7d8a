"""Exception hierarchy shared by the solvers and the CLI."""


class KTupleError(Exception):
    """Base class for all errors raised by this package."""


class InputError(KTupleError, ValueError):
    """Malformed arguments: out-of-range vertices, bad parameters, empty inputs."""


class GraphFormatError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotCoBiconvex(KTupleError):
    """The augmented adjacency matrix has no consecutive-zeros row order."""


class StructureViolation(KTupleError):
    """A C0P ordering was found but the two-clique block layout failed verification."""


class UnsupportedK(KTupleError):
    """k lies outside the range the co-biconvex case analysis covers."""


class BudgetExceeded(KTupleError):
    """An oracle call would exceed its size or time budget."""


class WitnessNotConstructed(KTupleError):
    """The value is known but no witness set could be built for it."""

    def __init__(self, message: str, value: int):
        self.value = value
        super().__init__(message)
