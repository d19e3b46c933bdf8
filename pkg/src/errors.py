"""Exception hierarchy. Each error carries the CLI exit code it maps to."""


class PolardimError(Exception):
    """Base class for all polardim failures."""

    exit_code: int = 1


class ParameterError(PolardimError, ValueError):
    """A numeric or structural argument is outside its valid range."""

    exit_code = 2


class InputError(PolardimError):
    """Input files or records could not be turned into a network."""

    exit_code = 3


class ParseError(InputError):
    """Unreadable, empty or malformed input file."""

    def __init__(self, message: str, path: str | None = None, line_no: int | None = None):
        self.path = path
        self.line_no = line_no
        where = ""
        if path is not None:
            where = f"{path}:{line_no}: " if line_no is not None else f"{path}: "
        super().__init__(f"{where}{message}")


class EdgeIndexError(InputError, IndexError):
    """An edge endpoint lies outside [0, n_nodes)."""

    def __init__(self, pair: tuple[int, int], n_nodes: int):
        self.pair = pair
        self.n_nodes = n_nodes
        super().__init__(f"edge {pair} out of range for {n_nodes} nodes")


class EmptyNetworkError(InputError):
    """A network (or a time window) ended up with no edges."""

    def __init__(self, message: str = "network has no edges", window: str | None = None):
        self.window = window
        if window is not None:
            message = f"window '{window}': {message}"
        super().__init__(message)


class ComparabilityError(InputError):
    """Windows were measured with different truncation sizes."""


class NumericalError(PolardimError, ArithmeticError):
    """A numerical routine failed with no fallback left."""

    exit_code = 4


class UndefinedEntropyError(NumericalError):
    """SVD entropy requested for a spectrum with no positive value."""
