"""Exception hierarchy shared by all modules."""


class QGTError(Exception):
    """Base class for every error raised by the library."""


class StructureError(QGTError):
    """Inputs are shaped inconsistently (alphabet, truncation, tensor dimensions)."""


class DomainError(QGTError):
    """An operation was applied outside its domain (e.g. log of a series with constant term 0)."""


class NoAntipode(DomainError):
    """The antipode equations have no solution: the bialgebra is not a Hopf algebra."""


class HypothesisError(QGTError):
    """Hypotheses of a theorem-style check do not hold for the given input."""


class ParseError(QGTError):
    """Malformed document text. ``line``/``column`` are 1-based; ``path`` locates semantic errors."""

    def __init__(self, message, line=None, column=None, path=None):
        self.line = line
        self.column = column
        self.path = path
        where = []
        if line is not None:
            where.append(f"line {line}, column {column}")
        if path is not None:
            where.append(f"at {path}")
        super().__init__(f"{message} ({'; '.join(where)})" if where else message)
