"""Exact computations around Grothendieck-Teichmüller relations, Hopf algebras and trialgebras.

All arithmetic is over the rationals (``fractions.Fraction``); series are
truncated noncommutative power series.
"""

from .errors import DomainError, HypothesisError, NoAntipode, ParseError, QGTError, StructureError

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "HypothesisError",
    "NoAntipode",
    "ParseError",
    "QGTError",
    "StructureError",
    "__version__",
]
