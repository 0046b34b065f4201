"""
Errors raised by the library. The CLI maps ConfigError to exit code 2
and every other QuantumConceptsError to exit code 1.
"""


class QuantumConceptsError(Exception):
    """Base class for all errors raised by quantum_concepts_py."""


class InvalidState(QuantumConceptsError, ValueError):
    """A state, grid or membership was constructed with invalid parameters."""


class GridTooNarrow(QuantumConceptsError, ValueError):
    """The grid does not cover mu +/- 6 sigma; truncation error would exceed tolerance."""


class GridMismatch(QuantumConceptsError, ValueError):
    """Two grid states live on different discretizations."""


class BadSampleCount(QuantumConceptsError, ValueError):
    """The number of samples is not valid for the requested quadrature rule."""


class ZeroVector(QuantumConceptsError, ArithmeticError):
    """A superposition cancelled to the zero vector and cannot be normalized."""


class EmptyRegistry(QuantumConceptsError, ValueError):
    """Classification was requested against no concepts."""


class DuplicateName(QuantumConceptsError, ValueError):
    """Two concepts or states share a name."""


class DimensionMismatch(QuantumConceptsError, ValueError):
    """Product states with different numbers of feature axes were compared."""


class DomainError(QuantumConceptsError, ValueError):
    """An argument lies outside the domain of a fuzzy operation."""


class ConfigError(QuantumConceptsError, ValueError):
    """
    A concept configuration document failed to parse or validate.

    Parameters
    ----------
    message : str
        What is wrong with the document
    entry : str, optional
        Label of the offending entry, e.g. ``concepts[1] (boat)``
    line : int, optional
        1-based line number of the offending entry in the source document
    """

    def __init__(self, message: str, entry: str | None = None, line: int | None = None):
        self.message = message
        self.entry = entry
        self.line = line
        super().__init__(str(self))

    def __str__(self) -> str:
        prefix = ""
        if self.line is not None:
            prefix += f"line {self.line}: "
        if self.entry:
            prefix += f"{self.entry}: "
        return f"{prefix}{self.message}"
