"""Exception hierarchy for simplex-integrals.

Every error derives from ValueError as well, so callers that only care about
bad input can keep catching the builtin.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


class SimplexIntegralsError(Exception):
    """Base class for all package errors."""


class ExpressionSyntaxError(SimplexIntegralsError, ValueError):
    """Malformed polynomial expression or input file.

    Attributes:
        position: 0-based character offset in ``text`` (or None when unknown).
        text: The offending input.
        line: 1-based line number for file inputs.
    """

    def __init__(
        self,
        message: str,
        *,
        text: str = "",
        position: Optional[int] = None,
        line: Optional[int] = None,
    ) -> None:
        self.text = text
        self.position = position
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"position {position}")
        suffix = f" ({', '.join(where)})" if where else ""
        super().__init__(f"{message}{suffix}")


class DegenerateSimplexError(SimplexIntegralsError, ValueError):
    """The vertices do not span R^n (zero edge-matrix determinant)."""

    def __init__(self, matrix: Sequence[Sequence[Fraction]]) -> None:
        self.matrix = tuple(tuple(row) for row in matrix)
        rows = "; ".join(" ".join(str(v) for v in row) for row in self.matrix)
        super().__init__(f"Degenerate simplex: edge matrix [{rows}] is singular")


class DomainError(SimplexIntegralsError, ValueError):
    """An input value lies outside the domain of the requested formula."""
