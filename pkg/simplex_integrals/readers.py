"""Text formats for simplices, Waring decompositions and real-exponent sums.

All formats are line oriented: whitespace-separated numbers, one record per
line. Blank lines and ``#`` comments are skipped.
"""

from __future__ import annotations

import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple

from .errors import DomainError, ExpressionSyntaxError
from .integrate import RealExponentSum, WaringDecomposition
from .simplex import MAX_DIMENSION, Simplex, from_vertices

logger = logging.getLogger(__name__)

RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")
REAL_RE = re.compile(r"^[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?(?:/\d+)?$")


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _records(text: str) -> List[Tuple[int, List[str]]]:
    """Non-empty lines as (1-based line number, fields)."""
    out: List[Tuple[int, List[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line.split()))
    return out


def _rational(field: str, lineno: Optional[int] = None) -> Fraction:
    if not RATIONAL_RE.match(field):
        raise ExpressionSyntaxError(f"Expected a rational like 3/2, got {field!r}", line=lineno)
    try:
        return Fraction(field)
    except ZeroDivisionError:
        raise ExpressionSyntaxError(f"Zero denominator in {field!r}", line=lineno) from None


def _real(field: str, lineno: Optional[int] = None) -> float:
    if not REAL_RE.match(field):
        raise ExpressionSyntaxError(f"Expected a real number, got {field!r}", line=lineno)
    try:
        return float(Fraction(field))
    except (ValueError, ZeroDivisionError):
        raise ExpressionSyntaxError(f"Invalid number {field!r}", line=lineno) from None


def _read_text(path: Path) -> str:
    return Path(path).read_text(encoding="utf-8")


def parse_vector(text: str) -> Tuple[Fraction, ...]:
    """Comma-separated rationals, e.g. ``"1,2/3,-1"``."""
    fields = [f.strip() for f in text.split(",")]
    if not fields or any(not f for f in fields):
        raise ExpressionSyntaxError("Expected a comma-separated list of rationals", text=text)
    return tuple(_rational(f) for f in fields)


# ---------------------------------------------------------------------------
# Parsers
# ---------------------------------------------------------------------------

def parse_vertices(text: str, *, max_dimension: int = MAX_DIMENSION) -> Simplex:
    """One vertex per line; n is the coordinate count and n+1 lines are required.

    Raises:
        ExpressionSyntaxError: On malformed numbers, ragged rows or a wrong line count.
        DegenerateSimplexError: If the vertices do not span R^n.
    """
    records = _records(text)
    if not records:
        raise ExpressionSyntaxError("Vertex file is empty")
    n = len(records[0][1])
    points = []
    for lineno, fields in records:
        if len(fields) != n:
            raise ExpressionSyntaxError(
                f"Expected {n} coordinates, got {len(fields)}", line=lineno
            )
        points.append(tuple(_rational(f, lineno) for f in fields))
    if len(points) != n + 1:
        raise ExpressionSyntaxError(
            f"Expected {n + 1} vertices for dimension {n}, got {len(points)}"
        )
    logger.debug("Read %d vertices in R^%d", len(points), n)
    return from_vertices(points, max_dimension=max_dimension)


def parse_waring(text: str, power: int) -> WaringDecomposition:
    """Lines ``±1 c_1 ... c_n``; the common power comes from the caller."""
    records = _records(text)
    if not records:
        raise ExpressionSyntaxError("Waring file is empty")
    terms = []
    width = len(records[0][1])
    for lineno, fields in records:
        if len(fields) != width or width < 2:
            raise ExpressionSyntaxError(
                "Expected a sign followed by the same number of coefficients on every line",
                line=lineno,
            )
        if fields[0] not in ("1", "+1", "-1"):
            raise ExpressionSyntaxError(f"Sign must be +1 or -1, got {fields[0]!r}", line=lineno)
        terms.append((int(fields[0]), tuple(_rational(f, lineno) for f in fields[1:])))
    return WaringDecomposition(terms=tuple(terms), power=power)


def parse_real_terms(text: str, dimension: Optional[int] = None) -> RealExponentSum:
    """Lines ``coefficient a_1 ... a_n`` (reals or p/q).

    Raises:
        ExpressionSyntaxError: On malformed lines.
        DomainError: If ``dimension`` disagrees with the file, or on
            exponents <= -1 and mixed total degrees.
    """
    records = _records(text)
    if not records:
        raise ExpressionSyntaxError("Real-term file is empty")
    n = len(records[0][1]) - 1
    if n < 1:
        raise ExpressionSyntaxError(
            "Each line needs a coefficient and exponents", line=records[0][0]
        )
    if dimension is not None and dimension != n:
        raise DomainError(f"File has {n} exponents per term, but dimension is {dimension}")
    terms = []
    for lineno, fields in records:
        if len(fields) != n + 1:
            raise ExpressionSyntaxError(
                f"Expected 1 coefficient and {n} exponents, got {len(fields)} fields",
                line=lineno,
            )
        coef = _real(fields[0], lineno)
        alpha = tuple(_real(f, lineno) for f in fields[1:])
        terms.append((coef, alpha))
    return RealExponentSum(dimension=n, terms=tuple(terms))


def read_vertices(path: Path, *, max_dimension: int = MAX_DIMENSION) -> Simplex:
    return parse_vertices(_read_text(path), max_dimension=max_dimension)


def read_waring(path: Path, power: int) -> WaringDecomposition:
    return parse_waring(_read_text(path), power)


def read_real_terms(path: Path, dimension: Optional[int] = None) -> RealExponentSum:
    return parse_real_terms(_read_text(path), dimension)
