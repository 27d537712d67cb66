"""Exact linear algebra over the rationals.

Rows are scaled to integers and eliminated with Bareiss' fraction-free
scheme: every intermediate entry is a minor of the input, so all divisions
are exact integer divisions and no Fraction normalization happens until the
back substitution.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[Fraction, ...], ...]


def as_matrix(rows: Sequence[Sequence[object]]) -> Matrix:
    """Copy ``rows`` into an immutable square matrix of Fractions."""
    out = tuple(tuple(Fraction(v) for v in row) for row in rows)
    n = len(out)
    if any(len(row) != n for row in out):
        raise ValueError(f"Expected a square matrix, got row lengths {[len(r) for r in out]}")
    return out


def _integer_rows(m: Matrix) -> Tuple[List[List[int]], List[int]]:
    """Scale each row by the lcm of its denominators."""
    rows: List[List[int]] = []
    scales: List[int] = []
    for row in m:
        d = math.lcm(*(v.denominator for v in row)) if row else 1
        rows.append([int(v * d) for v in row])
        scales.append(d)
    return rows, scales


def _bareiss(a: List[List[int]], n: int) -> Optional[int]:
    """Eliminate the first ``n`` columns of ``a`` in place.

    Returns the determinant of the leading n×n block, or None when singular.
    """
    sign = 1
    prev = 1
    width = len(a[0]) if a else 0
    for k in range(n):
        pivot = next((r for r in range(k, n) if a[r][k] != 0), None)
        if pivot is None:
            return None
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, width):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * (a[n - 1][n - 1] if n else 1)


def determinant(m: Matrix) -> Fraction:
    """Exact determinant of a square rational matrix."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    rows, scales = _integer_rows(m)
    det = _bareiss(rows, n)
    if det is None:
        return Fraction(0)
    return Fraction(det, math.prod(scales))


def inverse(m: Matrix) -> Tuple[Matrix, Fraction]:
    """Exact inverse and determinant of ``m``.

    Raises:
        ZeroDivisionError: If ``m`` is singular.
    """
    n = len(m)
    rows, scales = _integer_rows(m)
    aug = [row + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(rows)]
    det = _bareiss(aug, n)
    if det is None:
        raise ZeroDivisionError("matrix is not invertible")

    # back substitution on the upper-triangular block: B X = R, with B = D·m
    x: List[List[Fraction]] = [[Fraction(0)] * n for _ in range(n)]
    for col in range(n):
        for i in range(n - 1, -1, -1):
            s = Fraction(aug[i][n + col])
            for k in range(i + 1, n):
                s -= aug[i][k] * x[k][col]
            x[i][col] = s / aug[i][i]

    # m^-1 = B^-1 · D
    inv = tuple(tuple(x[i][j] * scales[j] for j in range(n)) for i in range(n))
    logger.debug("Inverted %dx%d matrix", n, n)
    return inv, Fraction(det, math.prod(scales))


def mat_vec(m: Matrix, v: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in m)


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()
