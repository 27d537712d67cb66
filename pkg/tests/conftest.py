"""Shared test fixtures for simplex-integrals tests."""

import random
from fractions import Fraction
from pathlib import Path
from typing import Callable, List, Sequence

import numpy as np
import pytest

from simplex_integrals.bench import random_polynomial
from simplex_integrals.errors import DegenerateSimplexError
from simplex_integrals.poly import Polynomial, parse
from simplex_integrals.simplex import Simplex, from_vertices


@pytest.fixture
def example_poly() -> Polynomial:
    """x1 + x1*x2 + x2^2, whose integral over the unit triangle is 7/24."""
    return parse("x1 + x1*x2 + x2^2", 2)


@pytest.fixture
def translated_triangle() -> Simplex:
    """Unit right triangle moved to (1, 1)."""
    return from_vertices([(1, 1), (2, 1), (1, 2)])


@pytest.fixture
def doubled_triangle() -> Simplex:
    """Right triangle with legs of length 2 (area 2)."""
    return from_vertices([(0, 0), (2, 0), (0, 2)])


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240917)


@pytest.fixture
def make_polynomial(rng: np.random.Generator) -> Callable[[int, int, int], Polynomial]:
    """Factory for seeded random integer polynomials (n, degree, terms)."""

    def _make(n: int, degree: int, terms: int = 8) -> Polynomial:
        return random_polynomial(rng, n, degree, terms)

    return _make


def _random_rational(r: random.Random) -> Fraction:
    return Fraction(r.randint(-6, 6), r.randint(1, 4))


@pytest.fixture
def make_simplex() -> Callable[[int], Simplex]:
    """Factory for seeded random non-degenerate simplices with rational vertices."""
    r = random.Random(77)

    def _make(n: int) -> Simplex:
        while True:
            pts = [[_random_rational(r) for _ in range(n)] for _ in range(n + 1)]
            try:
                return from_vertices(pts)
            except DegenerateSimplexError:
                continue

    return _make


@pytest.fixture
def write_file(tmp_path: Path) -> Callable[[str, str], Path]:
    """Write ``text`` to ``tmp_path/name`` and return the path."""

    def _write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write


def all_exponents(n: int, max_degree: int) -> List[Sequence[int]]:
    """Every α in N^n with |α| <= max_degree."""
    if n == 1:
        return [(a,) for a in range(max_degree + 1)]
    out: List[Sequence[int]] = []
    for a in range(max_degree + 1):
        for rest in all_exponents(n - 1, max_degree - a):
            out.append((a, *rest))
    return out


@pytest.fixture
def exponents() -> Callable[[int, int], List[Sequence[int]]]:
    return all_exponents
