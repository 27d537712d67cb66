"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is an immutable map from dense exponent vectors to ``Fraction``
coefficients. Terms are kept in graded order (total degree ascending, then
lexicographically descending exponents) so printing is deterministic:
``x1 + x1*x2 + x2^2``.
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import DomainError, ExpressionSyntaxError
from .models import as_float

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]
Point = Sequence[Union[int, Fraction, float]]


# ---------------------------------------------------------------------------
# Exponent vectors
# ---------------------------------------------------------------------------

def total_degree(alpha: Sequence[int]) -> int:
    """|α| = α_1 + ... + α_n."""
    return sum(alpha)


@lru_cache(maxsize=256)
def _factorial(k: int) -> int:
    return math.factorial(k)


def factorial_product(alpha: Sequence[int]) -> int:
    """α_1!···α_n! as an exact integer."""
    out = 1
    for a in alpha:
        if a > 1:
            out *= _factorial(a)
    return out


def _grlex_key(alpha: Exponent) -> Tuple[int, Tuple[int, ...]]:
    return total_degree(alpha), tuple(-a for a in alpha)


def _check_exponent(alpha: Sequence[int], dimension: int) -> Exponent:
    if len(alpha) != dimension:
        raise DomainError(f"Exponent {tuple(alpha)} has length {len(alpha)}, expected {dimension}")
    out = tuple(alpha)
    for a in out:
        if not isinstance(a, int) or isinstance(a, bool) or a < 0:
            raise DomainError(f"Exponent {out} must contain non-negative integers")
    return out


# ---------------------------------------------------------------------------
# Polynomial
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Polynomial:
    """Polynomial in ``dimension`` variables in canonical sparse form.

    Build instances with :meth:`from_mapping` (or the helpers below); the
    constructor expects terms that are already canonical.
    """

    dimension: int
    terms: Tuple[Tuple[Exponent, Fraction], ...] = ()

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise DomainError(f"Polynomial dimension must be >= 1, got {self.dimension}")
        for alpha, coef in self.terms:
            if len(alpha) != self.dimension:
                raise DomainError(
                    f"Exponent {alpha} has length {len(alpha)}, expected {self.dimension}"
                )
            if coef == 0:
                raise DomainError(f"Zero coefficient stored for {alpha}")

    # -- construction -------------------------------------------------------

    @classmethod
    def from_mapping(cls, dimension: int, mapping: Mapping[Sequence[int], Scalar]) -> Polynomial:
        """Canonicalize a map exponent -> coefficient (zeros dropped)."""
        acc: Dict[Exponent, Fraction] = {}
        for alpha, coef in mapping.items():
            key = _check_exponent(alpha, dimension)
            acc[key] = acc.get(key, Fraction(0)) + Fraction(coef)
        return cls._from_acc(dimension, acc)

    @classmethod
    def _from_acc(cls, dimension: int, acc: Mapping[Exponent, Fraction]) -> Polynomial:
        items = sorted(((a, c) for a, c in acc.items() if c != 0), key=lambda t: _grlex_key(t[0]))
        return cls(dimension, tuple(items))

    @classmethod
    def zero(cls, dimension: int) -> Polynomial:
        return cls(dimension, ())

    @classmethod
    def constant(cls, dimension: int, value: Scalar) -> Polynomial:
        return cls.from_mapping(dimension, {(0,) * dimension: value})

    @classmethod
    def monomial(cls, alpha: Sequence[int], coefficient: Scalar = 1) -> Polynomial:
        """The single term ``coefficient * x^alpha``."""
        return cls.from_mapping(len(alpha), {tuple(alpha): coefficient})

    @classmethod
    def variable(cls, dimension: int, index: int) -> Polynomial:
        """x_{index+1} (``index`` is 0-based)."""
        alpha = [0] * dimension
        alpha[index] = 1
        return cls.monomial(alpha)

    @classmethod
    def linear(cls, coefficients: Sequence[Scalar], constant: Scalar = 0) -> Polynomial:
        """c·x + constant."""
        n = len(coefficients)
        mapping: Dict[Exponent, Scalar] = {(0,) * n: constant}
        for i, c in enumerate(coefficients):
            alpha = [0] * n
            alpha[i] = 1
            mapping[tuple(alpha)] = c
        return cls.from_mapping(n, mapping)

    # -- inspection ---------------------------------------------------------

    @property
    def coefficients(self) -> Dict[Exponent, Fraction]:
        return dict(self.terms)

    @property
    def degree(self) -> int:
        """Total degree; 0 for the zero polynomial."""
        return max((total_degree(alpha) for alpha, _ in self.terms), default=0)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_homogeneous(self) -> bool:
        return len({total_degree(alpha) for alpha, _ in self.terms}) <= 1

    def coefficient(self, alpha: Sequence[int]) -> Fraction:
        return self.coefficients.get(tuple(alpha), Fraction(0))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(self.terms)

    def __str__(self) -> str:
        return format_polynomial(self)

    # -- ring operations ----------------------------------------------------

    def _check_same_dimension(self, other: Polynomial) -> None:
        if other.dimension != self.dimension:
            raise DomainError(f"Dimension mismatch: {self.dimension} vs {other.dimension}")

    def _lift(self, other: Union[Polynomial, Scalar]) -> Optional[Polynomial]:
        if isinstance(other, Polynomial):
            self._check_same_dimension(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.dimension, other)
        return None

    def __add__(self, other: Union[Polynomial, Scalar]) -> Polynomial:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        acc = dict(self.terms)
        for alpha, coef in rhs.terms:
            acc[alpha] = acc.get(alpha, Fraction(0)) + coef
        return Polynomial._from_acc(self.dimension, acc)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.dimension, tuple((a, -c) for a, c in self.terms))

    def __sub__(self, other: Union[Polynomial, Scalar]) -> Polynomial:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Scalar) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: Union[Polynomial, Scalar]) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Polynomial.zero(self.dimension)
            return Polynomial(self.dimension, tuple((a, c * other) for a, c in self.terms))
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_same_dimension(other)
        acc: Dict[Exponent, Fraction] = {}
        for a1, c1 in self.terms:
            for a2, c2 in other.terms:
                key = tuple(x + y for x, y in zip(a1, a2))
                acc[key] = acc.get(key, Fraction(0)) + c1 * c2
        return Polynomial._from_acc(self.dimension, acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        if not isinstance(exponent, int) or exponent < 0:
            raise DomainError(f"Polynomial power must be a non-negative integer, got {exponent}")
        result = Polynomial.constant(self.dimension, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def evaluate(self, point: Point) -> Union[Fraction, float]:
        return evaluate(self, point)


@dataclass(frozen=True)
class HomogeneousPart:
    """The degree-``degree`` slice f_j of a polynomial."""

    degree: int
    body: Polynomial

    def __post_init__(self) -> None:
        for alpha, _ in self.body.terms:
            if total_degree(alpha) != self.degree:
                raise DomainError(f"Term {alpha} does not have degree {self.degree}")


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def homogeneous_parts(f: Polynomial) -> List[HomogeneousPart]:
    """Split ``f`` into f_0, ..., f_t; missing degrees are zero polynomials."""
    buckets: List[List[Tuple[Exponent, Fraction]]] = [[] for _ in range(f.degree + 1)]
    for alpha, coef in f.terms:
        buckets[total_degree(alpha)].append((alpha, coef))
    # graded order keeps each bucket canonical
    return [
        HomogeneousPart(degree=j, body=Polynomial(f.dimension, tuple(bucket)))
        for j, bucket in enumerate(buckets)
    ]


def bombieri(f: Polynomial) -> Polynomial:
    """f̂ with coefficients α_1!···α_n!·f_α; same support as ``f``."""
    return Polynomial(
        f.dimension, tuple((alpha, coef * factorial_product(alpha)) for alpha, coef in f.terms)
    )


def from_bombieri(g: Polynomial) -> Polynomial:
    """Inverse of :func:`bombieri`: divide each coefficient by α!."""
    return Polynomial(
        g.dimension, tuple((alpha, coef / factorial_product(alpha)) for alpha, coef in g.terms)
    )


def _is_exact(value: object) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def evaluate(f: Polynomial, point: Point) -> Union[Fraction, float]:
    """Σ f_α point^α, exact if every coordinate is rational, else float."""
    if len(point) != f.dimension:
        raise DomainError(f"Point has {len(point)} coordinates, expected {f.dimension}")
    if all(_is_exact(p) for p in point):
        coords = [Fraction(p) for p in point]
        total = Fraction(0)
        for alpha, coef in f.terms:
            total += coef * math.prod(x**a for x, a in zip(coords, alpha) if a)
        return total
    fcoords = [float(p) for p in point]
    return math.fsum(
        as_float(coef) * math.prod(x**a for x, a in zip(fcoords, alpha) if a)
        for alpha, coef in f.terms
    )


def compose(f: Polynomial, substitutions: Sequence[Polynomial]) -> Polynomial:
    """f(p_1, ..., p_n): substitute polynomial ``p_i`` for x_i and expand."""
    if len(substitutions) != f.dimension:
        raise DomainError(
            f"compose() needs {f.dimension} substitutions, got {len(substitutions)}"
        )
    if not substitutions:
        return f
    m = substitutions[0].dimension
    for p in substitutions:
        if p.dimension != m:
            raise DomainError("All substitutions must share one dimension")

    powers: List[List[Polynomial]] = [[Polynomial.constant(m, 1)] for _ in substitutions]

    def power(i: int, k: int) -> Polynomial:
        cache = powers[i]
        while len(cache) <= k:
            cache.append(cache[-1] * substitutions[i])
        return cache[k]

    acc: Dict[Exponent, Fraction] = {}
    for alpha, coef in f.terms:
        term = Polynomial.constant(m, coef)
        for i, a in enumerate(alpha):
            if a:
                term = term * power(i, a)
        for beta, c in term.terms:
            acc[beta] = acc.get(beta, Fraction(0)) + c
    out = Polynomial._from_acc(m, acc)
    logger.debug("Composed %d-term polynomial into %d terms", len(f), len(out))
    return out


# ---------------------------------------------------------------------------
# Printing
# ---------------------------------------------------------------------------

def _monomial_text(alpha: Exponent) -> str:
    parts = []
    for i, a in enumerate(alpha):
        if a == 1:
            parts.append(f"x{i + 1}")
        elif a > 1:
            parts.append(f"x{i + 1}^{a}")
    return "*".join(parts)


def format_polynomial(f: Polynomial) -> str:
    """Canonical text form that :func:`parse` reads back to ``f``."""
    if f.is_zero:
        return "0"
    out: List[str] = []
    for k, (alpha, coef) in enumerate(f.terms):
        mag = abs(coef)
        mono = _monomial_text(alpha)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        elif mag.denominator == 1:
            body = f"{mag.numerator}*{mono}"
        else:
            body = f"({mag})*{mono}"
        if k == 0:
            out.append(f"-{body}" if coef < 0 else body)
        else:
            out.append(f" - {body}" if coef < 0 else f" + {body}")
    return "".join(out)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d*)?)|(?P<var>x(?P<idx>\d+))|(?P<op>[-+*/^()])|(?P<bad>\S))"
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(expr: str) -> List[_Token]:
    tokens: List[_Token] = []
    pos = 0
    while pos < len(expr):
        m = TOKEN_RE.match(expr, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastgroup) if m.lastgroup else pos
        if m.group("bad") is not None:
            raise ExpressionSyntaxError(
                f"Unexpected character {m.group('bad')!r}", text=expr, position=start
            )
        if m.group("num") is not None:
            tokens.append(_Token("num", m.group("num"), start))
        elif m.group("var") is not None:
            tokens.append(_Token("var", m.group("var"), start))
        elif m.group("op") is not None:
            tokens.append(_Token("op", m.group("op"), start))
        pos = m.end()
    tokens.append(_Token("end", "", len(expr)))
    return tokens


class _Parser:
    """Recursive descent over the token list.

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := coef ['*'] [monomial] | monomial
    coef     := uint ['/' uint] | '(' ['-'] uint ['/' uint] ')'
    monomial := var ['^' uint] ('*' var ['^' uint])*
    """

    def __init__(self, expr: str, dimension: int) -> None:
        self.expr = expr
        self.dimension = dimension
        self.tokens = _tokenize(expr)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def _error(self, message: str, tok: Optional[_Token] = None) -> ExpressionSyntaxError:
        return ExpressionSyntaxError(message, text=self.expr, position=(tok or self.tok).pos)

    def _is_op(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def _advance(self) -> _Token:
        tok = self.tok
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        acc: Dict[Exponent, Fraction] = {}
        sign = 1
        if self._is_op("+") or self._is_op("-"):
            sign = -1 if self._advance().text == "-" else 1
        while True:
            alpha, coef = self._term()
            acc[alpha] = acc.get(alpha, Fraction(0)) + sign * coef
            if self._is_op("+") or self._is_op("-"):
                sign = -1 if self._advance().text == "-" else 1
                continue
            if self.tok.kind != "end":
                raise self._error(f"Unexpected {self.tok.text!r}")
            break
        return Polynomial._from_acc(self.dimension, acc)

    def _uint(self, what: str) -> int:
        tok = self.tok
        if tok.kind != "num":
            raise self._error(f"Expected {what}")
        if "." in tok.text:
            raise self._error(f"Decimal {what} {tok.text!r}; write rationals as p/q")
        self._advance()
        return int(tok.text)

    def _rational(self) -> Fraction:
        num = self._uint("integer")
        if self._is_op("/"):
            slash = self._advance()
            den = self._uint("denominator")
            if den == 0:
                raise self._error("Zero denominator", slash)
            return Fraction(num, den)
        return Fraction(num)

    def _coef(self) -> Fraction:
        if self._is_op("("):
            self._advance()
            neg = False
            if self._is_op("-") or self._is_op("+"):
                neg = self._advance().text == "-"
            value = self._rational()
            if not self._is_op(")"):
                raise self._error("Expected ')'")
            self._advance()
            return -value if neg else value
        return self._rational()

    def _term(self) -> Tuple[Exponent, Fraction]:
        if self.tok.kind == "var":
            return self._monomial(), Fraction(1)
        if self.tok.kind == "num" or self._is_op("("):
            coef = self._coef()
            if self._is_op("*"):
                self._advance()
                if self.tok.kind != "var":
                    raise self._error("Expected a variable after '*'")
                return self._monomial(), coef
            if self.tok.kind == "var":
                return self._monomial(), coef
            return (0,) * self.dimension, coef
        raise self._error("Expected a coefficient or a variable")

    def _monomial(self) -> Exponent:
        alpha = [0] * self.dimension
        while True:
            tok = self._advance()
            index = int(tok.text[1:])
            if not 1 <= index <= self.dimension:
                raise self._error(
                    f"Variable x{index} out of range for dimension {self.dimension}", tok
                )
            power = 1
            if self._is_op("^"):
                self._advance()
                if self._is_op("-") or self._is_op("(") or (
                    self.tok.kind == "num" and "." in self.tok.text
                ) or (self.tok.kind == "num" and self.tokens[self.i + 1].text == "/"):
                    raise self._error(
                        "Negative or fractional exponent; "
                        "use a real-exponent term file (--real-terms) instead"
                    )
                power = self._uint("exponent")
            alpha[index - 1] += power
            if self._is_op("*") and self.tokens[self.i + 1].kind == "var":
                self._advance()
                continue
            return tuple(alpha)


def parse(expr: str, dimension: int) -> Polynomial:
    """Parse ``expr`` into a canonical polynomial in ``dimension`` variables.

    Raises:
        ExpressionSyntaxError: On malformed input, out-of-range variables, or
            negative/fractional exponents.
    """
    if dimension < 1:
        raise DomainError(f"Dimension must be >= 1, got {dimension}")
    if not expr.strip():
        raise ExpressionSyntaxError("Empty expression", text=expr, position=0)
    f = _Parser(expr, dimension).parse()
    logger.debug("Parsed %d-term polynomial of degree %d", len(f), f.degree)
    return f
