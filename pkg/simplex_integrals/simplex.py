"""Simplex geometry: canonical, scaled and vertex-defined simplices.

An arbitrary simplex Ω with vertices v_0..v_n is handled through the affine
map x = M y + a, where a = v_0 and M has columns v_i − v_0. Its inverse
y = A(x − a) with A = M^-1 sends Ω onto the canonical simplex
Δ = {y >= 0 : y_1 + ... + y_n <= 1}.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from .errors import DegenerateSimplexError, DomainError
from .linalg import Matrix, as_matrix, determinant, inverse, mat_vec
from .models import EvaluationPoint
from .poly import Polynomial, compose
from .specialfn import log_gamma

logger = logging.getLogger(__name__)

MAX_DIMENSION = 64

Vector = Tuple[Fraction, ...]
RealLike = Union[int, Fraction, float]


def _as_vector(values: Sequence[RealLike]) -> Vector:
    return tuple(Fraction(v) for v in values)


# ---------------------------------------------------------------------------
# Simplex types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CanonicalSimplex:
    """Δ = {x ∈ R^n_+ : eᵀx <= 1}."""

    dimension: int

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise DomainError(f"Dimension must be >= 1, got {self.dimension}")

    @property
    def volume(self) -> Fraction:
        return Fraction(1, math.factorial(self.dimension))

    def vertices(self) -> Tuple[Vector, ...]:
        n = self.dimension
        origin = (Fraction(0),) * n
        units = tuple(
            tuple(Fraction(1 if i == k else 0) for i in range(n)) for k in range(n)
        )
        return (origin,) + units

    def to_simplex(self) -> Simplex:
        return from_vertices(self.vertices())


@dataclass(frozen=True)
class ScaledSimplex:
    """Δ_z = {x ∈ R^n_+ : zᵀx <= 1} for a positive weight vector z."""

    z: Vector

    def __post_init__(self) -> None:
        z = _as_vector(self.z)
        if not z:
            raise DomainError("Scaled simplex needs at least one weight")
        for zi in z:
            if zi <= 0:
                raise DomainError(f"Scaled simplex weights must be positive, got {zi}")
        object.__setattr__(self, "z", z)

    @property
    def dimension(self) -> int:
        return len(self.z)

    @property
    def volume(self) -> Fraction:
        return Fraction(1, math.factorial(self.dimension)) / math.prod(self.z)

    def vertices(self) -> Tuple[Vector, ...]:
        n = self.dimension
        origin = (Fraction(0),) * n
        corners = tuple(
            tuple(1 / self.z[k] if i == k else Fraction(0) for i in range(n)) for k in range(n)
        )
        return (origin,) + corners

    def to_simplex(self) -> Simplex:
        return from_vertices(self.vertices())


@dataclass(frozen=True)
class Simplex:
    """A full-dimensional simplex given by n+1 vertices in R^n.

    Use :func:`from_vertices` to build one; it derives the fields below.

    Attributes:
        vertices: v_0..v_n.
        base: a = v_0.
        edges: M, with M[i][k] = (v_{k+1} − v_0)[i].
        inverse: A = M^-1.
        det: det M (signed).
    """

    vertices: Tuple[Vector, ...]
    base: Vector
    edges: Matrix
    inverse: Matrix
    det: Fraction

    @property
    def dimension(self) -> int:
        return len(self.base)

    @property
    def jacobian(self) -> Fraction:
        """|det M|, the volume scale from Δ to Ω."""
        return abs(self.det)

    @property
    def volume(self) -> Fraction:
        return self.jacobian / math.factorial(self.dimension)

    def to_canonical(self, x: Sequence[RealLike]) -> Tuple[RealLike, ...]:
        """y = A(x − a); exact for rational input, float otherwise."""
        if len(x) != self.dimension:
            raise DomainError(f"Point has {len(x)} coordinates, expected {self.dimension}")
        if all(isinstance(v, (int, Fraction)) for v in x):
            diff = tuple(Fraction(v) - b for v, b in zip(x, self.base))
            return mat_vec(self.inverse, diff)
        diff_f = [float(v) - float(b) for v, b in zip(x, self.base)]
        return tuple(
            math.fsum(float(a) * d for a, d in zip(row, diff_f)) for row in self.inverse
        )

    def from_canonical(self, y: Sequence[RealLike]) -> Tuple[RealLike, ...]:
        """x = M y + a; exact for rational input, float otherwise."""
        if len(y) != self.dimension:
            raise DomainError(f"Point has {len(y)} coordinates, expected {self.dimension}")
        if all(isinstance(v, (int, Fraction)) for v in y):
            my = mat_vec(self.edges, _as_vector(y))
            return tuple(v + b for v, b in zip(my, self.base))
        return tuple(
            math.fsum(float(m) * float(v) for m, v in zip(row, y)) + float(b)
            for row, b in zip(self.edges, self.base)
        )

    def contains(self, x: Sequence[RealLike], tol: float = 0.0) -> bool:
        """Barycentric membership test (tolerance applies to float input)."""
        y = self.to_canonical(x)
        return all(c >= -tol for c in y) and sum(y) <= 1 + tol


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def from_vertices(
    vertices: Sequence[Sequence[RealLike]], *, max_dimension: int = MAX_DIMENSION
) -> Simplex:
    """Build a :class:`Simplex` from n+1 points of R^n, in exact arithmetic.

    Raises:
        DomainError: On a wrong point count, ragged coordinates or n above
            ``max_dimension``.
        DegenerateSimplexError: If the vertices are affinely dependent.
    """
    pts = tuple(_as_vector(v) for v in vertices)
    n = len(pts) - 1
    if n < 1:
        raise DomainError(f"A simplex needs at least 2 vertices, got {len(pts)}")
    if any(len(p) != n for p in pts):
        raise DomainError(
            f"Expected {n + 1} points of dimension {n}, got lengths {[len(p) for p in pts]}"
        )
    if n > max_dimension:
        raise DomainError(f"Dimension {n} exceeds the supported maximum {max_dimension}")

    base = pts[0]
    edges = as_matrix([[pts[k + 1][i] - base[i] for k in range(n)] for i in range(n)])
    if determinant(edges) == 0:
        raise DegenerateSimplexError(edges)
    inv, det = inverse(edges)
    logger.debug("Simplex in R^%d with det M = %s", n, det)
    return Simplex(vertices=pts, base=base, edges=edges, inverse=inv, det=det)


def pullback(s: Simplex, f: Polynomial) -> Polynomial:
    """g(y) = f(M y + a), expanded in canonical form."""
    if f.dimension != s.dimension:
        raise DomainError(
            f"Polynomial dimension {f.dimension} does not match simplex dimension {s.dimension}"
        )
    substitutions = [Polynomial.linear(s.edges[i], s.base[i]) for i in range(s.dimension)]
    return compose(f, substitutions)


def evaluation_point(n: int, j: int) -> EvaluationPoint:
    """ξ_j = e/θ with θ^j = (n+1)···(n+j)."""
    if n < 1:
        raise DomainError(f"Dimension must be >= 1, got {n}")
    if j < 1:
        raise DomainError(f"Degree must be >= 1, got {j}")
    product = math.prod(range(n + 1, n + j + 1))
    if j == 1:
        theta = float(product)
    else:
        try:
            theta = float(product) ** (1.0 / j)
        except OverflowError:
            theta = math.exp(math.log(product) / j)
    xi = 1.0 / theta
    return EvaluationPoint(
        dimension=n, degree=j, theta=theta, theta_power=product, point=(xi,) * n
    )


def evaluation_point_real(n: int, t: float) -> EvaluationPoint:
    """ξ_t = e/θ with θ^t = Γ(1+n+t)/Γ(1+n), via log-Gamma.

    Raises:
        DomainError: If t = 0 (θ indeterminate) or t <= −(1+n).
    """
    if n < 1:
        raise DomainError(f"Dimension must be >= 1, got {n}")
    t = float(t)
    if t == 0:
        raise DomainError("ξ_t is undefined for t = 0; use the Γ-weighted form f̂(e)/Γ(1+n)")
    if t <= -(1 + n):
        raise DomainError(f"Degree t must exceed -(1+n) = {-(1 + n)}, got {t}")
    theta = math.exp((log_gamma(1 + n + t) - log_gamma(1 + n)) / t)
    return EvaluationPoint(dimension=n, degree=t, theta=theta, point=(1.0 / theta,) * n)


def mapped_evaluation_points(s: Simplex, t: int) -> List[Tuple[float, ...]]:
    """ψ_j = M ξ_j + a for j = 1..t: the aligned points inside Ω."""
    return [
        tuple(float(c) for c in s.from_canonical(evaluation_point(s.dimension, j).point))
        for j in range(1, t + 1)
    ]


def canonical_simplex(n: int) -> Simplex:
    """The canonical simplex as a vertex-defined :class:`Simplex`."""
    return CanonicalSimplex(n).to_simplex()
