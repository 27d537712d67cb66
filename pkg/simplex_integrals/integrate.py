"""Closed-form integration over canonical, scaled and arbitrary simplices.

The exact path rests on

    ∫_Δ f_j dx = f̂_j(e) / (n+j)!

for every homogeneous part f_j of f, where f̂ multiplies each coefficient by
α_1!···α_n!. The float path evaluates the same Bombieri forms at the single
interior points ξ_j = e/((n+1)···(n+j))^{1/j} and divides by n!. Both return
an :class:`~simplex_integrals.models.IntegralResult`.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import repeat
from typing import Dict, Iterable, List, Sequence, Tuple, Union

import numpy as np

from .errors import DomainError
from .linalg import mat_vec, transpose
from .models import IntegralResult, IntegrationMode, as_float
from .poly import (
    Polynomial,
    bombieri,
    evaluate,
    factorial_product,
    homogeneous_parts,
    total_degree,
)
from .simplex import (
    ScaledSimplex,
    Simplex,
    evaluation_point,
    evaluation_point_real,
    pullback,
)
from .specialfn import log_gamma

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]


# ---------------------------------------------------------------------------
# Integrand types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearFormPower:
    """(ℓ·x)^t."""

    ell: Tuple[Fraction, ...]
    power: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "ell", tuple(Fraction(v) for v in self.ell))
        if not self.ell:
            raise DomainError("Linear form needs at least one coefficient")
        if self.power < 0:
            raise DomainError(f"Power must be >= 0, got {self.power}")

    @property
    def dimension(self) -> int:
        return len(self.ell)

    def expand(self) -> Polynomial:
        return Polynomial.linear(self.ell) ** self.power


@dataclass(frozen=True)
class WaringDecomposition:
    """Σ_i ε_i (c_i·x)^t with ε_i ∈ {−1, +1}."""

    terms: Tuple[Tuple[int, Tuple[Fraction, ...]], ...]
    power: int

    def __post_init__(self) -> None:
        terms = tuple((eps, tuple(Fraction(v) for v in c)) for eps, c in self.terms)
        if not terms:
            raise DomainError("Waring decomposition needs at least one term")
        if self.power < 0:
            raise DomainError(f"Power must be >= 0, got {self.power}")
        n = len(terms[0][1])
        for eps, c in terms:
            if eps not in (-1, 1):
                raise DomainError(f"Waring sign must be +1 or -1, got {eps}")
            if len(c) != n or n == 0:
                raise DomainError("Waring vectors must share one non-zero length")
        object.__setattr__(self, "terms", terms)

    @property
    def dimension(self) -> int:
        return len(self.terms[0][1])

    def expand(self) -> Polynomial:
        out = Polynomial.zero(self.dimension)
        for eps, c in self.terms:
            out = out + eps * Polynomial.linear(c) ** self.power
        return out


@dataclass(frozen=True)
class RealExponentSum:
    """Σ f_α x^α with real α_i > −1, positively homogeneous of degree t."""

    dimension: int
    terms: Tuple[Tuple[float, Tuple[float, ...]], ...]

    def __post_init__(self) -> None:
        n = self.dimension
        if n < 1:
            raise DomainError(f"Dimension must be >= 1, got {n}")
        terms = tuple((float(c), tuple(float(a) for a in alpha)) for c, alpha in self.terms)
        if not terms:
            raise DomainError("Real-exponent sum needs at least one term")
        for _, alpha in terms:
            if len(alpha) != n:
                raise DomainError(f"Exponent {alpha} has length {len(alpha)}, expected {n}")
            if any(not a > -1 for a in alpha):
                raise DomainError(f"Exponents must satisfy alpha_i > -1, got {alpha}")
        degrees = [math.fsum(alpha) for _, alpha in terms]
        t = degrees[0]
        for d in degrees[1:]:
            if not math.isclose(d, t, rel_tol=1e-12, abs_tol=1e-12):
                raise DomainError(f"All terms must share one total degree, got {t} and {d}")
        if not t > -(1 + n):
            raise DomainError(f"Total degree must exceed -(1+n) = {-(1 + n)}, got {t}")
        object.__setattr__(self, "terms", terms)

    @property
    def degree(self) -> float:
        return math.fsum(self.terms[0][1])

    @classmethod
    def from_polynomial(cls, f: Polynomial) -> RealExponentSum:
        """View a non-zero homogeneous polynomial as a real-exponent sum."""
        if f.is_zero or not f.is_homogeneous:
            raise DomainError(
                "Only non-zero homogeneous polynomials convert to a real-exponent sum"
            )
        return cls(f.dimension, tuple((float(c), tuple(map(float, a))) for a, c in f.terms))

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        """Vectorized evaluation at an (m, n) array of positive points."""
        pts = np.asarray(points, dtype=float)
        out = np.zeros(pts.shape[0])
        for coef, alpha in self.terms:
            out += coef * np.prod(np.power(pts, np.asarray(alpha)), axis=1)
        return out


# ---------------------------------------------------------------------------
# Canonical simplex
# ---------------------------------------------------------------------------

def _bombieri_at_ones_by_degree(f: Polynomial) -> Dict[int, Fraction]:
    """f̂_j(e) for each degree j present in ``f``."""
    ints: Dict[int, int] = {}
    fracs: Dict[int, Fraction] = {}
    for alpha, coef in f.terms:
        j = total_degree(alpha)
        weight = factorial_product(alpha)
        if coef.denominator == 1:
            ints[j] = ints.get(j, 0) + coef.numerator * weight
        else:
            fracs[j] = fracs.get(j, Fraction(0)) + coef * weight
    out: Dict[int, Fraction] = {j: Fraction(v) for j, v in ints.items()}
    for j, v in fracs.items():
        out[j] = out.get(j, Fraction(0)) + v
    return out


def integrate_canonical_exact(f: Polynomial) -> IntegralResult:
    """Σ_j f̂_j(e)/(n+j)!, exactly."""
    n = f.dimension
    total = Fraction(0)
    for j, value in _bombieri_at_ones_by_degree(f).items():
        total += value / math.factorial(n + j)
    logger.debug("Exact canonical integral of %d terms in R^%d: %s", len(f), n, total)
    return IntegralResult.from_exact(total)


def integrate_canonical_xi(f: Polynomial) -> IntegralResult:
    """(1/n!)(f̂_0 + Σ_j f̂_j(ξ_j)) in floating point."""
    n = f.dimension
    values: List[float] = []
    for part in homogeneous_parts(f):
        if part.body.is_zero:
            continue
        hat = bombieri(part.body)
        if part.degree == 0:
            values.append(float(hat.coefficient((0,) * n)))
            continue
        xi = evaluation_point(n, part.degree).point
        values.append(evaluate(hat, xi))
    approx = math.fsum(values) / math.factorial(n)
    return IntegralResult(exact=None, approx=approx, mode=IntegrationMode.XI)


def integrate_canonical(
    f: Polynomial, mode: IntegrationMode = IntegrationMode.EXACT
) -> IntegralResult:
    """Integrate over Δ with the exact (default) or ξ-point path."""
    if mode is IntegrationMode.EXACT:
        return integrate_canonical_exact(f)
    if mode is IntegrationMode.XI:
        return integrate_canonical_xi(f)
    raise DomainError(f"Mode {mode.value} does not apply to polynomials")


def _integrate_one(f: Polynomial, mode: IntegrationMode) -> IntegralResult:
    return integrate_canonical(f, mode)


def integrate_many(
    polys: Iterable[Polynomial],
    *,
    workers: int = 1,
    mode: IntegrationMode = IntegrationMode.EXACT,
) -> List[IntegralResult]:
    """Integrate a batch over Δ, in input order; ``workers > 1`` uses processes."""
    items = list(polys)
    if workers <= 1 or len(items) < 2:
        return [integrate_canonical(f, mode) for f in items]
    logger.info("Integrating %d polynomials with %d workers", len(items), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_integrate_one, items, repeat(mode)))


# ---------------------------------------------------------------------------
# Scaled simplex and the Laplace identity
# ---------------------------------------------------------------------------

def integrate_scaled(f: Polynomial, z: Sequence[Rational]) -> IntegralResult:
    """∫ over Δ_z of f: per term α!·f_α·(1/z)^α·(1/z^e)/(n+|α|)!.

    Non-homogeneous ``f`` is handled part by part.
    """
    scaled = ScaledSimplex(tuple(z))
    if scaled.dimension != f.dimension:
        raise DomainError(f"z has {scaled.dimension} entries, expected {f.dimension}")
    n = f.dimension
    inv_z = [1 / zi for zi in scaled.z]
    total = Fraction(0)
    for alpha, coef in f.terms:
        weight = math.prod(w**a for w, a in zip(inv_z, alpha) if a)
        total += coef * factorial_product(alpha) * weight / math.factorial(n + total_degree(alpha))
    return IntegralResult.from_exact(total * math.prod(inv_z))


def laplace_identity_check(
    alpha: Sequence[int], z: Sequence[Rational]
) -> Tuple[Fraction, Fraction]:
    """Both sides of Γ(1+n+t)·∫_{Δ_z} x^α = ∫_{R^n_+} x^α exp(−zᵀx) dx.

    The left side goes through :func:`integrate_scaled`; the right side is
    the orthant closed form α_1!···α_n!·z^{−α−e}.
    """
    mono = Polynomial.monomial(tuple(alpha))
    scaled = ScaledSimplex(tuple(z))
    if scaled.dimension != mono.dimension:
        raise DomainError(f"z has {scaled.dimension} entries, expected {mono.dimension}")
    t = total_degree(alpha)
    lhs = math.factorial(mono.dimension + t) * integrate_scaled(mono, scaled.z).exact
    rhs = Fraction(factorial_product(alpha))
    for zi, a in zip(scaled.z, alpha):
        rhs *= zi ** (-(a + 1))
    return lhs, rhs


# ---------------------------------------------------------------------------
# Powers of linear forms
# ---------------------------------------------------------------------------

def _complete_sums(ell: Sequence[Rational], t: int) -> List[Fraction]:
    """[E_0(ℓ), ..., E_t(ℓ)] by the recurrence over variables.

    Adding variable ℓ_k: E_s ← Σ_m ℓ_k^m E_{s−m} = E_s + ℓ_k·E_{s−1} (new).
    """
    e = [Fraction(1)] + [Fraction(0)] * t
    for lk in ell:
        lk = Fraction(lk)
        if lk == 0:
            continue
        for s in range(1, t + 1):
            e[s] += lk * e[s - 1]
    return e


def e_t(ell: Sequence[Rational], t: int) -> Fraction:
    """E_t(ℓ) = Σ_{|α|=t} ℓ^α, in O(n·t) operations."""
    if t < 0:
        raise DomainError(f"t must be >= 0, got {t}")
    return _complete_sums(ell, t)[t]


def integrate_linear_form_power(lp: LinearFormPower) -> IntegralResult:
    """∫_Δ (ℓ·x)^t dx = t!/(n+t)!·E_t(ℓ)."""
    n, t = lp.dimension, lp.power
    value = Fraction(math.factorial(t), math.factorial(n + t)) * e_t(lp.ell, t)
    return IntegralResult.from_exact(value)


# ---------------------------------------------------------------------------
# Arbitrary simplex
# ---------------------------------------------------------------------------

def integrate_simplex(
    s: Simplex, f: Polynomial, mode: IntegrationMode = IntegrationMode.EXACT
) -> IntegralResult:
    """∫_Ω f = |det M|·∫_Δ g with g(y) = f(M y + a).

    In ξ mode the Bombieri parts ĝ_j are evaluated at ξ_j = A(ψ_j − a).
    """
    g = pullback(s, f)
    if mode is IntegrationMode.EXACT:
        inner = integrate_canonical_exact(g).exact
        return IntegralResult.from_exact(s.jacobian * inner)
    if mode is IntegrationMode.XI:
        inner_approx = integrate_canonical_xi(g).approx
        return IntegralResult(exact=None, approx=as_float(s.jacobian) * inner_approx, mode=mode)
    raise DomainError(f"Mode {mode.value} does not apply to polynomials")


def integrate_waring(s: Simplex, w: WaringDecomposition) -> IntegralResult:
    """∫_Ω Σ_i ε_i (c_i·x)^t via the binomial expansion around a.

    With ℓ_i = Mᵀc_i:
    |det M|·Σ_k C(t,k)·k!/(n+k)!·Σ_i ε_i (c_i·a)^{t−k} E_k(ℓ_i).
    """
    if w.dimension != s.dimension:
        raise DomainError(
            f"Decomposition dimension {w.dimension} does not match simplex dimension {s.dimension}"
        )
    n, t = s.dimension, w.power
    mt = transpose(s.edges)
    inner = [Fraction(0)] * (t + 1)
    for eps, c in w.terms:
        ell = mat_vec(mt, c)
        ca = sum((ci * ai for ci, ai in zip(c, s.base)), Fraction(0))
        sums = _complete_sums(ell, t)
        for k in range(t + 1):
            inner[k] += eps * ca ** (t - k) * sums[k]
    total = Fraction(0)
    for k in range(t + 1):
        total += Fraction(math.comb(t, k) * math.factorial(k), math.factorial(n + k)) * inner[k]
    return IntegralResult.from_exact(s.jacobian * total)


# ---------------------------------------------------------------------------
# Real exponents
# ---------------------------------------------------------------------------

def _signed_log_sum(logs: Sequence[float], signs: Sequence[int]) -> float:
    if not logs:
        return 0.0
    top = max(logs)
    scaled = math.fsum(sg * math.exp(lg - top) for lg, sg in zip(logs, signs))
    try:
        return scaled * math.exp(top)
    except OverflowError:
        return math.copysign(math.inf, scaled)


def _log_gamma_weight(alpha: Sequence[float]) -> float:
    return math.fsum(log_gamma(1.0 + a) for a in alpha)


def integrate_real_exponents(
    f: RealExponentSum, mode: IntegrationMode = IntegrationMode.GAMMA
) -> IntegralResult:
    """Σ_α f_α ∏Γ(1+α_i)/Γ(1+n+t), or (1/n!)·f̂(ξ_t) in ξ mode.

    Raises:
        DomainError: For ξ mode when t = 0.
    """
    n, t = f.dimension, f.degree
    if mode is IntegrationMode.GAMMA:
        denom = log_gamma(1.0 + n + t)
        logs: List[float] = []
        signs: List[int] = []
        for coef, alpha in f.terms:
            if coef == 0:
                continue
            logs.append(math.log(abs(coef)) + _log_gamma_weight(alpha) - denom)
            signs.append(1 if coef > 0 else -1)
        return IntegralResult(exact=None, approx=_signed_log_sum(logs, signs), mode=mode)
    if mode is IntegrationMode.XI:
        if t == 0:
            raise DomainError("The ξ_t form is not applicable for total degree 0; use gamma mode")
        xi = evaluation_point_real(n, t).point
        log_xi = [math.log(x) for x in xi]
        values: List[float] = []
        for coef, alpha in f.terms:
            log_power = math.fsum(a * lx for a, lx in zip(alpha, log_xi))
            values.append(coef * math.exp(_log_gamma_weight(alpha) + log_power))
        return IntegralResult(exact=None, approx=math.fsum(values) / math.factorial(n), mode=mode)
    raise DomainError(f"Mode {mode.value} does not apply to real-exponent sums")


def integrate_scaled_real(f: RealExponentSum, z: Sequence[float]) -> IntegralResult:
    """∫ over Δ_z of f: Σ_α f_α z^{−α−e} ∏Γ(1+α_i)/Γ(1+n+t)."""
    zs = [float(v) for v in z]
    if len(zs) != f.dimension:
        raise DomainError(f"z has {len(zs)} entries, expected {f.dimension}")
    if any(not v > 0 for v in zs):
        raise DomainError(f"Scaled simplex weights must be positive, got {zs}")
    log_z = [math.log(v) for v in zs]
    denom = log_gamma(1.0 + f.dimension + f.degree)
    logs: List[float] = []
    signs: List[int] = []
    for coef, alpha in f.terms:
        if coef == 0:
            continue
        shift = math.fsum((a + 1.0) * lz for a, lz in zip(alpha, log_z))
        logs.append(math.log(abs(coef)) + _log_gamma_weight(alpha) - shift - denom)
        signs.append(1 if coef > 0 else -1)
    return IntegralResult(
        exact=None, approx=_signed_log_sum(logs, signs), mode=IntegrationMode.GAMMA
    )
