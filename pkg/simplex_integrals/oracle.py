"""Independent checks for the integration engine.

Nothing here calls into :mod:`simplex_integrals.integrate`. The monomial
oracle is the Dirichlet formula ∫_Δ x^α dx = ∏α_i!/(n+|α|)! with its own
factorials; the Monte Carlo integrator samples uniformly from a simplex with
exponential spacings (normalized Exp(1) draws are Dirichlet(1, ..., 1)
barycentric weights).

Sampling uses numpy's PCG64 generator, whose output for a given seed is fixed
across platforms. Multi-stream runs derive child seeds with
``SeedSequence.spawn`` and pool the per-stream estimates.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, Sequence, Union

import numpy as np

from .errors import DomainError
from .models import MonteCarloEstimate
from .poly import Polynomial
from .simplex import Simplex

logger = logging.getLogger(__name__)

Integrand = Callable[[np.ndarray], np.ndarray]


# ---------------------------------------------------------------------------
# Dirichlet factorial oracle
# ---------------------------------------------------------------------------

def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def monomial_integral_oracle(alpha: Sequence[int], n: int) -> Fraction:
    """∫_Δ x^α dx = α_1!···α_n!/(n+|α|)!, exactly."""
    if len(alpha) != n:
        raise DomainError(f"Exponent {tuple(alpha)} has length {len(alpha)}, expected {n}")
    if any(a < 0 for a in alpha):
        raise DomainError(f"Exponent {tuple(alpha)} must be non-negative")
    num = 1
    for a in alpha:
        num *= _factorial(a)
    return Fraction(num, _factorial(n + sum(alpha)))


def polynomial_integral_oracle(f: Polynomial) -> Fraction:
    """Sum of the monomial oracle over the terms of ``f``."""
    total = Fraction(0)
    for alpha, coef in f.terms:
        total += coef * monomial_integral_oracle(alpha, f.dimension)
    return total


# ---------------------------------------------------------------------------
# Monte Carlo
# ---------------------------------------------------------------------------

def _vertex_array(s: Simplex) -> np.ndarray:
    return np.array([[float(c) for c in v] for v in s.vertices], dtype=float)


def _draw(s: Simplex, count: int, rng: np.random.Generator) -> np.ndarray:
    spacings = rng.exponential(scale=1.0, size=(count, s.dimension + 1))
    weights = spacings / spacings.sum(axis=1, keepdims=True)
    return weights @ _vertex_array(s)


def sample_uniform(s: Simplex, count: int, seed: int) -> np.ndarray:
    """``count`` i.i.d. uniform points of ``s`` as a (count, n) array."""
    if count < 1:
        raise DomainError(f"Sample count must be >= 1, got {count}")
    return _draw(s, count, np.random.default_rng(seed))


def as_integrand(f: Union[Polynomial, Integrand, object]) -> Integrand:
    """Adapt a Polynomial, a real-exponent sum or a callable to ``points -> values``."""
    if isinstance(f, Polynomial):
        terms = [(float(c), np.asarray(alpha)) for alpha, c in f.terms]

        def _poly(points: np.ndarray) -> np.ndarray:
            out = np.zeros(points.shape[0])
            for coef, alpha in terms:
                out += coef * np.prod(points**alpha, axis=1)
            return out

        return _poly
    evaluate = getattr(f, "evaluate", None)
    if callable(evaluate):
        return evaluate
    if callable(f):
        return f
    raise TypeError(f"Cannot integrate object of type {type(f).__name__}")


def _estimate(values: np.ndarray, volume: float) -> MonteCarloEstimate:
    count = values.shape[0]
    std = float(values.std(ddof=1)) if count > 1 else 0.0
    return MonteCarloEstimate(
        mean=volume * float(values.mean()),
        std_error=volume * std / math.sqrt(count),
        samples=count,
    )


def monte_carlo_integral(
    s: Simplex,
    f: Union[Polynomial, Integrand, object],
    count: int,
    seed: int,
    *,
    streams: int = 1,
) -> MonteCarloEstimate:
    """volume(s) × sample mean of ``f`` over uniform points of ``s``.

    With ``streams > 1`` the count is split over independently seeded
    streams evaluated in a thread pool, and the results are pooled.
    """
    if count < 1:
        raise DomainError(f"Sample count must be >= 1, got {count}")
    integrand = as_integrand(f)
    volume = float(s.volume)
    if streams <= 1:
        values = integrand(sample_uniform(s, count, seed))
        return _estimate(values, volume)

    streams = min(streams, count)
    sizes = [count // streams + (1 if k < count % streams else 0) for k in range(streams)]
    children = np.random.SeedSequence(seed).spawn(streams)

    def _run(k: int) -> MonteCarloEstimate:
        rng = np.random.default_rng(children[k])
        return _estimate(integrand(_draw(s, sizes[k], rng)), volume)

    with ThreadPoolExecutor(max_workers=streams) as pool:
        parts = list(pool.map(_run, range(streams)))
    logger.debug("Pooled %d Monte Carlo streams (%d samples)", streams, count)
    return MonteCarloEstimate.pool(parts)
