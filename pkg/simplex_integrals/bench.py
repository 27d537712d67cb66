"""Timing table for the exact, ξ-point and Monte Carlo paths.

Rows are written as CSV with columns
``method,degree,n,terms,nanoseconds,abs_error`` for external plotting.
"""

from __future__ import annotations

import csv
import logging
import time
from typing import Callable, Iterable, List, Sequence, TextIO, Tuple

import numpy as np
from pydantic import BaseModel

from .integrate import integrate_canonical_exact, integrate_canonical_xi, integrate_many
from .oracle import monte_carlo_integral
from .poly import Exponent, Polynomial
from .simplex import canonical_simplex

logger = logging.getLogger(__name__)

CSV_FIELDS = ("method", "degree", "n", "terms", "nanoseconds", "abs_error")


class BenchRow(BaseModel):
    """One timed run of one integration path."""

    method: str
    degree: int
    n: int
    terms: int
    nanoseconds: int
    abs_error: float


def random_polynomial(
    rng: np.random.Generator, n: int, degree: int, terms: int, coef_range: int = 10
) -> Polynomial:
    """Integer-coefficient polynomial with at most ``terms`` terms.

    The first drawn term has full degree; coefficients lie in
    [−coef_range, coef_range] \\ {0}.
    """
    mapping = {}
    for k in range(terms):
        d = degree if k == 0 else int(rng.integers(0, degree + 1))
        alpha: Exponent = tuple(int(a) for a in rng.multinomial(d, [1.0 / n] * n))
        coef = int(rng.integers(-coef_range, coef_range + 1)) or 1
        mapping[alpha] = coef
    return Polynomial.from_mapping(n, mapping)


def _best_time(fn: Callable[[], object], repeats: int) -> Tuple[int, object]:
    best = None
    result: object = None
    for _ in range(repeats):
        start = time.perf_counter_ns()
        result = fn()
        elapsed = time.perf_counter_ns() - start
        best = elapsed if best is None else min(best, elapsed)
    return int(best or 0), result


def run_bench(
    *,
    degrees: Sequence[int],
    dimensions: Sequence[int],
    repeats: int,
    terms: int,
    samples: int,
    seed: int,
    workers: int = 1,
) -> List[BenchRow]:
    """Time each path on one random polynomial per (n, degree) pair.

    Reference values come from one batched exact pass over all polynomials,
    spread over ``workers`` processes.
    """
    rng = np.random.default_rng(seed)
    cases = [
        (n, degree, random_polynomial(rng, n, degree, terms))
        for n in dimensions
        for degree in degrees
    ]
    references = integrate_many([f for _, _, f in cases], workers=workers)

    rows: List[BenchRow] = []
    for (n, degree, f), reference in zip(cases, references):
        exact = reference.approx
        ns, _ = _best_time(lambda f=f: integrate_canonical_exact(f), repeats)
        rows.append(BenchRow(method="exact", degree=degree, n=n, terms=len(f),
                             nanoseconds=ns, abs_error=0.0))

        ns, xi_result = _best_time(lambda f=f: integrate_canonical_xi(f), repeats)
        rows.append(BenchRow(method="xi", degree=degree, n=n, terms=len(f),
                             nanoseconds=ns, abs_error=abs(xi_result.approx - exact)))

        mc_seed = int(rng.integers(0, 2**63))
        simplex = canonical_simplex(n)
        ns, mc = _best_time(
            lambda f=f, sx=simplex, s=mc_seed: monte_carlo_integral(sx, f, samples, s), 1
        )
        rows.append(BenchRow(method="monte-carlo", degree=degree, n=n, terms=len(f),
                             nanoseconds=ns, abs_error=abs(mc.mean - exact)))
        logger.debug("Benchmarked n=%d degree=%d (%d terms)", n, degree, len(f))
    logger.info("Benchmark produced %d rows", len(rows))
    return rows


def write_csv(rows: Iterable[BenchRow], stream: TextIO) -> int:
    """Write rows as CSV with a header; returns the row count."""
    writer = csv.DictWriter(stream, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    count = 0
    for r in rows:
        writer.writerow(r.model_dump())
        count += 1
    return count
