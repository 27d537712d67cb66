"""Result records for simplex-integrals."""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator


class IntegrationMode(str, Enum):
    """Which closed form produced an integral."""

    EXACT = "exact-bombieri-at-e"
    XI = "float-xi-points"
    GAMMA = "gamma-weighted"


def as_float(value: Fraction) -> float:
    """Nearest double to ``value``; ±inf when it lies beyond the float range."""
    try:
        return float(value)
    except OverflowError:
        return math.inf if value > 0 else -math.inf


def _coerce_fraction(value: Any) -> Any:
    if value is None or isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    return value


class IntegralResult(BaseModel):
    """Value of an integral, exact when a rational path applies.

    JSON form is ``{"exact": "p/q" | null, "approx": x, "mode": s}``.
    """

    model_config = ConfigDict(
        frozen=True, arbitrary_types_allowed=True, ser_json_inf_nan="constants"
    )

    exact: Optional[Fraction] = None
    approx: float
    mode: IntegrationMode

    @field_validator("exact", mode="before")
    @classmethod
    def _parse_exact(cls, value: Any) -> Any:
        return _coerce_fraction(value)

    @field_serializer("exact")
    def _dump_exact(self, value: Optional[Fraction]) -> Optional[str]:
        return None if value is None else str(value)

    @classmethod
    def from_exact(
        cls, value: Fraction, mode: IntegrationMode = IntegrationMode.EXACT
    ) -> IntegralResult:
        """Build a result whose float is the rounding of ``value``."""
        return cls(exact=value, approx=as_float(value), mode=mode)

    def agrees_with(self, other: IntegralResult, rel: float) -> bool:
        """Compare approximations relative to max(1, |self|)."""
        scale = max(1.0, abs(self.approx))
        return abs(self.approx - other.approx) <= rel * scale


class EvaluationPoint(BaseModel):
    """The point ξ = e/θ at which a degree-j Bombieri form is evaluated.

    ``theta_power`` holds the exact integer (n+1)···(n+j) for integer degrees.
    """

    model_config = ConfigDict(frozen=True)

    dimension: int = Field(ge=1)
    degree: Union[int, float]
    theta: float = Field(gt=0)
    theta_power: Optional[int] = None
    point: Tuple[float, ...]


class MonteCarloEstimate(BaseModel):
    """Sample-mean estimate of an integral with its standard error."""

    model_config = ConfigDict(frozen=True)

    mean: float
    std_error: float = Field(ge=0)
    samples: int = Field(ge=1)

    def within(self, value: float, sigmas: float = 4.0) -> bool:
        """True if ``value`` lies inside the ``sigmas`` band around the mean."""
        if self.std_error == 0:
            return math.isclose(self.mean, value, rel_tol=1e-12, abs_tol=1e-15)
        return abs(self.mean - value) <= sigmas * self.std_error

    @classmethod
    def pool(cls, estimates: Iterable[MonteCarloEstimate]) -> MonteCarloEstimate:
        """Merge independent estimates, weighting each by its sample count."""
        parts = list(estimates)
        if not parts:
            raise ValueError("pool() needs at least one estimate")
        total = sum(p.samples for p in parts)
        mean = math.fsum(p.mean * p.samples for p in parts) / total
        var = math.fsum((p.samples / total) ** 2 * p.std_error**2 for p in parts)
        return cls(mean=mean, std_error=math.sqrt(var), samples=total)
