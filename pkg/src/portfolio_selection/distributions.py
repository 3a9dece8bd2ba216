"""Bounded sampling distributions for project types and qualities.

Three families are supported: uniform, truncated normal, and a bounded
power law with density proportional to ``(q - lower)**exponent``.  All
sampling goes through the inverse CDF so that every draw consumes exactly
one uniform variate, which keeps replication streams aligned regardless of
the distribution in play.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import stats

from .errors import ConfigurationError

UNIFORM = "uniform"
TRUNCATED_NORMAL = "truncated-normal"
POWER_LAW = "power-law"

_KINDS = (UNIFORM, TRUNCATED_NORMAL, POWER_LAW)


@dataclass(frozen=True)
class DistributionSpec:
    """Tagged description of a bounded sampling distribution.

    ``mean`` and ``sd`` apply to the truncated normal only; ``exponent``
    applies to the power law only (must be > -1 so the density is
    integrable at the lower endpoint).
    """

    kind: str
    lower: float
    upper: float
    mean: float | None = None
    sd: float | None = None
    exponent: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ConfigurationError(f"unknown distribution kind {self.kind!r}")
        if not self.lower < self.upper:
            raise ConfigurationError(
                f"lower bound {self.lower} must be below upper bound {self.upper}"
            )
        if self.kind == TRUNCATED_NORMAL:
            if self.mean is None or self.sd is None:
                raise ConfigurationError("truncated-normal requires mean and sd")
            if self.sd <= 0:
                raise ConfigurationError(f"sd must be positive, got {self.sd}")
        elif self.mean is not None or self.sd is not None:
            raise ConfigurationError(f"mean/sd only apply to {TRUNCATED_NORMAL}")
        if self.kind == POWER_LAW:
            if self.exponent is None:
                raise ConfigurationError("power-law requires an exponent")
            if self.exponent <= -1:
                raise ConfigurationError(
                    f"power-law exponent must exceed -1, got {self.exponent}"
                )
        elif self.exponent is not None:
            raise ConfigurationError(f"exponent only applies to {POWER_LAW}")

    def label(self) -> str:
        """Compact human-readable tag used in CSV output (no commas)."""
        if self.kind == UNIFORM:
            return f"uniform({self.lower:g};{self.upper:g})"
        if self.kind == TRUNCATED_NORMAL:
            return (
                f"truncated-normal({self.mean:g};{self.sd:g};"
                f"{self.lower:g};{self.upper:g})"
            )
        return f"power-law({self.exponent:g};{self.lower:g};{self.upper:g})"


def uniform(lower: float, upper: float) -> DistributionSpec:
    return DistributionSpec(UNIFORM, lower, upper)


def truncated_normal(
    mean: float, sd: float, lower: float, upper: float
) -> DistributionSpec:
    return DistributionSpec(TRUNCATED_NORMAL, lower, upper, mean=mean, sd=sd)


def power_law(exponent: float, lower: float, upper: float) -> DistributionSpec:
    return DistributionSpec(POWER_LAW, lower, upper, exponent=exponent)


def _truncnorm_frozen(dist: DistributionSpec):
    a = (dist.lower - dist.mean) / dist.sd
    b = (dist.upper - dist.mean) / dist.sd
    return stats.truncnorm(a, b, loc=dist.mean, scale=dist.sd)


def pdf(dist: DistributionSpec, q) -> np.ndarray:
    """Density of ``dist`` evaluated at ``q`` (zero outside the support)."""
    q = np.asarray(q, dtype=float)
    width = dist.upper - dist.lower
    inside = (q >= dist.lower) & (q <= dist.upper)
    if dist.kind == UNIFORM:
        out = np.where(inside, 1.0 / width, 0.0)
    elif dist.kind == TRUNCATED_NORMAL:
        out = np.where(inside, _truncnorm_frozen(dist).pdf(q), 0.0)
    else:
        a = dist.exponent
        norm = (a + 1.0) / width ** (a + 1.0)
        with np.errstate(divide="ignore"):
            out = np.where(inside, norm * (q - dist.lower) ** a, 0.0)
    return out if out.ndim else float(out)


def cdf(dist: DistributionSpec, q) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    width = dist.upper - dist.lower
    if dist.kind == UNIFORM:
        out = (q - dist.lower) / width
    elif dist.kind == TRUNCATED_NORMAL:
        out = _truncnorm_frozen(dist).cdf(q)
    else:
        out = ((q - dist.lower) / width) ** (dist.exponent + 1.0)
    out = np.clip(out, 0.0, 1.0)
    return out if out.ndim else float(out)


def ppf(dist: DistributionSpec, u) -> np.ndarray:
    """Inverse CDF; maps uniforms on [0, 1] into the support of ``dist``."""
    u = np.asarray(u, dtype=float)
    width = dist.upper - dist.lower
    if dist.kind == UNIFORM:
        out = dist.lower + width * u
    elif dist.kind == TRUNCATED_NORMAL:
        out = _truncnorm_frozen(dist).ppf(u)
    else:
        out = dist.lower + width * u ** (1.0 / (dist.exponent + 1.0))
    out = np.clip(out, dist.lower, dist.upper)
    return out if out.ndim else float(out)


def sample(dist: DistributionSpec, rng: np.random.Generator, size=None):
    """Draw from ``dist`` by inverse-transform sampling.

    Returns a scalar when ``size`` is None, else an array of the given shape.
    """
    u = rng.random(size)
    return ppf(dist, u)
