"""Closed-form and numeric order-statistic benchmarks.

The expected total quality of the true top-m projects out of n bounds what
any selection rule can achieve.  For a uniform quality distribution the
bound is closed-form; for other distributions it is computed by quadrature
over the order-statistic densities.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy import stats
from scipy.special import roots_legendre

from .distributions import DistributionSpec, cdf, pdf, ppf
from .errors import ConfigurationError, DomainError, NumericError


@dataclass(frozen=True)
class PerformanceBound:
    """Best attainable expected portfolio performance (total and per project)."""

    total: float
    per_project: float


def _check_m_n(m: int, n: int) -> None:
    if not 1 <= m <= n:
        raise ConfigurationError(f"need 1 <= m <= n, got m={m}, n={n}")


def max_performance_uniform(
    m: int, n: int, q_low: float, q_high: float
) -> PerformanceBound:
    """Expected total of the top m of n draws from U(q_low, q_high)."""
    _check_m_n(m, n)
    if not q_low < q_high:
        raise ConfigurationError(f"need q_low < q_high, got {q_low}, {q_high}")
    total = m * (q_low + (q_high - q_low) * (2 * n + 1 - m) / (2 * n + 2))
    return PerformanceBound(total=total, per_project=total / m)


def order_statistic_pdf(
    i: int, n: int, quality_dist: DistributionSpec
) -> Callable[[np.ndarray], np.ndarray]:
    """Density of the i-th smallest of n i.i.d. draws (i = 1 is the minimum)."""
    if not 1 <= i <= n:
        raise ConfigurationError(f"rank index must satisfy 1 <= i <= n, got {i}")
    beta = stats.beta(i, n + 1 - i)

    def density(q):
        return beta.pdf(cdf(quality_dist, q)) * pdf(quality_dist, q)

    return density


@lru_cache(maxsize=8)
def _unit_gauss_legendre(points: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes/weights mapped from [-1, 1] to [0, 1]."""
    x, w = roots_legendre(points)
    return 0.5 * (x + 1.0), 0.5 * w


def order_statistic_mean(
    i: int, n: int, quality_dist: DistributionSpec, integration_points: int = 10_000
) -> float:
    """Numeric mean of the i-th order statistic via the beta transform.

    Substituting u = CDF(q) turns the integral into the inverse CDF weighted
    by a Beta(i, n+1-i) density, which is smooth even where the raw density
    blows up at a support endpoint.
    """
    if not 1 <= i <= n:
        raise ConfigurationError(f"rank index must satisfy 1 <= i <= n, got {i}")
    u, w = _unit_gauss_legendre(integration_points)
    q = ppf(quality_dist, u)
    return float(np.sum(w * q * stats.beta.pdf(u, i, n + 1 - i)))


def max_performance_general(
    m: int,
    n: int,
    quality_dist: DistributionSpec,
    integration_points: int = 10_000,
) -> PerformanceBound:
    """Quadrature evaluation of the top-m order-statistic total."""
    _check_m_n(m, n)
    if integration_points < n:
        raise ConfigurationError(
            f"integration_points={integration_points} too few for n={n}"
        )
    u, w = _unit_gauss_legendre(integration_points)
    q = ppf(quality_dist, u)
    ranks = np.arange(n + 1 - m, n + 1)
    weights = stats.beta.pdf(u[None, :], ranks[:, None], (n + 1 - ranks)[:, None])
    means = weights @ (w * q)
    # each order-statistic density must integrate to ~1 on these nodes
    mass = weights @ w
    if not np.allclose(mass, 1.0, atol=1e-8):
        raise NumericError(
            f"order-statistic quadrature not converged: worst mass error "
            f"{np.abs(mass - 1.0).max():.2e} at {integration_points} points"
        )
    total = float(means.sum())
    return PerformanceBound(total=total, per_project=total / m)


def optimal_delegation_expertise(
    N: int, t_low: float, t_high: float
) -> np.ndarray:
    """Expertise placement minimizing expected type mismatch for N experts.

    With project types uniform on (t_low, t_high), the optimal experts sit at
    the midpoints of N equal sub-intervals.
    """
    if N < 1:
        raise ConfigurationError(f"need N >= 1, got {N}")
    if not t_low < t_high:
        raise ConfigurationError(f"need t_low < t_high, got {t_low}, {t_high}")
    j = np.arange(1, N + 1)
    return t_low + (2 * j - 1) * (t_high - t_low) / (2 * N)


def optimal_budget(n: int, q_low: float, q_high: float) -> float:
    """Real-valued budget m* maximizing the top-m total for U(q_low, q_high)."""
    if not q_low < q_high:
        raise ConfigurationError(f"need q_low < q_high, got {q_low}, {q_high}")
    if q_high <= 0:
        raise DomainError(
            "the top-m total is maximized at m = 0 when the whole support is negative"
        )
    return (q_low + q_high + 2 * q_high * n) / (2 * (q_high - q_low))


def selectiveness_limit(q_low: float, q_high: float) -> float:
    """Large-n limit of the optimal selection fraction m*/n."""
    if not q_low < q_high:
        raise ConfigurationError(f"need q_low < q_high, got {q_low}, {q_high}")
    if q_low > 0 and q_high > 0:
        return 1.0
    if q_high <= 0:
        return 0.0
    return 1.0 / (1.0 - q_low / q_high)


def max_quality_single(n: int, q_low: float, q_high: float) -> float:
    """Expected maximum of n uniform draws (the m = 1 bound)."""
    if n < 1:
        raise ConfigurationError(f"need n >= 1, got {n}")
    if not q_low < q_high:
        raise ConfigurationError(f"need q_low < q_high, got {q_low}, {q_high}")
    return q_low + (q_high - q_low) * n / (n + 1)
