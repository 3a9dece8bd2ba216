"""Generative model: project slates, agent panels, and noisy perceptions.

Project i has a type t_i and a true quality q_i.  Agent j has an expertise
value e_j and perceives quality q'_ij = q_i + eta_ij with
eta_ij ~ Normal(0, |t_i - e_j|).  A perfect type/expertise match therefore
yields an exact perception.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .distributions import DistributionSpec, sample
from .errors import ConfigurationError


@dataclass(frozen=True)
class ProjectSlate:
    """The n candidate projects: true qualities and types."""

    qualities: np.ndarray
    types: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "qualities", np.asarray(self.qualities, dtype=float))
        object.__setattr__(self, "types", np.asarray(self.types, dtype=float))
        if self.qualities.shape != self.types.shape or self.qualities.ndim != 1:
            raise ConfigurationError("qualities and types must be 1-d and equal length")
        if self.n < 1:
            raise ConfigurationError("a slate needs at least one project")

    @property
    def n(self) -> int:
        return self.qualities.size


@dataclass(frozen=True)
class AgentPanel:
    """The N evaluators, identified by their expertise values."""

    expertise: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "expertise", np.asarray(self.expertise, dtype=float))
        if self.expertise.ndim != 1 or self.size < 1:
            raise ConfigurationError("a panel needs at least one agent")

    @property
    def size(self) -> int:
        return self.expertise.size


@dataclass(frozen=True)
class PerceptionMatrix:
    """N x n array of perceived qualities, entry (j, i) = q'_ij."""

    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float))
        if self.values.ndim != 2:
            raise ConfigurationError("perceptions must form an N x n matrix")


def sample_slate(
    n: int,
    type_dist: DistributionSpec,
    quality_dist: DistributionSpec,
    rng: np.random.Generator,
) -> ProjectSlate:
    """Draw n i.i.d. (type, quality) pairs; types and qualities independent."""
    if n < 1:
        raise ConfigurationError(f"slate size must be positive, got {n}")
    types = sample(type_dist, rng, n)
    qualities = sample(quality_dist, rng, n)
    return ProjectSlate(qualities=qualities, types=types)


def build_panel(N: int, e_M: float, beta: float) -> AgentPanel:
    """Evenly spaced expertise on [e_M - beta, e_M + beta].

    A single agent sits at e_M; for N > 1 agent j gets
    e_j = e_M - beta + 2 beta (j - 1) / (N - 1), ascending.
    """
    if N < 1:
        raise ConfigurationError(f"panel size must be positive, got {N}")
    if beta < 0:
        raise ConfigurationError(f"knowledge breadth must be non-negative, got {beta}")
    if N == 1:
        return AgentPanel(np.array([float(e_M)]))
    j = np.arange(N, dtype=float)
    return AgentPanel(e_M - beta + 2.0 * beta * j / (N - 1))


def noise_scales(slate: ProjectSlate, panel: AgentPanel) -> np.ndarray:
    """Per-pair noise standard deviations |t_i - e_j|, shape (N, n)."""
    return np.abs(slate.types[None, :] - panel.expertise[:, None])


def perceive(
    slate: ProjectSlate, panel: AgentPanel, rng: np.random.Generator
) -> PerceptionMatrix:
    """Perceived qualities q'_ij = q_i + Normal(0, |t_i - e_j|), independent."""
    scales = noise_scales(slate, panel)
    noise = rng.standard_normal(scales.shape) * scales
    return PerceptionMatrix(values=slate.qualities[None, :] + noise)
