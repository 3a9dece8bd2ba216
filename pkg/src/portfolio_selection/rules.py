"""Aggregation rules mapping perceptions to a selected portfolio.

Each rule condenses agents' perceived qualities into one aggregate score
per project and keeps the m best.  Ties anywhere (preference orders or the
selection cut-off) are broken uniformly at random, matching the global tie
rule of the model.  Project indices are 0-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError
from .model import AgentPanel, PerceptionMatrix, ProjectSlate, noise_scales, perceive

INDIVIDUAL = "individual"
DELEGATION = "delegation"
VOTING = "voting"
AVERAGING = "averaging"
RANKING = "ranking"
PORTFOLIO_EXPERT = "portfolio-expert"

RULE_KINDS = (INDIVIDUAL, DELEGATION, VOTING, AVERAGING, RANKING, PORTFOLIO_EXPERT)


@dataclass(frozen=True)
class RuleSpec:
    """Which aggregation rule to run, plus rule-specific knobs."""

    kind: str
    delegation_error_r: float | None = None
    designated_agent: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in RULE_KINDS:
            raise ConfigurationError(f"unknown rule kind {self.kind!r}")
        if self.delegation_error_r is not None:
            if self.kind != DELEGATION:
                raise ConfigurationError("delegation_error_r only applies to delegation")
            if not 0.0 <= self.delegation_error_r <= 1.0:
                raise ConfigurationError(
                    f"delegation error must lie in [0, 1], got {self.delegation_error_r}"
                )
        if self.designated_agent is not None and self.kind != PORTFOLIO_EXPERT:
            raise ConfigurationError("designated_agent only applies to portfolio-expert")

    @property
    def r(self) -> float:
        return 0.0 if self.delegation_error_r is None else self.delegation_error_r


@dataclass(frozen=True)
class Portfolio:
    """The m selected project indices and the rule's per-project scores."""

    selected: np.ndarray
    aggregate_scores: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "selected", np.asarray(self.selected, dtype=int))
        object.__setattr__(
            self, "aggregate_scores", np.asarray(self.aggregate_scores, dtype=float)
        )

    @property
    def m(self) -> int:
        return self.selected.size


def positions(
    perceptions_row: np.ndarray, rng: np.random.Generator
) -> np.ndarray:
    """Rank projects by one agent's perceived quality; rank 1 is best.

    Equal perceptions are ordered uniformly at random.  Returns a bijection
    onto {1, ..., n}.
    """
    row = np.asarray(perceptions_row, dtype=float)
    n = row.size
    tiebreak = rng.permutation(n)
    order = np.lexsort((tiebreak, -row))
    pos = np.empty(n, dtype=int)
    pos[order] = np.arange(1, n + 1)
    return pos


def positions_matrix(values: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Row-wise `positions` over an (N, n) perception array."""
    values = np.asarray(values, dtype=float)
    tiebreak = rng.random(values.shape)
    order = np.lexsort((tiebreak, -values), axis=-1)
    pos = np.empty_like(order)
    np.put_along_axis(pos, order, np.arange(1, values.shape[1] + 1)[None, :], axis=-1)
    return pos


def select_top_m(
    aggregate_scores: np.ndarray, m: int, rng: np.random.Generator
) -> Portfolio:
    """Keep the m highest scores, filling cut-off ties uniformly at random."""
    scores = np.asarray(aggregate_scores, dtype=float)
    n = scores.size
    if not 1 <= m <= n:
        raise ConfigurationError(f"need 1 <= m <= n, got m={m}, n={n}")
    tiebreak = rng.permutation(n)
    order = np.lexsort((tiebreak, -scores))
    return Portfolio(selected=np.sort(order[:m]), aggregate_scores=scores)


# --- aggregate-score computations (one per rule) -------------------------


def votes_from_perceptions(values: np.ndarray) -> np.ndarray:
    """Approval counts: one vote per agent with a positive perception."""
    return (np.asarray(values) > 0).sum(axis=0).astype(float)


def means_from_perceptions(values: np.ndarray) -> np.ndarray:
    return np.asarray(values, dtype=float).mean(axis=0)


def borda_from_perceptions(values: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Sum of reversed positions, n - pos_j(i), over all agents."""
    values = np.asarray(values, dtype=float)
    n = values.shape[1]
    pos = positions_matrix(values, rng)
    return (n - pos).sum(axis=0).astype(float)


def individual_scores(
    slate: ProjectSlate, e_M: float, rng: np.random.Generator
) -> np.ndarray:
    agent = AgentPanel(np.array([float(e_M)]))
    return perceive(slate, agent, rng).values[0]


def _best_matched_agents(
    scales: np.ndarray, rng: np.random.Generator
) -> np.ndarray:
    """Per project, the agent minimizing |t - e|; equidistant ties uniform."""
    jitter = rng.random(scales.shape)
    is_min = scales == scales.min(axis=0, keepdims=True)
    return np.argmax(np.where(is_min, jitter, -1.0), axis=0)


def delegation_scores(
    slate: ProjectSlate, panel: AgentPanel, r: float, rng: np.random.Generator
) -> np.ndarray:
    """Assigned-expert perceptions under delegation error r.

    Each project goes to its best-matched agent with probability
    1 - r (N-1)/N and to each other agent with probability r/N (the N=3
    scheme of r/3 vs 1 - 2r/3, generalized).
    """
    if not 0.0 <= r <= 1.0:
        raise ConfigurationError(f"delegation error must lie in [0, 1], got {r}")
    n, N = slate.n, panel.size
    scales = noise_scales(slate, panel)
    assigned = _best_matched_agents(scales, rng)
    if N > 1:
        misassign = rng.random(n) < r * (N - 1) / N
        other = rng.integers(0, N - 1, size=n)
        other = other + (other >= assigned)
        assigned = np.where(misassign, other, assigned)
    sd = scales[assigned, np.arange(n)]
    return slate.qualities + rng.standard_normal(n) * sd


def voting_scores(
    slate: ProjectSlate, panel: AgentPanel, rng: np.random.Generator
) -> np.ndarray:
    return votes_from_perceptions(perceive(slate, panel, rng).values)


def averaging_scores(
    slate: ProjectSlate, panel: AgentPanel, rng: np.random.Generator
) -> np.ndarray:
    return means_from_perceptions(perceive(slate, panel, rng).values)


def ranking_scores(
    slate: ProjectSlate, panel: AgentPanel, rng: np.random.Generator
) -> np.ndarray:
    return borda_from_perceptions(perceive(slate, panel, rng).values, rng)


def portfolio_expert_scores(
    slate: ProjectSlate,
    panel: AgentPanel,
    designated_agent: int | None,
    rng: np.random.Generator,
) -> np.ndarray:
    """One agent evaluates everything: the designated one, or the agent
    minimizing the total mismatch sum_i |t_i - e_j|."""
    scales = noise_scales(slate, panel)
    if designated_agent is None:
        totals = scales.sum(axis=1)
        jitter = rng.random(panel.size)
        is_min = totals == totals.min()
        chosen = int(np.argmax(np.where(is_min, jitter, -1.0)))
    else:
        if not 0 <= designated_agent < panel.size:
            raise ConfigurationError(
                f"designated agent {designated_agent} out of range for N={panel.size}"
            )
        chosen = designated_agent
    sd = scales[chosen]
    return slate.qualities + rng.standard_normal(slate.n) * sd


# --- full rules (perceive + aggregate + select) ---------------------------


def rule_individual(
    slate: ProjectSlate, panel_mean_expertise: float, m: int, rng: np.random.Generator
) -> Portfolio:
    return select_top_m(individual_scores(slate, panel_mean_expertise, rng), m, rng)


def rule_delegation(
    slate: ProjectSlate, panel: AgentPanel, m: int, r: float, rng: np.random.Generator
) -> Portfolio:
    return select_top_m(delegation_scores(slate, panel, r, rng), m, rng)


def rule_voting(
    slate: ProjectSlate, panel: AgentPanel, m: int, rng: np.random.Generator
) -> Portfolio:
    return select_top_m(voting_scores(slate, panel, rng), m, rng)


def rule_averaging(
    slate: ProjectSlate, panel: AgentPanel, m: int, rng: np.random.Generator
) -> Portfolio:
    return select_top_m(averaging_scores(slate, panel, rng), m, rng)


def rule_ranking(
    slate: ProjectSlate, panel: AgentPanel, m: int, rng: np.random.Generator
) -> Portfolio:
    return select_top_m(ranking_scores(slate, panel, rng), m, rng)


def rule_portfolio_expert(
    slate: ProjectSlate,
    panel: AgentPanel,
    m: int,
    designated_agent: int | None,
    rng: np.random.Generator,
) -> Portfolio:
    return select_top_m(
        portfolio_expert_scores(slate, panel, designated_agent, rng), m, rng
    )


def rule_scores(
    rule: RuleSpec,
    slate: ProjectSlate,
    panel: AgentPanel,
    e_M: float,
    rng: np.random.Generator,
) -> np.ndarray:
    """Aggregate scores for any rule; the shared dispatch for selection."""
    if rule.kind == INDIVIDUAL:
        return individual_scores(slate, e_M, rng)
    if rule.kind == DELEGATION:
        return delegation_scores(slate, panel, rule.r, rng)
    if rule.kind == VOTING:
        return voting_scores(slate, panel, rng)
    if rule.kind == AVERAGING:
        return averaging_scores(slate, panel, rng)
    if rule.kind == RANKING:
        return ranking_scores(slate, panel, rng)
    return portfolio_expert_scores(slate, panel, rule.designated_agent, rng)


def apply_rule(
    rule: RuleSpec,
    slate: ProjectSlate,
    panel: AgentPanel,
    e_M: float,
    m: int,
    rng: np.random.Generator,
) -> Portfolio:
    return select_top_m(rule_scores(rule, slate, panel, e_M, rng), m, rng)
