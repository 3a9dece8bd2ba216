"""Batched evaluation: splitting the slate into cognitive-limit groups.

With a cognitive limit of c projects per evaluation task, the slate is
partitioned into round(n / c) batches and the agent pool is scaled by the
same factor, so every project still receives its usual number of looks.
Batches are composed either uniformly at random or by ordinal matching of
project types to agent expertise.  The final selection is either
centralized (scores compared across all batches) or decentralized (each
batch group picks its own quota).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError
from .model import AgentPanel, ProjectSlate, build_panel
from .rules import (
    DELEGATION,
    INDIVIDUAL,
    PORTFOLIO_EXPERT,
    Portfolio,
    RuleSpec,
    delegation_scores,
    individual_scores,
    portfolio_expert_scores,
    rule_scores,
    select_top_m,
)

RANDOM = "random"
EXPERTISE_MATCHED = "expertise-matched"
CENTRALIZED = "centralized"
DECENTRALIZED = "decentralized"


def round_half_up(x: float) -> int:
    """Nearest integer, halves away from zero (plain .5-rounds-up for x > 0)."""
    return int(np.floor(x + 0.5))


@dataclass(frozen=True)
class BatchingSpec:
    batch_size_c: int
    assignment: str = RANDOM
    decision: str = CENTRALIZED

    def __post_init__(self) -> None:
        if self.batch_size_c < 1:
            raise ConfigurationError(f"batch size must be positive, got {self.batch_size_c}")
        if self.assignment not in (RANDOM, EXPERTISE_MATCHED):
            raise ConfigurationError(f"unknown assignment {self.assignment!r}")
        if self.decision not in (CENTRALIZED, DECENTRALIZED):
            raise ConfigurationError(f"unknown decision mode {self.decision!r}")


def num_groups(n: int, c: int) -> int:
    if not 1 <= c <= n:
        raise ConfigurationError(f"need 1 <= c <= n, got c={c}, n={n}")
    return max(1, round_half_up(n / c))


def scale_panel(base_N: int, n: int, c: int, e_M: float, beta: float) -> AgentPanel:
    """Panel grown by the number of batches so coverage per project is kept."""
    return build_panel(base_N * num_groups(n, c), e_M, beta)


def _group_sizes(n: int, groups: int) -> np.ndarray:
    sizes = np.full(groups, n // groups)
    sizes[: n % groups] += 1
    return sizes


def assign_random(
    n: int, c: int, groups: int, rng: np.random.Generator
) -> np.ndarray:
    """Uniformly random partition of projects into the given batch groups.

    Returns an array mapping project index -> group index.
    """
    sizes = _group_sizes(n, groups)
    if sizes.sum() != n:
        raise ConfigurationError("batch sizes do not cover the slate")
    assignment = np.empty(n, dtype=int)
    assignment[rng.permutation(n)] = np.repeat(np.arange(groups), sizes)
    return assignment


def assign_expertise_matched(
    slate: ProjectSlate, panel: AgentPanel, c: int, base_N: int
) -> tuple[np.ndarray, list[np.ndarray]]:
    """Ordinal matching: batches in ascending type order meet agent blocks in
    ascending expertise order.

    Returns (project -> group array, list of agent-index blocks per group).
    """
    groups = num_groups(slate.n, c)
    if panel.size != base_N * groups:
        raise ConfigurationError(
            f"panel of {panel.size} agents does not split into "
            f"{groups} groups of {base_N}"
        )
    sizes = _group_sizes(slate.n, groups)
    type_order = np.argsort(slate.types, kind="stable")
    assignment = np.empty(slate.n, dtype=int)
    assignment[type_order] = np.repeat(np.arange(groups), sizes)
    expertise_order = np.argsort(panel.expertise, kind="stable")
    agent_groups = [
        expertise_order[k * base_N : (k + 1) * base_N] for k in range(groups)
    ]
    return assignment, agent_groups


def _group_rule_scores(
    rule: RuleSpec,
    sub_slate: ProjectSlate,
    group_panel: AgentPanel,
    rng: np.random.Generator,
) -> np.ndarray:
    """Within-batch aggregate scores; ranking uses batch-local positions."""
    if rule.kind == INDIVIDUAL:
        # a batched Individual group is its single evaluator
        return individual_scores(sub_slate, float(group_panel.expertise[0]), rng)
    if rule.kind == DELEGATION:
        return delegation_scores(sub_slate, group_panel, rule.r, rng)
    if rule.kind == PORTFOLIO_EXPERT:
        return portfolio_expert_scores(sub_slate, group_panel, None, rng)
    return rule_scores(rule, sub_slate, group_panel, 0.0, rng)


def batched_select(
    slate: ProjectSlate,
    panel: AgentPanel,
    batching: BatchingSpec,
    rule: RuleSpec,
    m: int,
    rng: np.random.Generator,
    base_N: int,
) -> Portfolio:
    """Run ``rule`` batch-by-batch and combine per the decision mode.

    Centralized: within-batch scores are compared globally and the top m
    win.  Decentralized: each group contributes its own top round(m / c)
    projects, so the realized portfolio size is groups * round(m / c).
    """
    n = slate.n
    c = batching.batch_size_c
    groups = num_groups(n, c)
    if panel.size != base_N * groups:
        raise ConfigurationError(
            f"panel of {panel.size} agents does not split into "
            f"{groups} groups of {base_N}"
        )
    if batching.assignment == RANDOM:
        assignment = assign_random(n, c, groups, rng)
        expertise_order = np.argsort(panel.expertise, kind="stable")
        agent_groups = [
            expertise_order[k * base_N : (k + 1) * base_N] for k in range(groups)
        ]
    else:
        assignment, agent_groups = assign_expertise_matched(slate, panel, c, base_N)

    scores = np.empty(n, dtype=float)
    member_lists = []
    for k in range(groups):
        members = np.flatnonzero(assignment == k)
        member_lists.append(members)
        sub_slate = ProjectSlate(
            qualities=slate.qualities[members], types=slate.types[members]
        )
        group_panel = AgentPanel(panel.expertise[agent_groups[k]])
        scores[members] = _group_rule_scores(rule, sub_slate, group_panel, rng)

    if batching.decision == CENTRALIZED:
        return select_top_m(scores, m, rng)

    quota = round_half_up(m / c)
    if quota < 1:
        raise ConfigurationError(
            f"decentralized quota round(m/c) = round({m}/{c}) is zero"
        )
    picks = []
    for members in member_lists:
        if quota > members.size:
            raise ConfigurationError(
                f"decentralized quota {quota} exceeds batch size {members.size}"
            )
        local = select_top_m(scores[members], quota, rng)
        picks.append(members[local.selected])
    return Portfolio(selected=np.sort(np.concatenate(picks)), aggregate_scores=scores)
