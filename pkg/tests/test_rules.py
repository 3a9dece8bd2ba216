import numpy as np
import pytest

from portfolio_selection.errors import ConfigurationError
from portfolio_selection.model import AgentPanel, ProjectSlate
from portfolio_selection.rules import (
    RuleSpec,
    apply_rule,
    borda_from_perceptions,
    delegation_scores,
    means_from_perceptions,
    portfolio_expert_scores,
    positions,
    positions_matrix,
    select_top_m,
    votes_from_perceptions,
)

# worked example: three agents' perceptions of three projects (rows = agents)
EXAMPLE = np.array(
    [
        [7.1, 2.0, 5.5],
        [-11.7, 2.0, -4.1],
        [4.4, 2.0, -1.8],
    ]
)


def test_positions_of_worked_example_agents():
    rng = np.random.default_rng(0)
    assert positions(EXAMPLE[0], rng).tolist() == [1, 3, 2]
    assert positions(EXAMPLE[1], rng).tolist() == [3, 1, 2]
    assert positions(EXAMPLE[2], rng).tolist() == [1, 2, 3]


def test_positions_ties_give_a_random_permutation():
    rng = np.random.default_rng(1)
    seen = set()
    for _ in range(200):
        pos = positions(np.zeros(3), rng)
        assert sorted(pos.tolist()) == [1, 2, 3]
        seen.add(tuple(pos.tolist()))
    assert len(seen) == 6


def test_positions_matrix_matches_rowwise_positions():
    rng = np.random.default_rng(2)
    pos = positions_matrix(EXAMPLE, rng)
    assert pos.tolist() == [[1, 3, 2], [3, 1, 2], [1, 2, 3]]


def test_worked_example_vote_counts():
    assert votes_from_perceptions(EXAMPLE).tolist() == [2.0, 3.0, 1.0]


def test_worked_example_means():
    means = means_from_perceptions(EXAMPLE)
    assert means == pytest.approx([-0.2 / 3, 2.0, -0.4 / 3])


def test_worked_example_borda_sums():
    rng = np.random.default_rng(3)
    borda = borda_from_perceptions(EXAMPLE, rng)
    assert borda.tolist() == [4.0, 3.0, 2.0]


def test_select_top_m_keeps_the_best_scores():
    rng = np.random.default_rng(4)
    portfolio = select_top_m(np.array([0.1, 9.0, -3.0, 5.0, 2.0]), 2, rng)
    assert portfolio.selected.tolist() == [1, 3]
    assert portfolio.m == 2


def test_select_top_m_breaks_cutoff_ties_uniformly():
    rng = np.random.default_rng(5)
    counts = np.zeros(4)
    for _ in range(4000):
        portfolio = select_top_m(np.array([1.0, 0.0, 0.0, 0.0]), 2, rng)
        assert portfolio.selected[0] == 0
        counts[portfolio.selected[1]] += 1
    # each tied project should fill the last slot about 1/3 of the time
    assert counts[1:] / 4000 == pytest.approx([1 / 3] * 3, abs=0.03)


def test_select_top_m_bounds():
    rng = np.random.default_rng(6)
    with pytest.raises(ConfigurationError):
        select_top_m(np.arange(3.0), 0, rng)
    with pytest.raises(ConfigurationError):
        select_top_m(np.arange(3.0), 4, rng)


def test_delegation_zero_error_uses_best_matched_agent():
    slate = ProjectSlate(qualities=[1.0, -2.0], types=[3.0, 7.0])
    panel = AgentPanel([3.0, 7.0])
    rng = np.random.default_rng(7)
    # each project's best match is a perfect match, so perception is exact
    scores = delegation_scores(slate, panel, 0.0, rng)
    assert scores == pytest.approx([1.0, -2.0])


def test_delegation_full_error_reassigns_projects():
    slate = ProjectSlate(qualities=np.zeros(20_000), types=np.full(20_000, 3.0))
    panel = AgentPanel([3.0, 7.0])
    rng = np.random.default_rng(8)
    scores = delegation_scores(slate, panel, 1.0, rng)
    # with r = 1 each project stays with its expert w.p. 1/2, else moves to
    # the mismatched agent (noise sd 4), so about half the scores are noisy
    noisy = np.mean(scores != 0.0)
    assert noisy == pytest.approx(0.5, abs=0.02)


def test_delegation_error_validation():
    slate = ProjectSlate(qualities=[0.0], types=[0.0])
    panel = AgentPanel([0.0])
    with pytest.raises(ConfigurationError):
        delegation_scores(slate, panel, 1.5, np.random.default_rng(0))
    with pytest.raises(ConfigurationError):
        RuleSpec("delegation", delegation_error_r=-0.1)
    with pytest.raises(ConfigurationError):
        RuleSpec("voting", delegation_error_r=0.5)


def test_portfolio_expert_picks_least_mismatched_agent():
    slate = ProjectSlate(qualities=[1.0, 2.0, 3.0], types=[5.0, 5.0, 5.0])
    panel = AgentPanel([0.0, 5.0, 10.0])
    rng = np.random.default_rng(9)
    scores = portfolio_expert_scores(slate, panel, None, rng)
    assert scores == pytest.approx([1.0, 2.0, 3.0])


def test_portfolio_expert_designated_agent_bounds():
    slate = ProjectSlate(qualities=[1.0], types=[5.0])
    panel = AgentPanel([5.0])
    with pytest.raises(ConfigurationError):
        portfolio_expert_scores(slate, panel, 3, np.random.default_rng(0))
    with pytest.raises(ConfigurationError):
        RuleSpec("averaging", designated_agent=0)


def test_unknown_rule_kind_rejected():
    with pytest.raises(ConfigurationError):
        RuleSpec("plurality")


@pytest.mark.parametrize(
    "rule",
    [
        RuleSpec("individual"),
        RuleSpec("delegation", delegation_error_r=0.3),
        RuleSpec("voting"),
        RuleSpec("averaging"),
        RuleSpec("ranking"),
        RuleSpec("portfolio-expert"),
    ],
    ids=lambda r: r.kind,
)
def test_apply_rule_returns_sorted_distinct_selection(rule):
    rng = np.random.default_rng(10)
    slate = ProjectSlate(qualities=rng.uniform(-5, 5, 20), types=rng.uniform(0, 10, 20))
    panel = AgentPanel([3.0, 5.0, 7.0])
    portfolio = apply_rule(rule, slate, panel, 5.0, 6, rng)
    selected = portfolio.selected
    assert selected.size == 6
    assert np.all(np.diff(selected) > 0)
    assert selected.min() >= 0 and selected.max() < 20
