import numpy as np
import pytest

from portfolio_selection.batching import (
    BatchingSpec,
    assign_expertise_matched,
    assign_random,
    batched_select,
    num_groups,
    round_half_up,
    scale_panel,
)
from portfolio_selection.errors import ConfigurationError
from portfolio_selection.model import AgentPanel, ProjectSlate, build_panel
from portfolio_selection.rules import RuleSpec


def test_round_half_up():
    assert round_half_up(2.5) == 3
    assert round_half_up(2.4) == 2
    assert round_half_up(0.5) == 1


def test_num_groups():
    assert num_groups(100, 10) == 10
    assert num_groups(25, 10) == 3
    assert num_groups(14, 10) == 1
    with pytest.raises(ConfigurationError):
        num_groups(5, 10)


def test_scale_panel_grows_with_groups():
    panel = scale_panel(3, 100, 10, 5.0, 5.0)
    assert panel.size == 30
    assert panel.expertise.min() == pytest.approx(0.0)
    assert panel.expertise.max() == pytest.approx(10.0)


def test_random_assignment_partitions_evenly():
    rng = np.random.default_rng(0)
    assignment = assign_random(25, 10, 3, rng)
    counts = np.bincount(assignment, minlength=3)
    assert sorted(counts.tolist()) == [8, 8, 9]


def test_expertise_matched_assignment_is_ordinal():
    rng = np.random.default_rng(1)
    slate = ProjectSlate(qualities=np.zeros(20), types=rng.uniform(0, 10, 20))
    panel = build_panel(4, 5.0, 5.0)
    assignment, agent_groups = assign_expertise_matched(slate, panel, 10, 2)
    # the low-type batch must meet the low-expertise agent block
    low_batch = slate.types[assignment == 0]
    high_batch = slate.types[assignment == 1]
    assert low_batch.max() <= high_batch.min()
    assert panel.expertise[agent_groups[0]].max() <= panel.expertise[
        agent_groups[1]
    ].min()


def test_batching_spec_validation():
    with pytest.raises(ConfigurationError):
        BatchingSpec(0)
    with pytest.raises(ConfigurationError):
        BatchingSpec(10, assignment="sorted")
    with pytest.raises(ConfigurationError):
        BatchingSpec(10, decision="federated")


@pytest.mark.parametrize("decision", ["centralized", "decentralized"])
@pytest.mark.parametrize("assignment", ["random", "expertise-matched"])
def test_batched_select_portfolio_size(assignment, decision):
    rng = np.random.default_rng(2)
    slate = ProjectSlate(
        qualities=rng.uniform(-5, 5, 100), types=rng.uniform(0, 10, 100)
    )
    panel = scale_panel(3, 100, 10, 5.0, 2.0)
    spec = BatchingSpec(10, assignment, decision)
    portfolio = batched_select(
        slate, panel, spec, RuleSpec("averaging"), 10, rng, base_N=3
    )
    # 10 groups: centralized keeps the global top 10, decentralized one each
    assert portfolio.m == 10
    assert np.unique(portfolio.selected).size == 10


def test_decentralized_quota_errors():
    rng = np.random.default_rng(3)
    slate = ProjectSlate(
        qualities=rng.uniform(-5, 5, 100), types=rng.uniform(0, 10, 100)
    )
    panel = scale_panel(3, 100, 10, 5.0, 0.0)
    spec = BatchingSpec(10, "random", "decentralized")
    with pytest.raises(ConfigurationError):
        batched_select(slate, panel, spec, RuleSpec("averaging"), 4, rng, base_N=3)


def test_panel_size_mismatch_rejected():
    rng = np.random.default_rng(4)
    slate = ProjectSlate(
        qualities=rng.uniform(-5, 5, 100), types=rng.uniform(0, 10, 100)
    )
    panel = build_panel(3, 5.0, 0.0)
    spec = BatchingSpec(10, "random", "centralized")
    with pytest.raises(ConfigurationError):
        batched_select(slate, panel, spec, RuleSpec("averaging"), 10, rng, base_N=3)


def test_zero_noise_centralized_batching_recovers_top_m():
    rng = np.random.default_rng(5)
    qualities = rng.uniform(-5, 5, 100)
    slate = ProjectSlate(qualities=qualities, types=np.full(100, 5.0))
    panel = scale_panel(3, 100, 10, 5.0, 0.0)
    spec = BatchingSpec(10, "random", "centralized")
    portfolio = batched_select(
        slate, panel, spec, RuleSpec("averaging"), 10, rng, base_N=3
    )
    expected = np.sort(np.argsort(-qualities)[:10])
    assert portfolio.selected.tolist() == expected.tolist()
