import numpy as np
import pytest

from portfolio_selection.distributions import uniform
from portfolio_selection.errors import ConfigurationError
from portfolio_selection.model import (
    AgentPanel,
    ProjectSlate,
    build_panel,
    noise_scales,
    perceive,
    sample_slate,
)


def test_panel_is_evenly_spaced_around_mean():
    panel = build_panel(3, 5.0, 2.0)
    assert panel.expertise == pytest.approx([3.0, 5.0, 7.0])
    panel = build_panel(5, 5.0, 5.0)
    assert panel.expertise == pytest.approx([0.0, 2.5, 5.0, 7.5, 10.0])


def test_single_agent_sits_at_mean_expertise():
    panel = build_panel(1, 4.2, 3.0)
    assert panel.expertise == pytest.approx([4.2])


def test_panel_validation():
    with pytest.raises(ConfigurationError):
        build_panel(0, 5.0, 1.0)
    with pytest.raises(ConfigurationError):
        build_panel(3, 5.0, -0.1)


def test_noise_scales_are_type_expertise_distances():
    slate = ProjectSlate(qualities=[1.0, 2.0], types=[0.0, 10.0])
    panel = AgentPanel([3.0, 7.0])
    scales = noise_scales(slate, panel)
    assert np.allclose(scales, [[3.0, 7.0], [7.0, 3.0]])


def test_perfect_match_perceives_exactly():
    slate = ProjectSlate(qualities=[-1.5, 0.25, 4.0], types=[5.0, 5.0, 5.0])
    panel = AgentPanel([5.0])
    rng = np.random.default_rng(3)
    perceived = perceive(slate, panel, rng)
    assert perceived.values[0] == pytest.approx([-1.5, 0.25, 4.0])


def test_perception_noise_scales_with_mismatch():
    slate = ProjectSlate(qualities=np.zeros(50_000), types=np.full(50_000, 8.0))
    panel = AgentPanel([5.0])
    rng = np.random.default_rng(9)
    perceived = perceive(slate, panel, rng).values[0]
    assert perceived.std() == pytest.approx(3.0, rel=0.02)
    assert perceived.mean() == pytest.approx(0.0, abs=0.05)


def test_sample_slate_shapes_and_support():
    rng = np.random.default_rng(5)
    slate = sample_slate(40, uniform(0, 10), uniform(-5, 5), rng)
    assert slate.n == 40
    assert slate.types.min() >= 0 and slate.types.max() <= 10
    assert slate.qualities.min() >= -5 and slate.qualities.max() <= 5


def test_slate_validation():
    with pytest.raises(ConfigurationError):
        ProjectSlate(qualities=[1.0], types=[1.0, 2.0])
    with pytest.raises(ConfigurationError):
        sample_slate(0, uniform(0, 10), uniform(-5, 5), np.random.default_rng(0))
