"""Simulation laboratory for budget-constrained project portfolio selection.

An organization must pick m of n candidate projects.  Agents perceive each
project's quality with noise growing in the distance between the project's
type and their own expertise; a decision rule (individual choice,
delegation, voting, averaging, rank aggregation, or a portfolio expert)
condenses those perceptions into the selected portfolio.  The package
simulates ensembles of such decisions, compares them against closed-form
order-statistic benchmarks, and regenerates the datasets behind the study's
figures.
"""

from .analytics import (
    PerformanceBound,
    max_performance_general,
    max_performance_uniform,
    max_quality_single,
    optimal_budget,
    optimal_delegation_expertise,
    order_statistic_mean,
    order_statistic_pdf,
    selectiveness_limit,
)
from .batching import BatchingSpec, batched_select, num_groups, scale_panel
from .distributions import (
    DistributionSpec,
    cdf,
    pdf,
    power_law,
    ppf,
    sample,
    truncated_normal,
    uniform,
)
from .engine import EnsembleStats, ScenarioConfig, derive_stream, run_ensemble
from .errors import ConfigurationError, DomainError, NumericError
from .experiments import (
    BUILTINS,
    ExperimentSpec,
    RuleSeries,
    list_experiments,
    load_experiment_file,
    run_experiment,
)
from .model import (
    AgentPanel,
    PerceptionMatrix,
    ProjectSlate,
    build_panel,
    noise_scales,
    perceive,
    sample_slate,
)
from .rules import Portfolio, RuleSpec, apply_rule, positions, select_top_m

__all__ = [
    "AgentPanel",
    "BatchingSpec",
    "BUILTINS",
    "ConfigurationError",
    "DistributionSpec",
    "DomainError",
    "EnsembleStats",
    "ExperimentSpec",
    "NumericError",
    "PerceptionMatrix",
    "PerformanceBound",
    "Portfolio",
    "ProjectSlate",
    "RuleSeries",
    "RuleSpec",
    "ScenarioConfig",
    "apply_rule",
    "batched_select",
    "build_panel",
    "cdf",
    "derive_stream",
    "list_experiments",
    "load_experiment_file",
    "max_performance_general",
    "max_performance_uniform",
    "max_quality_single",
    "noise_scales",
    "num_groups",
    "optimal_budget",
    "optimal_delegation_expertise",
    "order_statistic_mean",
    "order_statistic_pdf",
    "pdf",
    "perceive",
    "positions",
    "power_law",
    "ppf",
    "run_ensemble",
    "run_experiment",
    "sample",
    "sample_slate",
    "scale_panel",
    "select_top_m",
    "selectiveness_limit",
    "truncated_normal",
    "uniform",
]
