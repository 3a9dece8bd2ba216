"""Named, config-driven experiments emitting deterministic CSV datasets.

Each builtin experiment regenerates the data behind one figure or table.
Experiments are plain data (an ExperimentSpec); a YAML file with the same
fields can override any builtin or define a new experiment, so no code
edits are needed to change a sweep.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np
import yaml

from . import analytics
from .batching import BatchingSpec
from .distributions import DistributionSpec, uniform, truncated_normal, power_law
from .engine import EnsembleStats, ScenarioConfig, run_ensemble
from .errors import ConfigurationError
from .model import AgentPanel, PerceptionMatrix, ProjectSlate
from .rules import (
    RuleSpec,
    borda_from_perceptions,
    means_from_perceptions,
    positions_matrix,
)

SWEEP_HEADER = [
    "experiment", "rule", "beta", "m", "n", "N", "r",
    "quality_dist", "type_dist", "replications", "seed",
    "mean_performance", "std_error",
]
RANKS_HEADER = ["experiment", "rule", "true_rank", "selection_probability"]
TRACE_HEADER = [
    "project", "true_quality", "project_type",
    "perceived_agent1", "perceived_agent2", "perceived_agent3",
    "position_agent1", "position_agent2", "position_agent3",
    "averaging_score", "ranking_score",
]

BASE_TYPE_DIST = uniform(0.0, 10.0)
BASE_QUALITY_DIST = uniform(-5.0, 5.0)

DEFAULT_REPLICATIONS = 20_000


@dataclass(frozen=True)
class RuleSeries:
    """One plotted series: a rule, optionally with its own panel size."""

    rule: RuleSpec
    N: int | None = None


@dataclass(frozen=True)
class ExperimentSpec:
    """A named sweep: fixed scenario fields plus axes of varying values."""

    name: str
    description: str
    kind: str = "sweep"  # sweep | analytic | trace
    n: int = 100
    m: int = 10
    N: int = 3
    e_M: float = 5.0
    type_dist: DistributionSpec = BASE_TYPE_DIST
    quality_dist: DistributionSpec = BASE_QUALITY_DIST
    series: tuple[RuleSeries, ...] = ()
    # ordered sweep axes; keys: beta, m, n, N, mn, quality_dist, type_dist
    sweep: tuple[tuple[str, tuple], ...] = ()
    batching: BatchingSpec | None = None
    emit_rank_table: bool = False


def _beta_grid(step: float = 0.25, top: float = 5.0) -> tuple[float, ...]:
    return tuple(round(step * k, 10) for k in range(int(round(top / step)) + 1))


def _five_rules(rs: tuple[float, ...] = (0.0,)) -> tuple[RuleSeries, ...]:
    delegations = tuple(
        RuleSeries(RuleSpec("delegation", delegation_error_r=r)) for r in rs
    )
    return (
        (RuleSeries(RuleSpec("individual")),)
        + delegations
        + (
            RuleSeries(RuleSpec("voting")),
            RuleSeries(RuleSpec("averaging")),
            RuleSeries(RuleSpec("ranking")),
        )
    )


def _mn_grid() -> tuple[tuple[int, int], ...]:
    pairs = []
    for n in (2, 3, 5, 8, 10, 20, 50, 100):
        for m in sorted({1, max(1, n // 10), n // 4, n // 2, 3 * n // 4, n}):
            if 1 <= m <= n:
                pairs.append((m, n))
    return tuple(pairs)


def _builtins() -> dict[str, ExperimentSpec]:
    specs = [
        ExperimentSpec(
            name="fig2a",
            description="Rule performance vs knowledge breadth, m=10 "
            "(delegation shaded by error r in {0, 0.5, 1})",
            series=_five_rules(rs=(0.0, 0.5, 1.0)),
            sweep=(("beta", _beta_grid()),),
        ),
        ExperimentSpec(
            name="fig2b",
            description="Rule performance vs knowledge breadth, m=30",
            m=30,
            series=_five_rules(rs=(0.0, 0.5, 1.0)),
            sweep=(("beta", _beta_grid()),),
        ),
        ExperimentSpec(
            name="fig3",
            description="Selection probability by true quality rank, "
            "Ranking vs Averaging at beta=0",
            series=(
                RuleSeries(RuleSpec("ranking")),
                RuleSeries(RuleSpec("averaging")),
            ),
            sweep=(("beta", (0.0,)),),
            emit_rank_table=True,
        ),
        ExperimentSpec(
            name="fig4a",
            description="Averaging vs Ranking over the (m, n) grid, beta=0",
            series=(
                RuleSeries(RuleSpec("averaging")),
                RuleSeries(RuleSpec("ranking")),
            ),
            sweep=(("beta", (0.0,)), ("mn", _mn_grid())),
        ),
        ExperimentSpec(
            name="fig4b",
            description="Averaging vs Ranking over the (m, n) grid, beta=5",
            series=(
                RuleSeries(RuleSpec("averaging")),
                RuleSeries(RuleSpec("ranking")),
            ),
            sweep=(("beta", (5.0,)), ("mn", _mn_grid())),
        ),
        ExperimentSpec(
            name="fig5a",
            description="Type shift: project types U(5,15), partial expertise overlap",
            type_dist=uniform(5.0, 15.0),
            series=_five_rules(),
            sweep=(("beta", _beta_grid(0.5)),),
        ),
        ExperimentSpec(
            name="fig5b",
            description="Type shift: project types U(15,25), no expertise overlap",
            type_dist=uniform(15.0, 25.0),
            series=_five_rules(),
            sweep=(("beta", _beta_grid(0.5)),),
        ),
        ExperimentSpec(
            name="fig6a",
            description="Crowd of N=15 vs error-free delegation to three experts",
            N=15,
            series=(
                RuleSeries(RuleSpec("voting")),
                RuleSeries(RuleSpec("averaging")),
                RuleSeries(RuleSpec("ranking")),
                RuleSeries(RuleSpec("delegation", delegation_error_r=0.0), N=3),
            ),
            sweep=(("beta", _beta_grid(0.5)),),
        ),
        ExperimentSpec(
            name="fig6b",
            description="Crowd of N=45 vs error-free delegation to three experts",
            N=45,
            series=(
                RuleSeries(RuleSpec("voting")),
                RuleSeries(RuleSpec("averaging")),
                RuleSeries(RuleSpec("ranking")),
                RuleSeries(RuleSpec("delegation", delegation_error_r=0.0), N=3),
            ),
            sweep=(("beta", _beta_grid(0.5)),),
        ),
        ExperimentSpec(
            name="fig10",
            description="Theoretical per-project maxima vs budget for several "
            "choice-set sizes (no simulation)",
            kind="analytic",
        ),
        ExperimentSpec(
            name="fig11",
            description="Budget and choice-set sensitivity of four rules at "
            "beta in {0, 5}",
            series=(
                RuleSeries(RuleSpec("individual")),
                RuleSeries(RuleSpec("delegation", delegation_error_r=0.0)),
                RuleSeries(RuleSpec("averaging")),
                RuleSeries(RuleSpec("ranking")),
            ),
            sweep=(("beta", (0.0, 5.0)), ("mn", _mn_grid())),
        ),
        ExperimentSpec(
            name="fig12",
            description="Very small budgets: m in {1, 3} from a preselected "
            "slate of 30",
            n=30,
            series=_five_rules(rs=(0.0, 0.5, 1.0)),
            sweep=(("m", (1, 3)), ("beta", _beta_grid(0.5))),
        ),
        ExperimentSpec(
            name="fig13",
            description="Alternative quality distributions (truncated normal "
            "and power law), m in {10, 30}",
            series=_five_rules(rs=(0.0, 0.5, 1.0)),
            sweep=(
                (
                    "quality_dist",
                    (
                        truncated_normal(0.0, 1.0, -5.0, 5.0),
                        power_law(-0.5, -5.0, 5.0),
                    ),
                ),
                ("m", (10, 30)),
                ("beta", _beta_grid(0.5)),
            ),
        ),
        ExperimentSpec(
            name="table2",
            description="Worked aggregation example: perceptions, positions, "
            "means, and Borda sums",
            kind="trace",
        ),
    ]
    for assignment in ("random", "expertise-matched"):
        for decision in ("centralized", "decentralized"):
            suffix = {"random": "r", "expertise-matched": "m"}[assignment]
            suffix += {"centralized": "c", "decentralized": "d"}[decision]
            specs.append(
                ExperimentSpec(
                    name=f"fig8{suffix}",
                    description=f"Batched selection (c=10), {assignment} "
                    f"assignment, {decision} decision",
                    series=(
                        RuleSeries(RuleSpec("individual"), N=1),
                        RuleSeries(RuleSpec("delegation", delegation_error_r=0.0)),
                        RuleSeries(RuleSpec("voting")),
                        RuleSeries(RuleSpec("averaging")),
                        RuleSeries(RuleSpec("ranking")),
                    ),
                    sweep=(("beta", _beta_grid(0.5)),),
                    batching=BatchingSpec(10, assignment, decision),
                )
            )
    return {s.name: s for s in sorted(specs, key=lambda s: s.name)}


BUILTINS = _builtins()


def list_experiments() -> list[tuple[str, str]]:
    """Names and one-line descriptions of all builtin experiments."""
    return [(name, spec.description) for name, spec in BUILTINS.items()]


# --- CSV helpers ----------------------------------------------------------


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    lines = [",".join(header)]
    lines += [",".join(_fmt(v) for v in row) for row in rows]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def _expand_points(spec: ExperimentSpec):
    """Cartesian product over the sweep axes, in declared (sweep-major) order."""
    if not spec.sweep:
        yield {}
        return
    keys = [k for k, _ in spec.sweep]
    for combo in itertools.product(*(vals for _, vals in spec.sweep)):
        point = dict(zip(keys, combo))
        if "mn" in point:
            point["m"], point["n"] = point.pop("mn")
        yield point


def scenario_for_point(
    spec: ExperimentSpec,
    series: RuleSeries,
    point: dict,
    seed: int,
    replications: int,
) -> ScenarioConfig:
    fields = {
        "n": spec.n,
        "m": spec.m,
        "N": series.N if series.N is not None else spec.N,
        "e_M": spec.e_M,
        "beta": 0.0,
        "type_dist": spec.type_dist,
        "quality_dist": spec.quality_dist,
    }
    for key, value in point.items():
        if key == "N" and series.N is not None:
            continue  # explicit per-series panel size wins over the sweep
        fields[key] = value
    return ScenarioConfig(
        rule=series.rule,
        batching=spec.batching,
        replications=replications,
        master_seed=seed,
        **fields,
    )


def _sweep_rows(spec, seed, replications, workers):
    rows = []
    rank_rows = []
    for point in _expand_points(spec):
        for series in spec.series:
            config = scenario_for_point(spec, series, point, seed, replications)
            stats = run_ensemble(config, workers=workers)
            rows.append(
                [
                    spec.name,
                    series.rule.kind,
                    config.beta,
                    config.m,
                    config.n,
                    config.N,
                    series.rule.delegation_error_r,
                    config.quality_dist.label(),
                    config.type_dist.label(),
                    replications,
                    seed,
                    stats.mean_total_performance,
                    stats.std_error,
                ]
            )
            if spec.emit_rank_table:
                freq = stats.rank_selection_frequency
                for rank in range(config.m):
                    rank_rows.append(
                        [spec.name, series.rule.kind, rank + 1, float(freq[rank])]
                    )
    return rows, rank_rows


def _analytic_rows(spec, seed):
    rows = []
    q = BASE_QUALITY_DIST
    for n in (20, 50, 100):
        for m in range(1, n + 1, max(1, n // 20)):
            bound = analytics.max_performance_uniform(m, n, q.lower, q.upper)
            rows.append(
                [
                    spec.name, f"theoretical-max(n={n})", 0.0, m, n, 0, None,
                    q.label(), BASE_TYPE_DIST.label(), 0, seed,
                    bound.per_project, 0.0,
                ]
            )
    return rows


# the worked example: three projects, three agents of equal expertise
TRACE_TYPES = (10.0, 5.0, 0.0)
TRACE_QUALITIES = (3.0, 2.0, 1.0)
TRACE_PERCEPTIONS = (
    (7.1, 2.0, 5.5),
    (-11.7, 2.0, -4.1),
    (4.4, 2.0, -1.8),
)


def _trace_rows(seed: int):
    values = np.array(TRACE_PERCEPTIONS)
    rng = np.random.default_rng(seed)
    pos = positions_matrix(values, rng)
    means = means_from_perceptions(values)
    borda = (values.shape[1] - pos).sum(axis=0)
    rows = []
    for i in range(3):
        rows.append(
            [
                i + 1, TRACE_QUALITIES[i], TRACE_TYPES[i],
                values[0, i], values[1, i], values[2, i],
                int(pos[0, i]), int(pos[1, i]), int(pos[2, i]),
                round(means[i], 10), int(borda[i]),
            ]
        )
    return rows


def run_experiment(
    spec: ExperimentSpec,
    seed: int = 0,
    replications: int = DEFAULT_REPLICATIONS,
    out_dir: str | Path = ".",
    workers: int = 1,
) -> list[Path]:
    """Run one experiment and write its CSV dataset(s); returns the paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    main_path = out_dir / f"{spec.name}.csv"
    written = [main_path]
    if spec.kind == "trace":
        _write_csv(main_path, TRACE_HEADER, _trace_rows(seed))
        return written
    if spec.kind == "analytic":
        _write_csv(main_path, SWEEP_HEADER, _analytic_rows(spec, seed))
        return written
    rows, rank_rows = _sweep_rows(spec, seed, replications, workers)
    _write_csv(main_path, SWEEP_HEADER, rows)
    if spec.emit_rank_table:
        ranks_path = out_dir / f"{spec.name}_ranks.csv"
        _write_csv(ranks_path, RANKS_HEADER, rank_rows)
        written.append(ranks_path)
    return written


# --- YAML overrides -------------------------------------------------------


def _dist_from_mapping(data: dict) -> DistributionSpec:
    return DistributionSpec(
        kind=data["kind"],
        lower=float(data["lower"]),
        upper=float(data["upper"]),
        mean=None if data.get("mean") is None else float(data["mean"]),
        sd=None if data.get("sd") is None else float(data["sd"]),
        exponent=None if data.get("exponent") is None else float(data["exponent"]),
    )


def _series_from_mapping(data: dict) -> RuleSeries:
    rule = RuleSpec(
        kind=data["kind"],
        delegation_error_r=data.get("r"),
        designated_agent=data.get("designated_agent"),
    )
    return RuleSeries(rule=rule, N=data.get("N"))


def load_experiment_file(path: str | Path) -> ExperimentSpec:
    """Build an ExperimentSpec from a YAML key-value file.

    If ``name`` matches a builtin, unspecified fields keep the builtin's
    values; otherwise they fall back to the base-case defaults.
    """
    data = yaml.safe_load(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, dict) or "name" not in data:
        raise ConfigurationError(f"experiment file {path} must define a name")
    spec = BUILTINS.get(data["name"], ExperimentSpec(data["name"], ""))
    updates: dict = {}
    for key in ("description", "n", "m", "N", "e_M", "emit_rank_table"):
        if key in data:
            updates[key] = data[key]
    for key in ("type_dist", "quality_dist"):
        if key in data:
            updates[key] = _dist_from_mapping(data[key])
    if "rules" in data:
        updates["series"] = tuple(_series_from_mapping(d) for d in data["rules"])
    if "sweep" in data:
        axes = []
        for key, values in data["sweep"].items():
            if key in ("quality_dist", "type_dist"):
                values = [_dist_from_mapping(v) for v in values]
            elif key == "mn":
                values = [tuple(v) for v in values]
            axes.append((key, tuple(values)))
        updates["sweep"] = tuple(axes)
    if "batching" in data:
        b = data["batching"]
        updates["batching"] = None if b is None else BatchingSpec(
            batch_size_c=b["batch_size_c"],
            assignment=b.get("assignment", "random"),
            decision=b.get("decision", "centralized"),
        )
    return replace(spec, **updates)
