"""End-to-end experiments: seeded trajectories, per-timestep memory costs, ranking.

Each (rule, seed) unit evolves one open-boundary trajectory and measures, at
the sampled timesteps, the quantum memory cost and optionally the classical
statistical complexity of the row. Units are independent; traces aggregate
across seeds into per-rule growth rates.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from .classical import infer_machine, statistical_complexity
from .evolve import run_open_boundary, write_pbm
from .quantum import gram_matrix, quantum_statistical_memory, symmetric_spectrum
from .rules import canonical_rules, parse_rule
from .tape import Tape, kink_filter
from .windows import (
    ConditionalFutures,
    EmpiricalDistribution,
    chained_futures,
    conditional_futures,
    count_windows,
    shannon_entropy,
)

__all__ = [
    "ExperimentConfig",
    "TracePoint",
    "ComplexityTrace",
    "FailureRecord",
    "ExperimentResult",
    "RuleStatistics",
    "SpectrumReport",
    "sampling_schedule",
    "row_complexities",
    "run_experiment",
    "growth_rate",
    "rank_spectrum",
]

ESTIMATORS = ("chained", "direct")
FORMATS = ("csv", "json", "svg")


def sampling_schedule(t_max: int) -> list[int]:
    """Decade-wise timesteps 1..9, 10..90, 100..900, ... plus t_max itself."""
    if t_max < 1:
        raise ValueError(f"t_max must be >= 1, got {t_max}")
    out = []
    t, step = 1, 1
    while t <= t_max:
        out.append(t)
        t += step
        if t == 10 * step:
            step *= 10
    if out[-1] != t_max:
        out.append(t_max)
    return out


@dataclass(frozen=True)
class ExperimentConfig:
    """Full description of one experiment; value-identical configs rerun identically."""

    rules: tuple[int, ...] = field(default_factory=lambda: tuple(canonical_rules()))
    width: int = 64_000
    window_l: int = 6
    t_max: int = 1_000
    seeds: tuple[int, ...] = (1, 2, 3, 4, 5)
    chi2_alpha: float = 0.05
    schedule: tuple[int, ...] = ()
    classical: bool = True
    apply_kink_filter: bool = False
    futures_estimator: str = "chained"
    out_dir: str = "out"
    formats: tuple[str, ...] = ("csv", "json", "svg")
    write_pbm: bool = False
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(int(r) for r in self.rules))
        object.__setattr__(self, "seeds", tuple(int(s) for s in self.seeds))
        if not self.rules:
            raise ValueError("at least one rule is required")
        for r in self.rules:
            if not 0 <= r <= 255:
                raise ValueError(f"rule number must be in [0, 255], got {r}")
        if not self.seeds:
            raise ValueError("at least one seed is required")
        if self.t_max < 1:
            raise ValueError(f"t_max must be >= 1, got {self.t_max}")
        if self.window_l < 1:
            raise ValueError(f"window length must be >= 1, got {self.window_l}")
        if self.width < 2 * self.window_l:
            raise ValueError(
                f"width {self.width} is shorter than 2L = {2 * self.window_l}"
            )
        if not 0.0 < self.chi2_alpha < 1.0:
            raise ValueError(f"chi2 alpha must be in (0, 1), got {self.chi2_alpha}")
        if self.futures_estimator not in ESTIMATORS:
            raise ValueError(f"futures estimator must be one of {ESTIMATORS}")
        unknown = set(self.formats) - set(FORMATS)
        if unknown:
            raise ValueError(f"unknown output format(s): {sorted(unknown)}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if not self.schedule:
            object.__setattr__(self, "schedule", tuple(sampling_schedule(self.t_max)))
        else:
            sched = tuple(int(t) for t in self.schedule)
            if any(b <= a for a, b in zip(sched, sched[1:])) or sched[0] < 1:
                raise ValueError("schedule must be strictly increasing and >= 1")
            if sched[-1] > self.t_max:
                raise ValueError("schedule exceeds t_max")
            object.__setattr__(self, "schedule", sched)


@dataclass(frozen=True)
class TracePoint:
    """Memory costs and diagnostics of one sampled row."""

    t: int
    c_q: float
    gram_dim: int
    past_entropy: float
    gram_trace_error: float
    gram_min_eigenvalue: float
    c_mu: float | None = None
    n_states: int | None = None
    machine_residual: float | None = None


@dataclass(frozen=True)
class ComplexityTrace:
    """Per-(rule, seed) time series over the sampling schedule."""

    rule: int
    seed: int
    points: tuple[TracePoint, ...]


@dataclass(frozen=True)
class FailureRecord:
    rule: int
    seed: int
    error: str


@dataclass(frozen=True)
class ExperimentResult:
    config: ExperimentConfig
    traces: tuple[ComplexityTrace, ...]
    failures: tuple[FailureRecord, ...]


def _quantum_inputs(
    row: Tape, window_l: int, estimator: str
) -> tuple[EmpiricalDistribution, ConditionalFutures]:
    """Past distribution and conditional futures, mutually consistent."""
    if estimator == "direct":
        dist = count_windows(row, 2 * window_l)
        futures = conditional_futures(dist)
    else:
        dist = count_windows(row, window_l + 1)
        futures = chained_futures(dist)
    return dist.prefix_marginal(window_l), futures


def row_complexities(
    row: Tape,
    t: int,
    window_l: int,
    chi2_alpha: float = 0.05,
    classical: bool = True,
    futures_estimator: str = "chained",
) -> TracePoint:
    """Quantum memory cost, and optionally classical complexity, of one row."""
    past_dist, futures = _quantum_inputs(row, window_l, futures_estimator)
    gram = gram_matrix(past_dist, futures)
    spectrum = symmetric_spectrum(gram)
    c_q = quantum_statistical_memory(gram)
    point = TracePoint(
        t=t,
        c_q=c_q,
        gram_dim=gram.dimension,
        past_entropy=shannon_entropy(past_dist.probabilities),
        gram_trace_error=abs(gram.trace - 1.0),
        gram_min_eigenvalue=float(spectrum.eigenvalues[-1]),
    )
    if classical:
        machine = infer_machine(row, window_l, chi2_alpha)
        point = replace(
            point,
            c_mu=statistical_complexity(machine),
            n_states=machine.n_states,
            machine_residual=machine.residual,
        )
    return point


def _run_unit(config: ExperimentConfig, rule_number: int, seed: int) -> ComplexityTrace:
    rule = parse_rule(rule_number)
    rng = np.random.default_rng(seed)
    initial = Tape.random(config.width, rng)
    trajectory = run_open_boundary(initial, rule, config.t_max, rng, seed=seed)
    if config.write_pbm:
        out = Path(config.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        write_pbm(trajectory, out / f"rule{rule_number:03d}_seed{seed}.pbm")
    points = []
    for t in config.schedule:
        row = trajectory.row(t)
        if config.apply_kink_filter:
            row = kink_filter(row)
        points.append(
            row_complexities(
                row,
                t,
                config.window_l,
                chi2_alpha=config.chi2_alpha,
                classical=config.classical,
                futures_estimator=config.futures_estimator,
            )
        )
    return ComplexityTrace(rule=rule_number, seed=seed, points=tuple(points))


def _run_unit_guarded(args) -> ComplexityTrace | FailureRecord:
    config, rule_number, seed = args
    try:
        return _run_unit(config, rule_number, seed)
    except (MemoryError, ValueError, RuntimeError, ArithmeticError) as exc:
        return FailureRecord(rule=rule_number, seed=seed, error=f"{type(exc).__name__}: {exc}")


def run_experiment(config: ExperimentConfig) -> ExperimentResult:
    """Run every (rule, seed) unit and collect traces in deterministic order."""
    units = [(config, rule, seed) for rule in config.rules for seed in config.seeds]
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            outcomes = list(pool.map(_run_unit_guarded, units))
    else:
        outcomes = [_run_unit_guarded(u) for u in units]
    traces = tuple(o for o in outcomes if isinstance(o, ComplexityTrace))
    failures = tuple(o for o in outcomes if isinstance(o, FailureRecord))
    return ExperimentResult(config=config, traces=traces, failures=failures)


def _slope_vs_log2_t(ts: np.ndarray, ys: np.ndarray) -> float:
    x = np.log2(ts)
    x_centered = x - x.mean()
    return float((x_centered * (ys - ys.mean())).sum() / (x_centered**2).sum())


def growth_rate(ts, mean_c_q) -> float:
    """Least-squares slope of mean C_q against log2 t over sampled t >= 10.

    Units are bits per doubling of t; early transients (t < 10) are excluded.
    """
    ts = np.asarray(ts, dtype=np.float64)
    ys = np.asarray(mean_c_q, dtype=np.float64)
    keep = ts >= 10
    if keep.sum() < 2:
        raise ValueError("growth rate needs at least 2 sampled points with t >= 10")
    return _slope_vs_log2_t(ts[keep], ys[keep])


def _ranking_rate(ts, mean_c_q) -> float:
    """growth_rate when the schedule allows it, else the slope over all points.

    Short runs (t_max < 20) have too few post-transient samples for the
    headline metric; ranking still needs a deterministic value.
    """
    try:
        return growth_rate(ts, mean_c_q)
    except ValueError:
        ts = np.asarray(ts, dtype=np.float64)
        ys = np.asarray(mean_c_q, dtype=np.float64)
        if ts.size < 2:
            return 0.0
        return _slope_vs_log2_t(ts, ys)


@dataclass(frozen=True)
class RuleStatistics:
    """Across-seed mean and population std of both memory costs at each t."""

    rule: int
    ts: tuple[int, ...]
    c_q_mean: tuple[float, ...]
    c_q_std: tuple[float, ...]
    c_mu_mean: tuple[float, ...] | None
    c_mu_std: tuple[float, ...] | None
    n_seeds: int
    growth_rate: float


@dataclass(frozen=True)
class SpectrumReport:
    """Per-rule statistics and the growth-rate ranking."""

    per_rule: dict[int, RuleStatistics]
    ranking: tuple[int, ...]

    def rates(self) -> dict[int, float]:
        return {rule: stats.growth_rate for rule, stats in self.per_rule.items()}


def rank_spectrum(traces) -> SpectrumReport:
    """Aggregate traces across seeds and rank rules by descending growth rate."""
    by_rule: dict[int, list[ComplexityTrace]] = {}
    for trace in traces:
        by_rule.setdefault(trace.rule, []).append(trace)
    if not by_rule:
        raise ValueError("no traces to rank")

    per_rule: dict[int, RuleStatistics] = {}
    for rule in sorted(by_rule):
        group = sorted(by_rule[rule], key=lambda tr: tr.seed)
        ts = tuple(p.t for p in group[0].points)
        if any(tuple(p.t for p in tr.points) != ts for tr in group):
            raise ValueError(f"traces for rule {rule} sample different schedules")
        c_q = np.array([[p.c_q for p in tr.points] for tr in group])
        has_classical = all(p.c_mu is not None for tr in group for p in tr.points)
        c_mu = (
            np.array([[p.c_mu for p in tr.points] for tr in group])
            if has_classical
            else None
        )
        mean_c_q = c_q.mean(axis=0)
        per_rule[rule] = RuleStatistics(
            rule=rule,
            ts=ts,
            c_q_mean=tuple(float(x) for x in mean_c_q),
            c_q_std=tuple(float(x) for x in c_q.std(axis=0)),
            c_mu_mean=tuple(float(x) for x in c_mu.mean(axis=0)) if c_mu is not None else None,
            c_mu_std=tuple(float(x) for x in c_mu.std(axis=0)) if c_mu is not None else None,
            n_seeds=len(group),
            growth_rate=_ranking_rate(ts, mean_c_q),
        )

    ranking = tuple(
        sorted(per_rule, key=lambda rule: (-per_rule[rule].growth_rate, rule))
    )
    return SpectrumReport(per_rule=per_rule, ranking=ranking)
