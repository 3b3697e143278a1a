"""Repeated-run experiments: median error, mean time and aggregated traces."""

from __future__ import annotations

import logging
import os
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from typing import List, Optional, Sequence, Union

import numpy as np

from . import benchmarks as cat
from .oc import DETERMINISTIC, STOCHASTIC, OcConfig, oc_optimize
from .pso import PsoConfig, pso_optimize
from .records import RunRecord, TracePoint, TraceRecorder
from .sampling import check_grid_budget

log = logging.getLogger(__name__)

AlgorithmConfig = Union[OcConfig, PsoConfig]

ALGORITHM_ORDER = ("OCD", "OCS", "PSO")
THREADS_ENV = "CUTOPT_THREADS"


def median(values: Sequence[float]) -> float:
    """Sample median; for an even count, the mean of the two central values."""
    values = list(values)
    if not values:
        raise ValueError("median of an empty sequence")
    return float(statistics.median(values))


@dataclass
class ExperimentResult:
    function_id: str
    algorithm: str
    runs: List[RunRecord]
    median_error: float
    mean_time: float
    median_trace: List[TracePoint]
    master_seed: int = 0
    config: dict = field(default_factory=dict)

    @property
    def evaluations_per_run(self) -> int:
        return self.runs[0].evaluations if self.runs else 0

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "function_id": self.function_id,
            "algorithm": self.algorithm,
            "master_seed": self.master_seed,
            "config": self.config,
            "median_error": self.median_error,
            "runs": [r.to_dict(timing=timing) for r in self.runs],
        }
        if timing:
            out["mean_time"] = self.mean_time
            out["median_trace"] = [list(p) for p in self.median_trace]
        else:
            out["median_trace"] = [[p.iteration, p.cum_evals, p.best_error] for p in self.median_trace]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentResult":
        return cls(
            function_id=data["function_id"],
            algorithm=data["algorithm"],
            runs=[RunRecord.from_dict(r) for r in data["runs"]],
            median_error=float(data["median_error"]),
            mean_time=float(data["mean_time"]),
            median_trace=[
                TracePoint(int(p[0]), int(p[1]), float(p[2]), float(p[3]))
                for p in data["median_trace"]
            ],
            master_seed=int(data.get("master_seed", 0)),
            config=dict(data.get("config", {})),
        )


def config_to_dict(config: AlgorithmConfig) -> dict:
    out = asdict(config)
    out["algorithm"] = config.algorithm
    return out


def resolve_workers(workers: Optional[int] = None) -> int:
    if workers is None:
        try:
            workers = int(os.environ.get(THREADS_ENV, "0"))
        except ValueError:
            log.warning("ignoring non-integer %s", THREADS_ENV)
            workers = 0
    if workers <= 0:
        workers = os.cpu_count() or 1
    return workers


def single_run(entry: cat.BenchmarkEntry, config: AlgorithmConfig) -> RunRecord:
    recorder = TraceRecorder(entry.f_star)
    if isinstance(config, PsoConfig):
        return pso_optimize(entry, entry.region, config, recorder, function_id=entry.id)
    return oc_optimize(entry, entry.region, config, recorder, function_id=entry.id)


def aggregate_traces(runs: Sequence[RunRecord]) -> List[TracePoint]:
    """Per-iteration median of best-so-far errors, with mean cumulative time."""
    if not runs:
        return []
    length = min(len(r.trace) for r in runs)
    out = []
    for k in range(length):
        pts = [r.trace[k] for r in runs]
        out.append(
            TracePoint(
                pts[0].iteration,
                pts[0].cum_evals,
                float(np.mean([p.cum_seconds for p in pts])),
                median([p.best_error for p in pts]),
            )
        )
    return out


def check_config(entry: cat.BenchmarkEntry, config: AlgorithmConfig) -> None:
    if isinstance(config, OcConfig) and config.strategy == DETERMINISTIC:
        check_grid_budget(entry.dimension, config.samples, config.grid_cap)


def run_experiment(
    function_id: str,
    config: AlgorithmConfig,
    runs: int,
    master_seed: int = 42,
    workers: Optional[int] = None,
) -> ExperimentResult:
    """Run `runs` independent repetitions; run r draws from stream r of `master_seed`.

    Grid runs are deterministic, so their error is the same for every
    repetition; they are still repeated for the timing average.
    """
    if runs < 1:
        raise ValueError("runs must be at least 1")
    entry = cat.get(function_id)
    check_config(entry, config)
    configs = [replace(config, seed=master_seed, stream=r) for r in range(runs)]

    nworkers = min(resolve_workers(workers), runs)
    if nworkers == 1:
        records = [single_run(entry, c) for c in configs]
    else:
        with ThreadPoolExecutor(max_workers=nworkers) as pool:
            records = list(pool.map(lambda c: single_run(entry, c), configs))

    return ExperimentResult(
        function_id=entry.id,
        algorithm=config.algorithm,
        runs=records,
        median_error=median(r.error for r in records),
        mean_time=float(np.mean([r.wall_time for r in records])),
        median_trace=aggregate_traces(records),
        master_seed=master_seed,
        config=config_to_dict(replace(config, seed=master_seed, stream=0)),
    )


# Reference experiment settings, per dimension group.
SUITE_SETTINGS = {
    "2d": {
        "functions": (1, 20),
        "OCD": {"samples": 30, "lam": 0.4, "iterations": 50},
        "OCS": {"samples": 900, "lam": 0.4, "iterations": 50},
        "PSO": {"inertia": 0.4, "cognitive": 1.5, "social": 1.5, "particles": 100, "iterations": 100},
    },
    "4d": {
        "functions": (21, 30),
        "OCD": {"samples": 8, "lam": 0.8, "iterations": 200},
        "OCS": {"samples": 2000, "lam": 0.8, "iterations": 200},
        "PSO": {"inertia": 0.5, "cognitive": 1.5, "social": 1.5, "particles": 1000, "iterations": 200},
    },
    "30d": {
        "functions": (31, 50),
        "OCS": {"samples": 1000, "lam": 0.98, "iterations": 2000},
        "PSO": {"inertia": 0.5, "cognitive": 1.5, "social": 1.5, "particles": 2000, "iterations": 500},
    },
}
SUITE_RUNS = 100
GROUP_BY_DIMENSION = {2: "2d", 4: "4d", 30: "30d"}


@dataclass(frozen=True)
class ExperimentSpec:
    function_id: str
    config: AlgorithmConfig
    runs: int

    @property
    def algorithm(self) -> str:
        return self.config.algorithm

    def evaluations_per_run(self, dim: int) -> int:
        if isinstance(self.config, PsoConfig):
            return self.config.evaluations()
        return self.config.max_iterations * self.config.samples_per_iteration(dim)


def _scaled(iterations: int, scale: float) -> int:
    return max(1, int(round(iterations * scale)))


def suite_config(group: str, algorithm: str, budget_scale: float = 1.0, seed: int = 42) -> AlgorithmConfig:
    """Default configuration of one algorithm for a dimension group."""
    try:
        params = dict(SUITE_SETTINGS[group][algorithm])
    except KeyError:
        raise ValueError(f"no suite setting for {algorithm} in group {group}") from None
    iterations = _scaled(params.pop("iterations"), budget_scale)
    if algorithm == "PSO":
        return PsoConfig(iterations=iterations, seed=seed, **params)
    strategy = DETERMINISTIC if algorithm == "OCD" else STOCHASTIC
    return OcConfig(strategy=strategy, max_iterations=iterations, epsilon=0.0, seed=seed, **params)


def paper_suite(
    group: str,
    runs: Optional[int] = None,
    run_scale: float = 1.0,
    budget_scale: float = 1.0,
    seed: int = 42,
) -> List[ExperimentSpec]:
    """Experiment grid of one dimension group, in catalog then OCD/OCS/PSO order.

    `run_scale` multiplies the 100-run protocol (or `runs` sets it
    directly) and `budget_scale` multiplies iteration counts; sample sizes,
    shrink factors and swarm coefficients keep their reference values.
    """
    if group not in SUITE_SETTINGS:
        raise ValueError(f"unknown group {group!r}; expected one of {sorted(SUITE_SETTINGS)}")
    if runs is None:
        runs = max(1, int(round(SUITE_RUNS * run_scale)))
    first, last = SUITE_SETTINGS[group]["functions"]
    algorithms = [a for a in ALGORITHM_ORDER if a in SUITE_SETTINGS[group]]
    specs = []
    for k in range(first, last + 1):
        for algorithm in algorithms:
            specs.append(ExperimentSpec(f"f{k}", suite_config(group, algorithm, budget_scale, seed), runs))
    return specs
