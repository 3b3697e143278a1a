"""Derivative-free global optimization by region cutting, with a PSO baseline and a benchmark catalog."""

from .benchmarks import BenchmarkEntry, catalog, evaluate, get, validate_catalog
from .geometry import BoxRegion, CutState, contains, cut, widths
from .harness import ExperimentResult, median, paper_suite, run_experiment
from .oc import BestSoFar, OcConfig, batched, oc_optimize
from .pso import PsoConfig, SwarmState, pso_optimize, pso_step
from .records import RunRecord, TracePoint, TraceRecorder
from .sampling import GridBudgetError, RandomStream, grid_samples, uniform_samples

__version__ = "0.1.0"

__all__ = [
    "BenchmarkEntry", "catalog", "evaluate", "get", "validate_catalog",
    "BoxRegion", "CutState", "contains", "cut", "widths",
    "ExperimentResult", "median", "paper_suite", "run_experiment",
    "BestSoFar", "OcConfig", "batched", "oc_optimize",
    "PsoConfig", "SwarmState", "pso_optimize", "pso_step",
    "RunRecord", "TracePoint", "TraceRecorder",
    "GridBudgetError", "RandomStream", "grid_samples", "uniform_samples",
]
