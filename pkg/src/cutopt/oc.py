"""Optimization by cut: sample the current box, keep the best point, shrink around it.

Two sampling strategies are provided. ``deterministic`` (OCD) evaluates the
full ``N**D`` grid over the current box; ``stochastic`` (OCS) evaluates
``N`` uniform points. Objectives are batch callables mapping an
``(n, D)`` array to ``n`` values; wrap pointwise functions with
:func:`batched`.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .geometry import BoxRegion, CutState, cut, widths
from .records import RunRecord, TraceRecorder, sanitize
from .sampling import DEFAULT_GRID_CAP, RandomStream, check_grid_budget, grid_samples, uniform_samples

log = logging.getLogger(__name__)

DETERMINISTIC = "deterministic"
STOCHASTIC = "stochastic"

Objective = Callable[[np.ndarray], np.ndarray]


def batched(func: Callable[[np.ndarray], float]) -> Objective:
    """Lift a function of one point to the batch interface."""

    def wrapper(points):
        return np.array([func(p) for p in np.atleast_2d(points)], dtype=float)

    wrapper.__wrapped__ = func
    return wrapper


@dataclass(frozen=True)
class OcConfig:
    """Parameters of one OC run.

    `samples` is the per-axis grid size N for the deterministic strategy
    and the total number of points per iteration for the stochastic one.
    A value of 0 for `epsilon` disables the width stop; `max_iterations`
    of None means no iteration limit. At least one of the two must bound
    the run.
    """

    strategy: str = STOCHASTIC
    samples: int = 900
    lam: float = 0.4
    max_iterations: Optional[int] = 50
    epsilon: float = 0.0
    seed: int = 42
    stream: int = 0
    grid_cap: int = DEFAULT_GRID_CAP

    def __post_init__(self):
        if self.strategy not in (DETERMINISTIC, STOCHASTIC):
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if not 0.0 < self.lam < 1.0:
            raise ValueError(f"lambda must lie in (0, 1), got {self.lam}")
        if self.epsilon < 0 or not math.isfinite(self.epsilon):
            raise ValueError(f"epsilon must be a finite non-negative number, got {self.epsilon}")
        if self.max_iterations is not None and self.max_iterations < 1:
            raise ValueError("max_iterations must be positive or None")
        if self.max_iterations is None and self.epsilon <= 0:
            raise ValueError("either max_iterations or a positive epsilon is required to terminate")
        if self.strategy == DETERMINISTIC and self.samples < 2:
            raise ValueError("deterministic sampling needs at least 2 points per axis")
        if self.samples < 1:
            raise ValueError("samples must be positive")

    @property
    def algorithm(self) -> str:
        return "OCD" if self.strategy == DETERMINISTIC else "OCS"

    def samples_per_iteration(self, dim: int) -> int:
        if self.strategy == DETERMINISTIC:
            return self.samples**dim
        return self.samples


@dataclass
class BestSoFar:
    point: np.ndarray
    value: float


def stop_iteration(region: BoxRegion, lam: float, epsilon: float) -> int:
    """Smallest n with ``lam**n * max(widths) < epsilon`` (analytic form of the width stop)."""
    wmax = float(np.max(widths(region)))
    if wmax < epsilon:
        return 1
    return max(1, math.ceil(math.log(epsilon / wmax) / math.log(lam)))


def oc_optimize(
    objective: Objective,
    region: BoxRegion,
    config: OcConfig,
    recorder: Optional[TraceRecorder] = None,
    function_id: str = "",
) -> RunRecord:
    """Minimise `objective` over `region` by repeated sampling and cutting.

    The incumbent starts at the lower corner with value +inf and is not
    evaluated there. Each iteration the argmin is taken over the incumbent
    followed by the fresh samples, so ties keep the earlier point. The new
    box is the cut of the original region around the incumbent. NaN and
    infinite objective values are treated as +inf.
    """
    dim = region.dim
    per_iter = config.samples_per_iteration(dim)
    if config.strategy == DETERMINISTIC:
        check_grid_budget(dim, config.samples, config.grid_cap)
        stream = None
    else:
        stream = RandomStream(config.seed, config.stream)

    if recorder is None:
        recorder = TraceRecorder()
    recorder.start()

    best = BestSoFar(region.lower.copy(), math.inf)
    current = region
    evaluations = 0
    nonfinite = 0
    n = 0
    while config.max_iterations is None or n < config.max_iterations:
        n += 1
        if stream is None:
            pts = grid_samples(current, config.samples, config.grid_cap)
        else:
            pts = uniform_samples(current, config.samples, stream)
        values, nbad = sanitize(objective(pts))
        if values.size != len(pts):
            raise ValueError(f"objective returned {values.size} values for {len(pts)} points")
        evaluations += per_iter
        if nbad:
            nonfinite += nbad
            log.debug("iteration %d: %d non-finite objective values treated as +inf", n, nbad)

        i = int(np.argmin(values))
        if values[i] < best.value:
            best = BestSoFar(pts[i].copy(), float(values[i]))

        current = cut(CutState(region, config.lam, n), best.point)
        recorder.record(n, evaluations, best.value)
        if config.epsilon > 0 and float(np.max(widths(current))) < config.epsilon:
            break

    wall = recorder.elapsed()
    if nonfinite:
        log.info("%s run: %d non-finite objective values ignored", config.algorithm, nonfinite)
    return RunRecord(
        algorithm=config.algorithm,
        function_id=function_id,
        seed=config.seed,
        stream=config.stream,
        best_point=best.point,
        best_value=best.value,
        error=best.value - recorder.f_star,
        evaluations=evaluations,
        iterations=n,
        wall_time=wall,
        trace=list(recorder.points),
        nonfinite_evaluations=nonfinite,
    )
