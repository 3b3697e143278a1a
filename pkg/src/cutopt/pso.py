"""Global-best particle swarm optimisation, used as the comparison baseline.

Positions are never clamped to the search box and velocities are never
limited. Objectives follow the same batch interface as :mod:`cutopt.oc`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .geometry import BoxRegion, widths
from .oc import Objective
from .records import RunRecord, TraceRecorder, sanitize
from .sampling import RandomStream, uniform_samples


@dataclass(frozen=True)
class PsoConfig:
    inertia: float = 0.4
    cognitive: float = 1.5
    social: float = 1.5
    particles: int = 100
    iterations: int = 100
    seed: int = 42
    stream: int = 0
    velocity_init_scale: float = 1.0

    def __post_init__(self):
        if self.particles < 1 or self.iterations < 1:
            raise ValueError("particles and iterations must be positive")
        if not 0.0 <= self.velocity_init_scale <= 1.0:
            raise ValueError("velocity_init_scale must lie in [0, 1]")

    @property
    def algorithm(self) -> str:
        return "PSO"

    def evaluations(self) -> int:
        return self.particles * (self.iterations + 1)


@dataclass
class SwarmState:
    positions: np.ndarray
    velocities: np.ndarray
    personal_best: np.ndarray
    personal_best_values: np.ndarray
    global_best: np.ndarray
    global_best_value: float

    def copy(self) -> "SwarmState":
        return SwarmState(
            self.positions.copy(),
            self.velocities.copy(),
            self.personal_best.copy(),
            self.personal_best_values.copy(),
            self.global_best.copy(),
            self.global_best_value,
        )


def update_velocity_position(x, v, p, g, w, c1, c2, r1, r2):
    """One application of the PSO update rule; returns ``(x_new, v_new)``."""
    v_new = w * v + c1 * r1 * (p - x) + c2 * r2 * (g - x)
    return x + v_new, v_new


def init_swarm(
    objective: Objective, region: BoxRegion, config: PsoConfig, stream: RandomStream
) -> tuple:
    """Random initial swarm and its evaluation; returns ``(state, nonfinite_count)``.

    Positions are uniform over the region (dimension-major draws); then
    velocities are uniform on ``[-s*W_d, s*W_d]`` (particle-major draws).
    """
    positions = uniform_samples(region, config.particles, stream)
    scale = config.velocity_init_scale * widths(region)
    velocities = scale * (2.0 * stream.uniform((config.particles, region.dim)) - 1.0)
    values, nbad = sanitize(objective(positions))
    g = int(np.argmin(values))
    state = SwarmState(
        positions=positions,
        velocities=velocities,
        personal_best=positions.copy(),
        personal_best_values=values,
        global_best=positions[g].copy(),
        global_best_value=float(values[g]),
    )
    return state, nbad


def pso_step(
    state: SwarmState, config: PsoConfig, objective: Objective, stream: RandomStream
) -> tuple:
    """Advance every particle once and refresh the bests; returns ``(new_state, nonfinite_count)``.

    Consumes ``2 * particles * D`` draws laid out as an array of shape
    (particles, D, 2): ``r1`` then ``r2`` for each dimension of each particle.
    """
    n, d = state.positions.shape
    r = stream.uniform((n, d, 2))
    x, v = update_velocity_position(
        state.positions,
        state.velocities,
        state.personal_best,
        state.global_best[None, :],
        config.inertia,
        config.cognitive,
        config.social,
        r[..., 0],
        r[..., 1],
    )
    values, nbad = sanitize(objective(x))
    improved = values < state.personal_best_values
    pbest = np.where(improved[:, None], x, state.personal_best)
    pbest_values = np.where(improved, values, state.personal_best_values)

    k = int(np.argmin(pbest_values))
    if pbest_values[k] < state.global_best_value:
        gbest, gbest_value = pbest[k].copy(), float(pbest_values[k])
    else:
        gbest, gbest_value = state.global_best.copy(), state.global_best_value
    return SwarmState(x, v, pbest, pbest_values, gbest, gbest_value), nbad


def pso_optimize(
    objective: Objective,
    region: BoxRegion,
    config: PsoConfig,
    recorder: Optional[TraceRecorder] = None,
    function_id: str = "",
) -> RunRecord:
    """Run `config.iterations` swarm steps after one initial evaluation pass.

    The trace has one entry per step (iteration 0 is the initial pass).
    """
    stream = RandomStream(config.seed, config.stream)
    if recorder is None:
        recorder = TraceRecorder()
    recorder.start()

    state, nonfinite = init_swarm(objective, region, config, stream)
    evaluations = config.particles
    recorder.record(0, evaluations, state.global_best_value)
    for it in range(1, config.iterations + 1):
        state, nbad = pso_step(state, config, objective, stream)
        nonfinite += nbad
        evaluations += config.particles
        recorder.record(it, evaluations, state.global_best_value)

    wall = recorder.elapsed()
    return RunRecord(
        algorithm=config.algorithm,
        function_id=function_id,
        seed=config.seed,
        stream=config.stream,
        best_point=state.global_best,
        best_value=state.global_best_value,
        error=state.global_best_value - recorder.f_star,
        evaluations=evaluations,
        iterations=config.iterations,
        wall_time=wall,
        trace=list(recorder.points),
        nonfinite_evaluations=nonfinite,
    )
