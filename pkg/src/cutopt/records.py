"""Run records and the per-iteration trace sink shared by all optimizers."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional

import numpy as np


class TracePoint(NamedTuple):
    iteration: int
    cum_evals: int
    cum_seconds: float
    best_error: float


class TraceRecorder:
    """Collects one trace point per optimizer iteration.

    Errors are reported relative to `f_star`; with the default of 0 the
    trace simply holds best-so-far objective values.
    """

    def __init__(self, f_star: float = 0.0):
        self.f_star = float(f_star)
        self.points: List[TracePoint] = []
        self._t0: Optional[float] = None

    def start(self) -> None:
        self.points = []
        self._t0 = time.perf_counter()

    def elapsed(self) -> float:
        if self._t0 is None:
            return 0.0
        return time.perf_counter() - self._t0

    def record(self, iteration: int, cum_evals: int, best_value: float) -> None:
        self.points.append(
            TracePoint(int(iteration), int(cum_evals), self.elapsed(), float(best_value) - self.f_star)
        )


@dataclass
class RunRecord:
    """Outcome of a single optimization run."""

    algorithm: str
    function_id: str
    seed: int
    stream: int
    best_point: np.ndarray
    best_value: float
    error: float
    evaluations: int
    iterations: int
    wall_time: float
    trace: List[TracePoint] = field(default_factory=list)
    nonfinite_evaluations: int = 0

    def __eq__(self, other):
        if not isinstance(other, RunRecord):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "algorithm": self.algorithm,
            "function_id": self.function_id,
            "seed": self.seed,
            "stream": self.stream,
            "best_point": [float(v) for v in self.best_point],
            "best_value": float(self.best_value),
            "error": float(self.error),
            "evaluations": self.evaluations,
            "iterations": self.iterations,
            "nonfinite_evaluations": self.nonfinite_evaluations,
        }
        if timing:
            out["wall_time"] = self.wall_time
            out["trace"] = [list(p) for p in self.trace]
        else:
            out["trace"] = [[p.iteration, p.cum_evals, p.best_error] for p in self.trace]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "RunRecord":
        return cls(
            algorithm=data["algorithm"],
            function_id=data["function_id"],
            seed=int(data["seed"]),
            stream=int(data["stream"]),
            best_point=np.asarray(data["best_point"], dtype=float),
            best_value=float(data["best_value"]),
            error=float(data["error"]),
            evaluations=int(data["evaluations"]),
            iterations=int(data["iterations"]),
            wall_time=float(data["wall_time"]),
            trace=[
                TracePoint(int(p[0]), int(p[1]), float(p[2]), float(p[3]))
                for p in data["trace"]
            ],
            nonfinite_evaluations=int(data.get("nonfinite_evaluations", 0)),
        )


def sanitize(values) -> tuple:
    """Map NaN/inf objective values to +inf; return (values, number replaced)."""
    values = np.asarray(values, dtype=float).reshape(-1)
    bad = ~np.isfinite(values)
    nbad = int(bad.sum())
    if nbad:
        values = np.where(bad, np.inf, values)
    return values, nbad
