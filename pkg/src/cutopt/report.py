"""CSV and JSON serialization of experiment results."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Sequence

from .harness import ALGORITHM_ORDER, ExperimentResult
from .records import RunRecord, TracePoint

TABLE_HEADER = ["function", "algorithm", "median_error", "mean_time_s", "runs", "evals_per_run"]
TRACE_HEADER = ["iteration", "cum_evals", "cum_seconds", "best_error"]


def fmt(value) -> str:
    """Shortest round-trip text for floats; plain str otherwise."""
    if isinstance(value, float):
        return repr(value)
    return str(value)


@dataclass(frozen=True)
class ResultTableRow:
    function_id: str
    algorithm: str
    median_error: float
    mean_time_seconds: float
    runs: int
    evaluations_per_run: int

    @classmethod
    def from_result(cls, result: ExperimentResult) -> "ResultTableRow":
        return cls(
            result.function_id,
            result.algorithm,
            result.median_error,
            result.mean_time,
            len(result.runs),
            result.evaluations_per_run,
        )

    def cells(self) -> List[str]:
        return [
            self.function_id,
            self.algorithm,
            fmt(float(self.median_error)),
            fmt(float(self.mean_time_seconds)),
            str(self.runs),
            str(self.evaluations_per_run),
        ]


def sort_rows(rows: Iterable[ResultTableRow]) -> List[ResultTableRow]:
    return sorted(rows, key=lambda r: (int(r.function_id[1:]), ALGORITHM_ORDER.index(r.algorithm)))


def write_table(path: Path, rows: Iterable[ResultTableRow]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(TABLE_HEADER)
        for row in sort_rows(rows):
            w.writerow(row.cells())


def read_table(path: Path) -> List[ResultTableRow]:
    with open(path, newline="", encoding="utf-8") as fh:
        return [
            ResultTableRow(
                rec["function"],
                rec["algorithm"],
                float(rec["median_error"]),
                float(rec["mean_time_s"]),
                int(rec["runs"]),
                int(rec["evals_per_run"]),
            )
            for rec in csv.DictReader(fh)
        ]


def write_trace(path: Path, trace: Sequence[TracePoint]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(TRACE_HEADER)
        for p in trace:
            w.writerow([p.iteration, p.cum_evals, fmt(float(p.cum_seconds)), fmt(float(p.best_error))])


def write_long_trace(path: Path, runs: Sequence[RunRecord]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["run"] + TRACE_HEADER)
        for k, run in enumerate(runs):
            for p in run.trace:
                w.writerow([k, p.iteration, p.cum_evals, fmt(float(p.cum_seconds)), fmt(float(p.best_error))])


def read_trace(path: Path) -> List[TracePoint]:
    with open(path, newline="", encoding="utf-8") as fh:
        return [
            TracePoint(int(r["iteration"]), int(r["cum_evals"]), float(r["cum_seconds"]), float(r["best_error"]))
            for r in csv.DictReader(fh)
        ]


def dump_result(result: ExperimentResult, timing: bool = True) -> str:
    return json.dumps(result.to_dict(timing=timing), indent=2)


def write_result(path: Path, result: ExperimentResult) -> None:
    Path(path).write_text(dump_result(result) + "\n", encoding="utf-8")


def read_result(path: Path) -> ExperimentResult:
    return ExperimentResult.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
