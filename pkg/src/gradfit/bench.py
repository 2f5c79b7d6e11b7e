"""Timing benchmark: one-pass reduced circle fit versus the per-point
reweight baseline across dataset sizes.

The point of the comparison: after the single accumulation pass the reduced
fit iterates on ten numbers, so its per-iteration cost is flat in n, while
the reweight baseline revisits every point each iteration. All reported
times are medians over at least five repetitions on a monotonic clock, with
one warm-up run discarded.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from statistics import median

import numpy as np

from .datagen import SyntheticSpec, generate
from .errors import InvalidSpec
from .fitters import CircleParams, FitConfig, fit_circle_reduced, \
    fit_conic_reweight
from .moments import MomentVector

_TRUE = {"a": 0.3, "b": -0.2, "R": 1.0}
# start away from the optimum so every timed fit performs real iterations
_START = CircleParams(_TRUE["a"] + 0.4, _TRUE["b"] - 0.3, _TRUE["R"] * 1.5)


@dataclass(frozen=True)
class BenchRow:
    algorithm: str
    n: int
    accumulation_seconds: float
    per_iteration_seconds: float
    iterations: int
    total_seconds: float
    objective: float

    def to_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "n": self.n,
            "accumulation_seconds": self.accumulation_seconds,
            "per_iteration_seconds": self.per_iteration_seconds,
            "iterations": self.iterations,
            "total_seconds": self.total_seconds,
            "objective": self.objective,
        }


@dataclass(frozen=True)
class BenchReport:
    rows: tuple
    repetitions: int
    seed: int
    sigma: float

    def to_dict(self) -> dict:
        return {
            "repetitions": self.repetitions,
            "seed": self.seed,
            "sigma": self.sigma,
            "rows": [r.to_dict() for r in self.rows],
        }

    def row(self, algorithm: str, n: int) -> BenchRow:
        for r in self.rows:
            if r.algorithm == algorithm and r.n == n:
                return r
        raise KeyError((algorithm, n))

    def table(self) -> str:
        head = (f"{'algorithm':<10} {'n':>9} {'accum[s]':>11} "
                f"{'per-iter[s]':>12} {'iters':>6} {'total[s]':>11} "
                f"{'objective':>12}")
        lines = [head, "-" * len(head)]
        for r in self.rows:
            lines.append(
                f"{r.algorithm:<10} {r.n:>9} {r.accumulation_seconds:>11.3e} "
                f"{r.per_iteration_seconds:>12.3e} {r.iterations:>6} "
                f"{r.total_seconds:>11.3e} {r.objective:>12.5e}")
        return "\n".join(lines)


def _time_reduced(pts: np.ndarray, reps: int):
    accs, totals, iter_samples = [], [], []
    result = None
    cfg = FitConfig(init=_START)
    for rep in range(reps + 1):  # first lap is the discarded warm-up
        t0 = time.perf_counter()
        centroid = (float(pts[:, 0].mean()), float(pts[:, 1].mean()))
        mv = MomentVector.from_points(pts, 4, offset=centroid)
        t1 = time.perf_counter()
        result = fit_circle_reduced(mv, cfg)
        t2 = time.perf_counter()
        if rep == 0:
            continue
        accs.append(t1 - t0)
        totals.append(t2 - t0)
        iter_samples.extend(result.iteration_seconds)
    return accs, totals, iter_samples, result


def _time_reweight(pts: np.ndarray, reps: int):
    accs, totals, iter_samples = [], [], []
    result = None
    for rep in range(reps + 1):
        t0 = time.perf_counter()
        result = fit_conic_reweight(pts)
        t1 = time.perf_counter()
        if rep == 0:
            continue
        spent_iterating = sum(result.iteration_seconds)
        accs.append((t1 - t0) - spent_iterating)  # setup + diagnostics
        totals.append(t1 - t0)
        iter_samples.extend(result.iteration_seconds)
    return accs, totals, iter_samples, result


_TIMERS = {"reduced": _time_reduced, "reweight": _time_reweight}


def run_bench(ns, repetitions: int = 5, seed: int = 0,
              sigma: float = 0.01) -> BenchReport:
    ns = [int(n) for n in ns]
    if not ns:
        raise InvalidSpec("need at least one dataset size")
    if any(n < 10 for n in ns):
        raise InvalidSpec(f"dataset sizes must be >= 10, got {ns}")
    if repetitions < 5:
        raise InvalidSpec("medians need at least 5 repetitions")
    rows = []
    for i, n in enumerate(ns):
        pts = generate(SyntheticSpec("circle", _TRUE, n=n, sigma=sigma,
                                     seed=seed + i))
        for algo, timer in _TIMERS.items():
            accs, totals, iter_samples, result = timer(pts, repetitions)
            rows.append(BenchRow(
                algorithm=algo,
                n=n,
                accumulation_seconds=median(accs),
                per_iteration_seconds=(median(iter_samples)
                                       if iter_samples else math.nan),
                iterations=result.iterations,
                total_seconds=median(totals),
                objective=result.objective,
            ))
    return BenchReport(tuple(rows), repetitions, seed, sigma)
