"""Wall-clock scaling of the labeling pipeline on random caterpillars."""

from __future__ import annotations

import gc
import statistics
import sys
import time
from dataclasses import dataclass

from .generator import random_caterpillar
from .labeler import label

# medians below this many timer ticks are mostly clock noise
_NOISE_TICKS = 1000


@dataclass
class BenchRow:
    n: int
    trials: int
    median_s: float
    min_s: float
    ratio: float | None  # median over the median at n / 10, when that size was run


def bench_instance(n: int, seed: int):
    """Random caterpillar of order ``n`` with half its vertices on the spine."""
    p = max(2, n // 2)
    return random_caterpillar(p, n - 1 - p, seed)


def _timed_label(t) -> float:
    gc.collect()  # leftover garbage from earlier trials is not billed here
    start = time.perf_counter()
    label(t)
    return time.perf_counter() - start


def time_label(n: int, trials: int, seed: int) -> list[float]:
    """Seconds spent in :func:`label` alone, one fresh instance per trial."""
    return time_sizes([n], trials, seed)[n]


def time_sizes(sizes: list[int], trials: int, seed: int) -> dict[int, list[float]]:
    """Per-size timings with trials interleaved across sizes.

    Round ``j`` times one instance (seed ``seed + j``) of every size, so slow
    drift in machine load hits all sizes alike. One untimed warm-up run per
    size, on an instance outside the timed seeds, comes first.
    """
    for n in sizes:
        label(bench_instance(n, seed + trials))
    times: dict[int, list[float]] = {n: [] for n in sizes}
    for j in range(trials):
        for n in sizes:
            times[n].append(_timed_label(bench_instance(n, seed + j)))
    return times


def run_bench(sizes: list[int], trials: int, seed: int, warn=sys.stderr) -> list[BenchRow]:
    resolution = time.get_clock_info("perf_counter").resolution
    rows: list[BenchRow] = []
    medians: dict[int, float] = {}
    timings = time_sizes(sizes, trials, seed)
    for n in sizes:
        times = timings[n]
        med = statistics.median(times)
        if warn is not None and med < _NOISE_TICKS * resolution:
            print(f"warning: n={n} median {med:.3g}s is within timer noise", file=warn)
        medians[n] = med
        base = medians.get(n // 10) if n % 10 == 0 else None
        rows.append(BenchRow(n, trials, med, min(times), med / base if base else None))
    return rows
