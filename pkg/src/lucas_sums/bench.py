"""Wall-clock comparison of the closed-form sum against literal summation."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .sequences import SequenceParams
from .sums import SumQuery, sum_closed, sum_naive

__all__ = ["BenchRow", "bench_sum"]


@dataclass(frozen=True)
class BenchRow:
    n: int
    naive_seconds: float
    closed_seconds: float
    equal: bool
    value: int

    @property
    def ratio(self) -> float:
        if self.closed_seconds <= 0:
            return float("inf")
        return self.naive_seconds / self.closed_seconds

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "naive_seconds": self.naive_seconds,
            "closed_seconds": self.closed_seconds,
            "ratio": self.ratio,
            "equal": self.equal,
            "value": str(self.value),
        }


def _timed(fn, params, query, repeat):
    best, value = None, None
    for _ in range(max(1, repeat)):
        start = time.perf_counter()
        value = fn(params, query).value
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, value


def bench_sum(params: SequenceParams, n: int, kind="S", pair="UU", r=0, s=0,
              repeat: int = 1, naive_repeat: int | None = None) -> BenchRow:
    """Time both paths on the same query and report best-of-``repeat`` seconds."""
    query = SumQuery(kind, pair, r, s, n)
    closed_t, closed_v = _timed(sum_closed, params, query, repeat)
    naive_t, naive_v = _timed(sum_naive, params, query, naive_repeat or repeat)
    return BenchRow(n, naive_t, closed_t, closed_v == naive_v, closed_v)
