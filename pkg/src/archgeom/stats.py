"""Means, sample standard deviations and Pearson correlations of dimension series."""
from __future__ import annotations

import math
import statistics
from dataclasses import dataclass

__all__ = ["DimSeries", "SeriesStats", "summarize", "pearson"]


@dataclass(frozen=True)
class DimSeries:
    label: str
    values: tuple[float, ...]

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if len(vals) < 2:
            raise ValueError(f"series {self.label!r} needs at least two values")
        if not all(math.isfinite(v) for v in vals):
            raise ValueError(f"series {self.label!r} has non-finite values")
        object.__setattr__(self, "values", vals)


@dataclass(frozen=True)
class SeriesStats:
    mean: float
    sample_std: float
    n: int


def summarize(s: DimSeries) -> SeriesStats:
    """Arithmetic mean and the (n - 1) sample standard deviation."""
    return SeriesStats(statistics.fmean(s.values), statistics.stdev(s.values), len(s.values))


def pearson(a: DimSeries, b: DimSeries) -> float:
    if len(a.values) != len(b.values):
        raise ValueError(f"length mismatch: {a.label!r} has {len(a.values)}, {b.label!r} has {len(b.values)}")
    for s in (a, b):
        if min(s.values) == max(s.values):
            raise ValueError(f"series {s.label!r} has zero variance")
    r = statistics.correlation(a.values, b.values)
    return max(-1.0, min(1.0, r))
