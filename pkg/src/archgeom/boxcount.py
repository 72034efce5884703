"""Box-counting fractal dimension of ink rasters.

A square grid of edge ``delta`` is laid over the drawing, anchored at the
top-left corner of the ink bounding box, and the occupied cells are counted.
Starting from ``delta = L`` (the larger side of the bounding box) the edge is
halved at each step. Two estimators are reported: the mean of the two-scale
slopes between neighbouring steps and the least-squares slope of
``ln N`` against ``-ln delta``.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from archgeom.image_io import BinaryImage, ink_bounding_box

__all__ = [
    "NoInkError",
    "PREFERRED_BAND",
    "BoxCountRecord",
    "BoxCountSeries",
    "PairwiseDimension",
    "DimensionReport",
    "count_boxes",
    "box_count_series",
    "pairwise_dimensions",
    "average_dimension",
    "fit_dimension",
    "in_preferred_band",
    "analyze",
    "report_from_series",
]

# aesthetic preference range for drawings, inclusive
PREFERRED_BAND = (1.1, 1.5)


class NoInkError(ValueError):
    pass


@dataclass(frozen=True)
class BoxCountRecord:
    delta: float
    count: int


@dataclass(frozen=True)
class BoxCountSeries:
    records: tuple[BoxCountRecord, ...]
    image_id: str = ""

    def __post_init__(self):
        object.__setattr__(self, "records", tuple(self.records))
        for r in self.records:
            if not r.delta > 0:
                raise ValueError("delta must be positive")

    @property
    def deltas(self) -> np.ndarray:
        return np.array([r.delta for r in self.records], dtype=float)

    @property
    def counts(self) -> np.ndarray:
        return np.array([r.count for r in self.records], dtype=np.int64)


@dataclass(frozen=True)
class PairwiseDimension:
    delta_large: float
    delta_small: float
    dim: float


@dataclass(frozen=True)
class DimensionReport:
    series: BoxCountSeries
    pairwise: tuple[PairwiseDimension, ...]
    average_dim: float
    lsq_dim: float
    in_preferred_band: bool

    def to_dict(self) -> dict:
        return {
            "image_id": self.series.image_id,
            "records": [{"delta": r.delta, "count": r.count} for r in self.series.records],
            "pairwise": [
                {"delta_large": p.delta_large, "delta_small": p.delta_small, "dim": p.dim}
                for p in self.pairwise
            ],
            "average_dim": self.average_dim,
            "lsq_dim": self.lsq_dim,
            "in_preferred_band": self.in_preferred_band,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "DimensionReport":
        series = BoxCountSeries(
            tuple(BoxCountRecord(float(r["delta"]), int(r["count"])) for r in d["records"]),
            d.get("image_id", ""),
        )
        return report_from_series(series)


def _default_origin(img: BinaryImage) -> tuple[float, float]:
    bbox = ink_bounding_box(img)
    if bbox is None:
        return (0.0, 0.0)
    return (float(bbox[0]), float(bbox[1]))


def _grid_shape(img: BinaryImage, delta: float, ox: float, oy: float) -> tuple[int, int, int, int]:
    # index ranges of every cell a pixel centre can fall in
    cx_lo = math.floor((0.5 - ox) / delta)
    cy_lo = math.floor((0.5 - oy) / delta)
    ncols = math.floor((img.width - 0.5 - ox) / delta) - cx_lo + 1
    nrows = math.floor((img.height - 0.5 - oy) / delta) - cy_lo + 1
    return cx_lo, cy_lo, ncols, nrows


def _cell_keys(ys: np.ndarray, xs: np.ndarray, delta: float, ox: float, oy: float,
               grid: tuple[int, int, int, int]) -> np.ndarray:
    cx_lo, cy_lo, ncols, _ = grid
    cx = np.floor((xs + 0.5 - ox) / delta).astype(np.int64) - cx_lo
    cy = np.floor((ys + 0.5 - oy) / delta).astype(np.int64) - cy_lo
    return cy * ncols + cx


def _distinct(keys: np.ndarray, ncells: int) -> int:
    if ncells <= 4 * keys.size + (1 << 20):
        occupied = np.zeros(ncells, dtype=bool)
        occupied[keys] = True
        return int(np.count_nonzero(occupied))
    return int(np.unique(keys).size)


def count_boxes(img: BinaryImage, delta: float, origin: tuple[float, float] | None = None,
                workers: int = 1) -> int:
    """Number of grid cells of edge ``delta`` holding at least one ink pixel.

    A pixel belongs to the cell containing its centre ``(x + 0.5, y + 0.5)``.
    ``origin`` defaults to the top-left corner of the ink bounding box.
    With ``workers > 1`` the pixels are keyed in parallel chunks and the
    occupied-cell sets merged, which gives the same count.
    """
    if not delta > 0:
        raise ValueError("delta must be positive")
    ox, oy = _default_origin(img) if origin is None else origin
    if not (0 <= ox <= img.width and 0 <= oy <= img.height):
        raise ValueError("origin outside the image")
    ys, xs = np.nonzero(img.bits)
    if ys.size == 0:
        return 0
    grid = _grid_shape(img, delta, ox, oy)
    ncells = grid[2] * grid[3]
    if workers <= 1:
        return _distinct(_cell_keys(ys, xs, delta, ox, oy, grid), ncells)
    chunks = np.array_split(np.arange(ys.size), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda idx: _cell_keys(ys[idx], xs[idx], delta, ox, oy, grid), chunks))
    return _distinct(np.concatenate(parts), ncells)


def box_count_series(img: BinaryImage, levels: int = 4, initial_delta: float | None = None,
                     image_id: str = "", workers: int = 1) -> BoxCountSeries:
    if levels < 2:
        raise ValueError("levels must be at least 2")
    bbox = ink_bounding_box(img)
    if bbox is None:
        raise NoInkError("no ink in image")
    if initial_delta is None:
        x0, y0, x1, y1 = bbox
        initial_delta = float(max(x1 - x0 + 1, y1 - y0 + 1))
    if not initial_delta > 0:
        raise ValueError("initial_delta must be positive")
    origin = (float(bbox[0]), float(bbox[1]))
    records = []
    for k in range(levels):
        delta = initial_delta / 2 ** k
        records.append(BoxCountRecord(delta, count_boxes(img, delta, origin, workers)))
    return BoxCountSeries(tuple(records), image_id)


def pairwise_dimensions(s: BoxCountSeries) -> list[PairwiseDimension]:
    if len(s.records) < 2:
        raise ValueError("need at least two scales")
    out = []
    for big, small in zip(s.records, s.records[1:]):
        if big.count <= 0 or small.count <= 0:
            raise ValueError("zero box count in series")
        dim = math.log(small.count / big.count) / math.log(big.delta / small.delta)
        out.append(PairwiseDimension(big.delta, small.delta, dim))
    return out


def average_dimension(pairwise) -> float:
    dims = [p.dim for p in pairwise]
    if not dims:
        raise ValueError("no pairwise dimensions")
    return math.fsum(dims) / len(dims)


def fit_dimension(s: BoxCountSeries) -> float:
    """Least-squares slope of ``ln N`` against ``-ln delta``."""
    if len(s.records) < 2:
        raise ValueError("need at least two scales")
    if np.any(s.counts <= 0):
        raise ValueError("zero box count in series")
    x = -np.log(s.deltas)
    y = np.log(s.counts.astype(float))
    xc = x - x.mean()
    sxx = float(np.dot(xc, xc))
    if sxx == 0.0:
        raise ValueError("degenerate series: all deltas equal")
    return float(np.dot(xc, y - y.mean()) / sxx)


def in_preferred_band(dim: float) -> bool:
    lo, hi = PREFERRED_BAND
    return lo <= dim <= hi


def report_from_series(series: BoxCountSeries) -> DimensionReport:
    pairwise = tuple(pairwise_dimensions(series))
    avg = average_dimension(pairwise)
    return DimensionReport(series, pairwise, avg, fit_dimension(series), in_preferred_band(avg))


def analyze(img: BinaryImage, levels: int = 4, initial_delta: float | None = None,
            image_id: str = "", workers: int = 1) -> DimensionReport:
    return report_from_series(box_count_series(img, levels, initial_delta, image_id, workers))
