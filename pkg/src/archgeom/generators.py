"""Rasterised reference fractals with known dimensions.

Self-similar sets are drawn on canvases whose edge is a power of the
construction's scale factor, so that each pixel is one cell of the finest
construction level. Box counting on these rasters then sees exact
self-similar scaling.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from archgeom.image_io import BinaryImage

__all__ = ["Kind", "GeneratorSpec", "generate", "analytic_dimension", "koch_segments"]


class Kind(str, enum.Enum):
    KOCH_CURVE = "koch_curve"
    SIERPINSKI_TRIANGLE = "sierpinski_triangle"
    SIERPINSKI_CARPET = "sierpinski_carpet"
    CANTOR_DUST = "cantor_dust"
    LINE = "line"
    FILLED_SQUARE = "filled_square"


_TRIADIC = (Kind.KOCH_CURVE, Kind.SIERPINSKI_CARPET, Kind.CANTOR_DUST)


@dataclass(frozen=True)
class GeneratorSpec:
    kind: Kind
    level: int
    size: int

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.level < 0:
            raise ValueError("level must be non-negative")
        if self.size < 1:
            raise ValueError("size must be positive")
        if self.kind in _TRIADIC and self.size < 3 ** self.level:
            raise ValueError(f"{self.kind.value} level {self.level} needs size >= {3 ** self.level}")
        if self.kind is Kind.SIERPINSKI_TRIANGLE and self.size < 2 ** self.level:
            raise ValueError(f"sierpinski_triangle level {self.level} needs size >= {2 ** self.level}")


def analytic_dimension(kind) -> float:
    kind = Kind(kind)
    return {
        Kind.CANTOR_DUST: math.log(2) / math.log(3),
        Kind.KOCH_CURVE: math.log(4) / math.log(3),
        Kind.SIERPINSKI_TRIANGLE: math.log(3) / math.log(2),
        Kind.SIERPINSKI_CARPET: math.log(8) / math.log(3),
        Kind.LINE: 1.0,
        Kind.FILLED_SQUARE: 2.0,
    }[kind]


def _cells(size: int, n: int) -> np.ndarray:
    # pixel index -> construction cell index at n cells per edge
    return np.arange(size) * n // size


def _triadic_has_one(idx: np.ndarray, level: int) -> np.ndarray:
    hit = np.zeros(idx.shape, dtype=bool)
    for _ in range(level):
        hit |= idx % 3 == 1
        idx = idx // 3
    return hit


def koch_segments(level: int, length: float = 1.0) -> np.ndarray:
    """Koch curve polyline vertices, shape ``(4**level + 1, 2)``, peaks pointing up."""
    pts = np.array([[0.0, 0.0], [length, 0.0]])
    rot = complex(0.5, math.sqrt(3) / 2)
    for _ in range(level):
        z = pts[:, 0] + 1j * pts[:, 1]
        a, b = z[:-1], z[1:]
        d = (b - a) / 3
        p1 = a + d
        p3 = a + 2 * d
        p2 = p1 + d * rot
        new = np.empty(4 * a.size + 1, dtype=complex)
        new[0:-1:4], new[1::4], new[2::4], new[3::4] = a, p1, p2, p3
        new[-1] = z[-1]
        pts = np.column_stack([new.real, new.imag])
    return pts


def _koch(spec: GeneratorSpec) -> np.ndarray:
    size = spec.size
    height = int(math.floor(size * math.sqrt(3) / 6)) + 1
    verts = koch_segments(spec.level, float(size))
    a, b = verts[:-1], verts[1:]
    seg_len = float(np.hypot(*(b[0] - a[0])))
    # dense sampling, several samples per pixel, marks every cell the stroke touches
    n = max(2, int(math.ceil(seg_len * 8)) + 1)
    t = np.linspace(0.0, 1.0, n)[None, :, None]
    samples = (a[:, None, :] + t * (b - a)[:, None, :]).reshape(-1, 2)
    xs = np.clip(np.floor(samples[:, 0]).astype(np.int64), 0, size - 1)
    ys = np.clip(np.floor(samples[:, 1] + 1e-9).astype(np.int64), 0, height - 1)
    bits = np.zeros((height, size), dtype=bool)
    bits[height - 1 - ys, xs] = True
    return bits


def generate(spec: GeneratorSpec) -> BinaryImage:
    """Deterministic raster of ``spec``; ink is True."""
    k, size = spec.level, spec.size
    if spec.kind is Kind.FILLED_SQUARE:
        bits = np.ones((size, size), dtype=bool)
    elif spec.kind is Kind.LINE:
        bits = np.zeros((size, size), dtype=bool)
        bits[size // 2, :] = True
    elif spec.kind is Kind.CANTOR_DUST:
        bits = ~_triadic_has_one(_cells(size, 3 ** k), k)[None, :]
    elif spec.kind is Kind.SIERPINSKI_CARPET:
        cx = _cells(size, 3 ** k)
        # a cell is removed when some digit position is the middle third in both axes
        removed = np.zeros((size, size), dtype=bool)
        for _ in range(k):
            removed |= (cx % 3 == 1)[:, None] & (cx % 3 == 1)[None, :]
            cx = cx // 3
        bits = ~removed
    elif spec.kind is Kind.SIERPINSKI_TRIANGLE:
        n = 2 ** k
        cx = _cells(size, n)
        cy = (n - 1) - cx  # right angle at the bottom-left
        bits = (cy[:, None] & cx[None, :]) == 0
    else:
        bits = _koch(spec)
    return BinaryImage(bits)
