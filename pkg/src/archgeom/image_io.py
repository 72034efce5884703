"""PGM (P2/P5) reading and writing, and thresholding to ink rasters."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

__all__ = [
    "PGMError",
    "UnsupportedMagicError",
    "MalformedHeaderError",
    "TruncatedDataError",
    "PixelRangeError",
    "GrayImage",
    "BinaryImage",
    "read_pgm",
    "write_pgm",
    "load_pgm",
    "save_pgm",
    "binarize",
    "default_threshold",
    "ink_bounding_box",
    "to_gray",
]


class PGMError(ValueError):
    pass


class UnsupportedMagicError(PGMError):
    pass


class MalformedHeaderError(PGMError):
    pass


class TruncatedDataError(PGMError):
    pass


class PixelRangeError(PGMError):
    pass


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class GrayImage:
    """Row-major gray raster, ``pixels[y, x]`` in ``[0, maxval]``."""

    pixels: np.ndarray
    maxval: int = 255

    def __post_init__(self):
        px = np.asarray(self.pixels)
        if px.ndim != 2 or px.shape[0] == 0 or px.shape[1] == 0:
            raise ValueError("pixels must be a non-empty 2-D array")
        if not 1 <= self.maxval <= 65535:
            raise ValueError("maxval must be in [1, 65535]")
        if px.min() < 0 or px.max() > self.maxval:
            raise PixelRangeError("pixel value outside [0, maxval]")
        object.__setattr__(self, "pixels", _frozen(px.astype(np.uint16)))

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def __eq__(self, other):
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.maxval == other.maxval and np.array_equal(self.pixels, other.pixels)


@dataclass(frozen=True, eq=False)
class BinaryImage:
    """Row-major ink raster; ``bits[y, x]`` is True for a drawing stroke."""

    bits: np.ndarray

    def __post_init__(self):
        b = np.asarray(self.bits, dtype=bool)
        if b.ndim != 2 or b.shape[0] == 0 or b.shape[1] == 0:
            raise ValueError("bits must be a non-empty 2-D array")
        object.__setattr__(self, "bits", _frozen(b))

    @property
    def width(self) -> int:
        return self.bits.shape[1]

    @property
    def height(self) -> int:
        return self.bits.shape[0]

    @property
    def ink_count(self) -> int:
        return int(self.bits.sum())

    def __eq__(self, other):
        if not isinstance(other, BinaryImage):
            return NotImplemented
        return np.array_equal(self.bits, other.bits)


_WS = b" \t\n\r\v\f"


def _header_tokens(data: bytes, count: int) -> tuple[list[bytes], int]:
    # pulls `count` whitespace-separated header tokens, skipping comments;
    # returns the tokens and the offset just past the last one
    pos, out = 2, []
    n = len(data)
    while len(out) < count:
        while pos < n and (data[pos] in _WS or data[pos] == ord("#")):
            if data[pos] == ord("#"):
                while pos < n and data[pos] not in b"\n\r":
                    pos += 1
            else:
                pos += 1
        start = pos
        while pos < n and data[pos] not in _WS and data[pos] != ord("#"):
            pos += 1
        if start == pos:
            raise MalformedHeaderError("header ended early")
        out.append(data[start:pos])
    return out, pos


def _header_int(tok: bytes, name: str) -> int:
    if not tok.isdigit():
        raise MalformedHeaderError(f"{name} is not a positive integer: {tok!r}")
    return int(tok)


def read_pgm(data: bytes) -> GrayImage:
    magic = data[:2]
    if magic not in (b"P2", b"P5"):
        raise UnsupportedMagicError(f"unsupported magic {magic!r}")
    if len(data) > 2 and data[2] not in _WS and data[2] != ord("#"):
        raise MalformedHeaderError("magic must be followed by whitespace")
    (w_tok, h_tok, m_tok), pos = _header_tokens(data, 3)
    width = _header_int(w_tok, "width")
    height = _header_int(h_tok, "height")
    maxval = _header_int(m_tok, "maxval")
    if width == 0 or height == 0:
        raise MalformedHeaderError("zero image dimension")
    if not 1 <= maxval <= 65535:
        raise MalformedHeaderError(f"maxval {maxval} outside [1, 65535]")
    npix = width * height

    if magic == b"P5":
        if pos >= len(data) or data[pos] not in _WS:
            raise TruncatedDataError("missing raster after header")
        body = data[pos + 1:]
        bpp = 1 if maxval < 256 else 2
        if len(body) < npix * bpp:
            raise TruncatedDataError(f"expected {npix * bpp} raster bytes, got {len(body)}")
        dtype = np.uint8 if bpp == 1 else np.dtype(">u2")
        px = np.frombuffer(body, dtype=dtype, count=npix).astype(np.int64)
    else:
        toks = data[pos:].split()
        if len(toks) < npix:
            raise TruncatedDataError(f"expected {npix} samples, got {len(toks)}")
        if not all(t.isdigit() for t in toks[:npix]):
            raise MalformedHeaderError("non-numeric sample in raster")
        px = np.array([int(t) for t in toks[:npix]], dtype=np.int64)

    if px.size and px.max() > maxval:
        raise PixelRangeError(f"sample {int(px.max())} exceeds maxval {maxval}")
    return GrayImage(px.reshape(height, width), maxval)


def write_pgm(img: GrayImage, ascii: bool = False) -> bytes:
    header = f"{'P2' if ascii else 'P5'}\n{img.width} {img.height}\n{img.maxval}\n".encode("ascii")
    if not ascii:
        dtype = np.uint8 if img.maxval < 256 else np.dtype(">u2")
        return header + img.pixels.astype(dtype).tobytes()
    # one raster row per line keeps the text diffable
    lines = [" ".join(str(int(v)) for v in row) for row in img.pixels]
    return header + ("\n".join(lines) + "\n").encode("ascii")


def load_pgm(path) -> GrayImage:
    return read_pgm(Path(path).read_bytes())


def save_pgm(path, img: GrayImage, ascii: bool = False) -> None:
    Path(path).write_bytes(write_pgm(img, ascii=ascii))


def default_threshold(maxval: int) -> int:
    return (maxval + 2) // 2  # ceil((maxval + 1) / 2)


def binarize(img: GrayImage, threshold: int | None = None) -> BinaryImage:
    """Dark pixels (value below ``threshold``) become ink."""
    if threshold is None:
        threshold = default_threshold(img.maxval)
    if not 0 <= threshold <= img.maxval:
        raise ValueError(f"threshold {threshold} outside [0, {img.maxval}]")
    return BinaryImage(img.pixels < threshold)


def to_gray(img: BinaryImage, maxval: int = 255) -> GrayImage:
    """Render ink black on a white ground."""
    return GrayImage(np.where(img.bits, 0, maxval), maxval)


def ink_bounding_box(img: BinaryImage) -> tuple[int, int, int, int] | None:
    """Inclusive ``(x0, y0, x1, y1)`` of the ink, or None for a blank raster."""
    rows = np.flatnonzero(img.bits.any(axis=1))
    if rows.size == 0:
        return None
    cols = np.flatnonzero(img.bits.any(axis=0))
    return (int(cols[0]), int(rows[0]), int(cols[-1]), int(rows[-1]))
