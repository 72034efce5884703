"""Poincare half-plane and disc models of the Lobachevski plane.

Points are thin wrappers around Python ``complex`` values. Lines of the
half-plane model are either vertical rays standing on the absolute or
semicircles centred on it; everything else (distances, angles, parallels,
triangles) is computed from those two shapes with ordinary Euclidean
arithmetic, since the model is conformal.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

__all__ = [
    "DomainError",
    "DegenerateError",
    "HalfPlanePoint",
    "DiscPoint",
    "VerticalRay",
    "Semicircle",
    "Geodesic",
    "HypConfig",
    "HTriangle",
    "dist_half_plane",
    "dist_half_plane_angle_form",
    "dist_disc",
    "to_disc",
    "to_half_plane",
    "geodesic_through",
    "on_geodesic",
    "ideal_endpoints",
    "between",
    "geodesic_point",
    "limiting_parallels",
    "tangent_toward",
    "angle_at",
    "triangle_angles",
    "triangle_angle_sum",
    "right_triangle",
    "pythagoras_residual",
    "segment_intersects_geodesic",
]

DEFAULT_TOL = 1e-9


class DomainError(ValueError):
    """A coordinate falls outside the model (on or beyond the absolute)."""


class DegenerateError(ValueError):
    """A construction is undefined for the given configuration."""


def _check_finite(z: complex) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"coordinates must be finite, got {z!r}")
    return z


@dataclass(frozen=True)
class HalfPlanePoint:
    z: complex

    def __post_init__(self):
        z = _check_finite(self.z)
        if not z.imag > 0:
            raise DomainError(f"half-plane point needs im > 0, got im = {z.imag!r}")
        object.__setattr__(self, "z", z)

    @classmethod
    def at(cls, x: float, y: float) -> "HalfPlanePoint":
        return cls(complex(x, y))

    @property
    def x(self) -> float:
        return self.z.real

    @property
    def y(self) -> float:
        return self.z.imag


@dataclass(frozen=True)
class DiscPoint:
    z: complex

    def __post_init__(self):
        z = _check_finite(self.z)
        if not abs(z) < 1:
            raise DomainError(f"disc point needs |z| < 1, got |z| = {abs(z)!r}")
        object.__setattr__(self, "z", z)

    @classmethod
    def at(cls, x: float, y: float) -> "DiscPoint":
        return cls(complex(x, y))


@dataclass(frozen=True)
class VerticalRay:
    foot: float


@dataclass(frozen=True)
class Semicircle:
    center: float
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise DegenerateError(f"semicircle radius must be positive, got {self.radius!r}")


Geodesic = Union[VerticalRay, Semicircle]


@dataclass(frozen=True)
class HypConfig:
    """Scale constant of the angle-form distance and predicate tolerance."""

    c: float = 1.0
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if not self.c > 0:
            raise ValueError("c must be positive")
        if not self.tol > 0:
            raise ValueError("tol must be positive")


def _scaled_tol(g: Geodesic, tol: float) -> float:
    # absolute tolerance is meaningless for a semicircle of radius 1e4
    if isinstance(g, Semicircle):
        return tol * max(1.0, g.radius, abs(g.center))
    return tol * max(1.0, abs(g.foot))


# -- distances and the model isometry ---------------------------------------

def dist_half_plane(p: HalfPlanePoint, q: HalfPlanePoint) -> float:
    """Hyperbolic distance, ``arcosh(1 + |p - q|^2 / (2 y_p y_q))``.

    Evaluated through the half-angle identity ``cosh d = 1 + 2 sinh^2(d/2)``,
    which keeps full relative precision for nearby points.
    """
    return 2.0 * math.asinh(abs(p.z - q.z) / (2.0 * math.sqrt(p.y * q.y)))


def _half_angle_tan(p: HalfPlanePoint, g: Semicircle) -> float:
    # tan of the angle at the left ideal endpoint between the absolute and
    # the chord to p; the two expressions are equal on the circle, pick the
    # one without cancellation (huge, nearly vertical circles included)
    dx = p.x - g.center
    if dx >= 0:
        return p.y / (dx + g.radius)
    return (g.radius - dx) / p.y


def dist_half_plane_angle_form(p: HalfPlanePoint, q: HalfPlanePoint,
                               cfg: HypConfig = HypConfig()) -> float:
    """Distance as ``c |ln(tan a / tan b)|`` with endpoint angles a, b.

    The angles are measured at the left ideal endpoint of the line through
    ``p`` and ``q``, between the absolute and the Euclidean chords to each
    point. On a vertical ray the formula degenerates to ``c |ln(y_p / y_q)|``.
    """
    if p == q:
        return 0.0
    g = geodesic_through(p, q, cfg.tol)
    if isinstance(g, VerticalRay):
        return cfg.c * abs(math.log(p.y / q.y))
    return cfg.c * abs(math.log(_half_angle_tan(p, g) / _half_angle_tan(q, g)))


def dist_disc(p: DiscPoint, q: DiscPoint) -> float:
    """Disc-model distance ``2 artanh |(p - q) / (1 - conj(p) q)|``."""
    num = abs(p.z - q.z)
    if num == 0.0:
        return 0.0
    return 2.0 * math.atanh(num / abs(1.0 - p.z.conjugate() * q.z))


def to_disc(p: HalfPlanePoint) -> DiscPoint:
    """Map ``w = (z - i) / (z + i)`` from the half-plane onto the disc."""
    return DiscPoint((p.z - 1j) / (p.z + 1j))


def to_half_plane(p: DiscPoint) -> HalfPlanePoint:
    """Inverse map ``w = i (1 + z) / (1 - z)``."""
    return HalfPlanePoint(1j * (1.0 + p.z) / (1.0 - p.z))


# -- lines --------------------------------------------------------------------

def geodesic_through(p: HalfPlanePoint, q: HalfPlanePoint, tol: float = DEFAULT_TOL) -> Geodesic:
    """The unique line through two distinct points.

    The centre of the semicircle is where the perpendicular bisector of the
    Euclidean segment ``pq`` meets the absolute.
    """
    if abs(p.z - q.z) < tol:
        raise DegenerateError("degenerate pair: points coincide")
    dx = p.x - q.x
    if abs(dx) < tol * max(1.0, abs(p.x), abs(q.x)):
        return VerticalRay(0.5 * (p.x + q.x))
    center = (abs(p.z) ** 2 - abs(q.z) ** 2) / (2.0 * dx)
    radius = 0.5 * (abs(p.z - center) + abs(q.z - center))
    return Semicircle(center, radius)


def on_geodesic(p: HalfPlanePoint, g: Geodesic, tol: float = DEFAULT_TOL) -> bool:
    if isinstance(g, VerticalRay):
        return abs(p.x - g.foot) < tol
    return abs(abs(p.z - g.center) - g.radius) < tol


def ideal_endpoints(g: Geodesic) -> tuple[float, float]:
    """Where ``g`` meets the absolute; ``math.inf`` stands for the point at infinity."""
    if isinstance(g, VerticalRay):
        return (g.foot, math.inf)
    return (g.center - g.radius, g.center + g.radius)


def _order_key(p: HalfPlanePoint, g: Geodesic) -> float:
    return p.y if isinstance(g, VerticalRay) else p.x


def between(a: HalfPlanePoint, b: HalfPlanePoint, c: HalfPlanePoint,
            tol: float = DEFAULT_TOL) -> bool:
    """True when ``a`` lies strictly between ``b`` and ``c`` on their common line.

    Order along a semicircle is the order of the projections onto the
    absolute; along a vertical ray it is the order of heights.
    """
    g = geodesic_through(b, c, tol)
    if not on_geodesic(a, g, _scaled_tol(g, tol)):
        raise DegenerateError("points do not lie on one line")
    ka, kb, kc = (_order_key(pt, g) for pt in (a, b, c))
    return min(kb, kc) < ka < max(kb, kc)


def geodesic_point(p: HalfPlanePoint, q: HalfPlanePoint, t: float,
                   tol: float = DEFAULT_TOL) -> HalfPlanePoint:
    """Point on segment ``pq`` at hyperbolic arc-length fraction ``t``.

    Uses the fact that ``ln tan`` of the endpoint angle (``ln y`` on a ray) is
    an arc-length coordinate along the line.
    """
    g = geodesic_through(p, q, tol)
    if isinstance(g, VerticalRay):
        y = math.exp((1.0 - t) * math.log(p.y) + t * math.log(q.y))
        return HalfPlanePoint(complex(g.foot, y))
    tp = _half_angle_tan(p, g)
    ds = t * math.log(_half_angle_tan(q, g) / tp)
    # turn angle from p, formed from differences so large circles stay accurate
    tm = tp * math.exp(ds)
    dtheta = 2.0 * math.atan(tp * math.expm1(ds) / (1.0 + tp * tm))
    theta_p = 2.0 * math.atan(tp)
    step = 2j * g.radius * math.sin(0.5 * dtheta) * cmath.exp(1j * (theta_p + 0.5 * dtheta))
    return HalfPlanePoint(p.z + step)


def _line_through_ideal(p: HalfPlanePoint, e: float, tol: float) -> Geodesic:
    if math.isinf(e) or abs(p.x - e) < tol * max(1.0, abs(e)):
        return VerticalRay(p.x if math.isinf(e) else e)
    center = (abs(p.z) ** 2 - e * e) / (2.0 * (p.x - e))
    return Semicircle(center, abs(e - center))


def limiting_parallels(g: Geodesic, p: HalfPlanePoint,
                       tol: float = DEFAULT_TOL) -> tuple[Geodesic, Geodesic]:
    """The two lines through ``p`` that meet ``g`` only on the absolute.

    For a semicircle the result is ordered by its left then right ideal
    endpoint. For a vertical ray the parallel through the point at infinity
    (another vertical ray) comes first, then the one through the foot.
    """
    if on_geodesic(p, g, _scaled_tol(g, tol)):
        raise DegenerateError("point lies on the line")
    left, right = ideal_endpoints(g)
    if isinstance(g, VerticalRay):
        left, right = right, left
    return (_line_through_ideal(p, left, tol), _line_through_ideal(p, right, tol))


# -- angles and triangles -----------------------------------------------------

def _unit_tangent(p: HalfPlanePoint, g: Geodesic) -> complex:
    # rays point up, semicircles run from the left endpoint to the right one
    if isinstance(g, VerticalRay):
        return 1j
    return complex(p.y, -(p.x - g.center)) / abs(p.z - g.center)


def _angle_between(u: complex, v: complex) -> float:
    return abs(math.atan2((u.conjugate() * v).imag, (u.conjugate() * v).real))


def tangent_toward(vertex: HalfPlanePoint, target: HalfPlanePoint,
                   tol: float = DEFAULT_TOL) -> complex:
    """Unit tangent at ``vertex`` of the segment running to ``target``."""
    g = geodesic_through(vertex, target, tol)
    t = _unit_tangent(vertex, g)
    ahead = target.y > vertex.y if isinstance(g, VerticalRay) else target.x > vertex.x
    return t if ahead else -t


def angle_at(vertex: HalfPlanePoint, g1: Geodesic, g2: Geodesic,
             tol: float = DEFAULT_TOL) -> float:
    """Angle in ``(0, pi)`` between the oriented tangents of two lines at a common point."""
    for g in (g1, g2):
        if not on_geodesic(vertex, g, _scaled_tol(g, tol)):
            raise DegenerateError("vertex is not on both lines")
    ang = _angle_between(_unit_tangent(vertex, g1), _unit_tangent(vertex, g2))
    if ang < tol or ang > math.pi - tol:
        raise DegenerateError("degenerate angle")
    return ang


@dataclass(frozen=True)
class HTriangle:
    a: HalfPlanePoint
    b: HalfPlanePoint
    c: HalfPlanePoint
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        g = geodesic_through(self.a, self.b, self.tol)
        if abs(self.c.z - self.a.z) < self.tol or abs(self.c.z - self.b.z) < self.tol:
            raise DegenerateError("degenerate triangle: repeated vertex")
        if on_geodesic(self.c, g, _scaled_tol(g, self.tol)):
            raise DegenerateError("degenerate triangle: vertices on one line")


def triangle_angles(t: HTriangle) -> tuple[float, float, float]:
    """Interior angles at ``a``, ``b`` and ``c``."""
    out = []
    for v, p, q in ((t.a, t.b, t.c), (t.b, t.c, t.a), (t.c, t.a, t.b)):
        out.append(_angle_between(tangent_toward(v, p, t.tol), tangent_toward(v, q, t.tol)))
    return tuple(out)


def triangle_angle_sum(t: HTriangle) -> float:
    return math.fsum(triangle_angles(t))


def right_triangle(leg_a: float, leg_b: float) -> HTriangle:
    """Right triangle with legs of the given hyperbolic lengths.

    The right angle sits at ``i``; the other vertices are ``r i`` with
    ``r = e^leg_a`` and a point ``u + v i`` on the unit circle at distance
    ``leg_b`` from ``i``.
    """
    if not (leg_a > 0 and leg_b > 0):
        raise ValueError("legs must be positive")
    v = 1.0 / math.cosh(leg_b)
    u = math.tanh(leg_b)
    return HTriangle(HalfPlanePoint(complex(0.0, math.exp(leg_a))),
                     HalfPlanePoint(complex(u, v)),
                     HalfPlanePoint(1j))


def pythagoras_residual(r: float, u: float, v: float, tol: float = DEFAULT_TOL) -> float:
    """``|cosh c - cosh a cosh b|`` for the right triangle ``(r i, u + v i, i)``.

    Needs ``r > 1``, ``v > 0`` and ``u^2 + v^2 = 1``; the right angle is at ``i``.
    """
    if not r > 1:
        raise DomainError("pythagoras needs r > 1")
    if not v > 0:
        raise DomainError("pythagoras needs v > 0")
    if abs(u * u + v * v - 1.0) > tol:
        raise DomainError("pythagoras needs u^2 + v^2 = 1")
    a_pt = HalfPlanePoint(complex(0.0, r))
    b_pt = HalfPlanePoint(complex(u, v))
    c_pt = HalfPlanePoint(1j)
    ch_a = math.cosh(dist_half_plane(a_pt, c_pt))
    ch_b = math.cosh(dist_half_plane(b_pt, c_pt))
    ch_c = math.cosh(dist_half_plane(a_pt, b_pt))
    return abs(ch_c - ch_a * ch_b)


def _inside(p: HalfPlanePoint, g: Geodesic) -> bool:
    if isinstance(g, VerticalRay):
        return p.x < g.foot
    return abs(p.z - g.center) < g.radius


def segment_intersects_geodesic(a: HalfPlanePoint, b: HalfPlanePoint, g: Geodesic,
                                tol: float = DEFAULT_TOL) -> bool:
    """Whether line ``g`` crosses the segment ``ab``.

    Two lines meet at most once, so the segment is crossed exactly when one
    endpoint is inside the Euclidean disc of ``g`` (left of it, for a ray)
    and the other is not.
    """
    if abs(a.z - b.z) < tol:
        raise DegenerateError("degenerate pair: points coincide")
    st = _scaled_tol(g, tol)
    if on_geodesic(a, g, st) or on_geodesic(b, g, st):
        raise DegenerateError("endpoint on line")
    return _inside(a, g) != _inside(b, g)
