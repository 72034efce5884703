"""Numerical checks of half-plane geometry: angle defects and the Euclidean limit."""
import argparse
import math

import numpy as np

from archgeom.hyperbolic import (
    DegenerateError,
    HalfPlanePoint,
    HTriangle,
    dist_half_plane,
    right_triangle,
    triangle_angle_sum,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--n", type=int, default=10000, help="random triangles")
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)

    defects = []
    while len(defects) < args.n:
        pts = [HalfPlanePoint(complex(rng.uniform(-3, 3), rng.uniform(0.05, 4))) for _ in range(3)]
        try:
            defects.append(math.pi - triangle_angle_sum(HTriangle(*pts)))
        except DegenerateError:
            continue
    defects = np.array(defects)
    print(f"random triangles: {args.n}, min defect {defects.min():.3e}, "
          f"max defect {defects.max():.4f}, all positive: {bool((defects > 0).all())}")

    print()
    print(f"{'scale':>8} {'c^2':>12} {'a^2+b^2':>12} {'rel. defect':>12} {'ratio':>6}")
    prev = None
    for k in range(8):
        s = 0.4 / 2 ** k
        t = right_triangle(s, 0.75 * s)
        a, b = dist_half_plane(t.a, t.c), dist_half_plane(t.b, t.c)
        c = dist_half_plane(t.a, t.b)
        rel = abs(c * c - a * a - b * b) / (c * c)
        ratio = f"{prev / rel:6.3f}" if prev else ""
        print(f"{s:8.5f} {c * c:12.6e} {a * a + b * b:12.6e} {rel:12.4e} {ratio:>6}")
        prev = rel


if __name__ == "__main__":
    main()
