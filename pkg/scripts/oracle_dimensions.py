"""Box-counting dimensions of generated fractals against their analytic values.

Dyadic grids converge slowly on triadic constructions, so the error is shown
for a range of halving counts.
"""
import argparse
import time

from archgeom.boxcount import analyze
from archgeom.generators import GeneratorSpec, analytic_dimension, generate

CASES = [
    ("cantor_dust", 12, 3 ** 12, 17),
    ("koch_curve", 6, 3 ** 6, 9),
    ("sierpinski_triangle", 8, 2 ** 8, 8),
    ("sierpinski_carpet", 6, 3 ** 6, 9),
    ("filled_square", 0, 256, 8),
    ("line", 0, 256, 8),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--sweep", action="store_true", help="show every halving count from 4 up")
    args = ap.parse_args()

    print(f"{'kind':<20} {'halvings':>8} {'avg':>7} {'lsq':>7} {'exact':>7} {'err':>7} {'sec':>6}")
    for kind, level, size, halvings in CASES:
        img = generate(GeneratorSpec(kind, level, size))
        exact = analytic_dimension(kind)
        for h in (range(4, halvings + 1) if args.sweep else (halvings,)):
            t0 = time.perf_counter()
            rep = analyze(img, h, workers=args.workers)
            dt = time.perf_counter() - t0
            print(f"{kind:<20} {h:>8} {rep.average_dim:7.4f} {rep.lsq_dim:7.4f} "
                  f"{exact:7.4f} {rep.lsq_dim - exact:+7.4f} {dt:6.2f}")


if __name__ == "__main__":
    main()
