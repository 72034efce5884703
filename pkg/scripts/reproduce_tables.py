"""Recompute the summary figures of the dimension tables and compare with the quoted ones."""
import argparse
import json

from archgeom.reference_tables import ALL_COLUMNS, QUOTED_CORRELATION, QUOTED_SUMMARY
from archgeom.stats import DimSeries, pearson, summarize


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true", help="print machine-readable output")
    args = ap.parse_args()

    rows = []
    for name, (q_mean, q_std) in QUOTED_SUMMARY.items():
        s = summarize(DimSeries(name, ALL_COLUMNS[name]))
        rows.append({"column": name, "mean": s.mean, "std": s.sample_std,
                     "quoted_mean": q_mean, "quoted_std": q_std})
    corr = []
    for (a, b), q in QUOTED_CORRELATION.items():
        r = pearson(DimSeries(a, ALL_COLUMNS[a]), DimSeries(b, ALL_COLUMNS[b]))
        corr.append({"a": a, "b": b, "r": r, "quoted_r": q})

    if args.json:
        print(json.dumps({"summary": rows, "correlation": corr}, indent=2, sort_keys=True))
        return
    print(f"{'column':<20} {'mean':>7} {'quoted':>7} {'std':>7} {'quoted':>7}")
    for r in rows:
        flag = "  <- quoted std does not follow" if abs(r["std"] - r["quoted_std"]) > 0.002 else ""
        print(f"{r['column']:<20} {r['mean']:7.4f} {r['quoted_mean']:7.3f} "
              f"{r['std']:7.4f} {r['quoted_std']:7.3f}{flag}")
    print()
    for c in corr:
        print(f"r({c['a']}, {c['b']}) = {c['r']:+.4f}  quoted {c['quoted_r']:+.3f}")


if __name__ == "__main__":
    main()
