"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 input/parse error, 3 numeric/domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

from archgeom import __version__
from archgeom import hyperbolic as hyp
from archgeom.boxcount import DimensionReport, NoInkError, analyze
from archgeom.generators import GeneratorSpec, Kind, generate
from archgeom.image_io import PGMError, binarize, load_pgm, save_pgm, to_gray
from archgeom.plot import render_svg
from archgeom.stats import DimSeries, pearson, summarize

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def report_document(command: str, inputs: list[str], report) -> dict:
    return {"tool_version": __version__, "command": command, "inputs": list(inputs), "report": report}


def dumps(doc: dict) -> str:
    """Key-sorted JSON; serializing the parsed output again gives the same bytes."""
    return json.dumps(doc, sort_keys=True, indent=2, allow_nan=False) + "\n"


def _write_text(path, text: str) -> None:
    Path(path).write_bytes(text.encode("utf-8"))


def _num(x: float) -> str:
    x = 0.0 if x == 0 else x  # no "-0"
    if x == 0 or 1e-3 <= abs(x) < 1e15:
        return f"{x:.12f}"
    return f"{x:.12e}"


def _cplx(z: complex) -> str:
    im = 0.0 if z.imag == 0 else z.imag
    sign = "-" if im < 0 else "+"
    return f"{_num(z.real)} {sign} {_num(abs(im))}i"


# -- boxcount -----------------------------------------------------------------

def cmd_boxcount(args) -> int:
    try:
        gray = load_pgm(args.image)
    except OSError as exc:
        raise InputError(f"cannot read {args.image}: {exc.strerror or exc}") from exc
    threshold = args.threshold
    if threshold is not None and not 0 <= threshold <= gray.maxval:
        raise UsageError(f"--threshold must be in [0, {gray.maxval}]")
    img = binarize(gray, threshold)
    report = analyze(img, levels=args.levels, image_id=Path(args.image).name, workers=args.workers)

    if args.out:
        _write_text(args.out, dumps(report_document("boxcount", [args.image], report.to_dict())))
    if args.csv:
        _write_text(args.csv, boxcount_csv(report))

    print(f"image: {args.image}")
    print(f"{'large grid':>12} {'small grid':>12} {'dimension':>10}")
    for p in report.pairwise:
        print(f"{_delta_text(p.delta_large):>12} {_delta_text(p.delta_small):>12} {p.dim:>10.2f}")
    print(f"average fractal dimension  {report.average_dim:.3f}")
    print(f"least-squares dimension    {report.lsq_dim:.3f}")
    print(f"in preferred band [1.1, 1.5]: {'yes' if report.in_preferred_band else 'no'}")
    return EXIT_OK


def _delta_text(v: float) -> str:
    return f"{v:.5f}".rstrip("0").rstrip(".")


def boxcount_csv(report: DimensionReport) -> str:
    """One row per scale, largest first; ``pairwise_dim`` pairs a row with the next."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["delta", "count", "pairwise_dim"])
    recs = report.series.records
    for i, r in enumerate(recs):
        dim = repr(report.pairwise[i].dim) if i < len(report.pairwise) else ""
        w.writerow([repr(r.delta), r.count, dim])
    return buf.getvalue()


# -- generate -----------------------------------------------------------------

def _default_size(kind: Kind, level: int) -> int:
    if kind in (Kind.KOCH_CURVE, Kind.SIERPINSKI_CARPET, Kind.CANTOR_DUST):
        return 3 ** level
    if kind is Kind.SIERPINSKI_TRIANGLE:
        return 2 ** level
    return 64


def cmd_generate(args) -> int:
    kind = Kind(args.kind)
    size = args.size if args.size is not None else _default_size(kind, args.level)
    try:
        spec = GeneratorSpec(kind, args.level, size)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    img = generate(spec)
    save_pgm(args.out, to_gray(img), ascii=args.ascii)
    print(f"wrote {args.out}: {img.width}x{img.height}, {img.ink_count} ink pixels")
    return EXIT_OK


# -- hyp ----------------------------------------------------------------------

def _hp(x, y):
    return hyp.HalfPlanePoint(complex(x, y))


def _dp(x, y):
    return hyp.DiscPoint(complex(x, y))


def _geodesic_dict(g) -> dict:
    if isinstance(g, hyp.VerticalRay):
        return {"type": "vertical_ray", "foot": g.foot}
    return {"type": "semicircle", "center": g.center, "radius": g.radius}


def _geodesic_text(g) -> str:
    if isinstance(g, hyp.VerticalRay):
        return f"vertical ray, foot {_num(g.foot)}"
    return f"semicircle, center {_num(g.center)}, radius {_num(g.radius)}"


def cmd_hyp(args) -> int:
    sub = args.hyp_command
    a = args.values
    inputs: list[str] = []
    if sub == "dist-h":
        d = hyp.dist_half_plane_angle_form(_hp(a[0], a[1]), _hp(a[2], a[3]), hyp.HypConfig(c=args.c)) \
            if args.c != 1.0 else hyp.dist_half_plane(_hp(a[0], a[1]), _hp(a[2], a[3]))
        payload, lines = {"distance": d}, [_num(d)]
    elif sub == "dist-d":
        d = hyp.dist_disc(_dp(a[0], a[1]), _dp(a[2], a[3]))
        payload, lines = {"distance": d}, [_num(d)]
    elif sub == "to-disc":
        w = hyp.to_disc(_hp(a[0], a[1])).z
        payload, lines = {"re": w.real, "im": w.imag}, [_cplx(w)]
    elif sub == "to-half":
        w = hyp.to_half_plane(_dp(a[0], a[1])).z
        payload, lines = {"re": w.real, "im": w.imag}, [_cplx(w)]
    elif sub == "geodesic":
        g = hyp.geodesic_through(_hp(a[0], a[1]), _hp(a[2], a[3]))
        payload, lines = _geodesic_dict(g), [_geodesic_text(g)]
    elif sub == "parallels":
        if (args.ray is None) == (args.semicircle is None):
            raise UsageError("parallels needs exactly one of --ray FOOT or --semicircle CENTER RADIUS")
        g = hyp.VerticalRay(args.ray) if args.ray is not None else hyp.Semicircle(*args.semicircle)
        pair = hyp.limiting_parallels(g, _hp(a[0], a[1]))
        payload = {"line": _geodesic_dict(g), "parallels": [_geodesic_dict(p) for p in pair]}
        lines = [_geodesic_text(p) for p in pair]
    elif sub == "angle-sum":
        t = hyp.HTriangle(_hp(a[0], a[1]), _hp(a[2], a[3]), _hp(a[4], a[5]))
        angles = hyp.triangle_angles(t)
        total = math.fsum(angles)
        payload = {"angles": list(angles), "angle_sum": total, "defect": math.pi - total}
        lines = [f"angles {' '.join(_num(v) for v in angles)}", f"sum    {_num(total)}",
                 f"defect {_num(math.pi - total)}"]
    elif sub == "pythagoras":
        r, u, v = a
        res = hyp.pythagoras_residual(r, u, v)
        payload, lines = {"residual": res}, [_num(res)]
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown subcommand {sub}")

    payload = {"subcommand": sub, "args": list(a), **payload}
    if args.out:
        _write_text(args.out, dumps(report_document(f"hyp {sub}", inputs, payload)))
    print("\n".join(lines))
    return EXIT_OK


# -- stats --------------------------------------------------------------------

def read_table_csv(path) -> dict[str, list[float]]:
    """Numeric columns of a header-row CSV, in file order."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    rows = [row for row in csv.reader(io.StringIO(text)) if any(cell.strip() for cell in row)]
    if not rows:
        raise InputError(f"{path}: empty CSV")
    header = [h.strip() for h in rows[0]]
    if len(set(header)) != len(header) or not all(header):
        raise InputError(f"{path}: header must hold distinct non-empty column names")
    cols: dict[str, list[float]] = {h: [] for h in header}
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise InputError(f"{path}: row {lineno} has {len(row)} fields, expected {len(header)}")
        for col, (name, cell) in enumerate(zip(header, row), start=1):
            try:
                val = float(cell.strip())
            except ValueError:
                raise InputError(f"{path}: row {lineno}, column {col} ({name}): "
                                 f"not a number: {cell!r}") from None
            if not math.isfinite(val):
                raise InputError(f"{path}: row {lineno}, column {col} ({name}): non-finite value")
            cols[name].append(val)
    if len(rows) - 1 < 2:
        raise InputError(f"{path}: need at least two data rows")
    return cols


def _parse_pairs(spec: str | None, names) -> list[tuple[str, str]]:
    if not spec:
        return []
    pairs = []
    for chunk in spec.split(";"):
        parts = [p.strip() for p in chunk.split(",")]
        if len(parts) != 2 or not all(parts):
            raise UsageError(f"bad --pairs entry {chunk!r}, expected colA,colB")
        for p in parts:
            if p not in names:
                raise UsageError(f"--pairs names unknown column {p!r}")
        pairs.append((parts[0], parts[1]))
    return pairs


def cmd_stats(args) -> int:
    cols = read_table_csv(args.csv_path)
    pairs = _parse_pairs(args.pairs, cols)
    series = {name: DimSeries(name, vals) for name, vals in cols.items()}
    summary = {name: summarize(s) for name, s in series.items()}
    corr = [(a, b, pearson(series[a], series[b])) for a, b in pairs]

    report = {
        "columns": {name: {"mean": st.mean, "sample_std": st.sample_std, "n": st.n}
                    for name, st in summary.items()},
        "pearson": [{"a": a, "b": b, "r": r} for a, b, r in corr],
    }
    if args.out:
        _write_text(args.out, dumps(report_document("stats", [args.csv_path], report)))

    width = max(len("column"), *(len(n) for n in summary))
    print(f"{'column':<{width}}  {'n':>3}  {'mean':>6}  {'std':>6}")
    for name, st in summary.items():
        print(f"{name:<{width}}  {st.n:>3}  {st.mean:>6.3f}  {st.sample_std:>6.3f}")
    for a, b, r in corr:
        print(f"pearson({a}, {b}) = {r:.3f}")
    return EXIT_OK


# -- plot ---------------------------------------------------------------------

def cmd_plot(args) -> int:
    try:
        doc = json.loads(Path(args.report_path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {args.report_path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{args.report_path}: invalid report: {exc}") from exc
    try:
        body = doc["report"] if "report" in doc else doc
        if len(body["records"]) < 2:
            raise InputError(f"{args.report_path}: need at least two records to plot")
        report = DimensionReport.from_dict(body)
    except (KeyError, TypeError) as exc:
        raise InputError(f"{args.report_path}: not a box-count report") from exc
    _write_text(args.svg_out, render_svg(report.series))
    print(f"wrote {args.svg_out}: slope = {report.lsq_dim:.3f}")
    return EXIT_OK


# -- wiring -------------------------------------------------------------------

_HYP_ARITY = {"dist-h": 4, "dist-d": 4, "to-disc": 2, "to-half": 2, "geodesic": 4,
              "parallels": 2, "angle-sum": 6, "pythagoras": 3}

_HYP_HELP = {
    "dist-h": "half-plane distance: X1 Y1 X2 Y2",
    "dist-d": "disc distance: X1 Y1 X2 Y2",
    "to-disc": "map a half-plane point X Y into the disc",
    "to-half": "map a disc point X Y into the half-plane",
    "geodesic": "line through X1 Y1 X2 Y2",
    "parallels": "limiting parallels through X Y to --ray or --semicircle",
    "angle-sum": "angles of the triangle X1 Y1 X2 Y2 X3 Y3",
    "pythagoras": "residual |ch c - ch a ch b| for vertices r*i, u+v*i, i: R U V",
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="archgeom", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"archgeom {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("boxcount", help="box-counting dimension of a PGM drawing")
    b.add_argument("image")
    b.add_argument("--threshold", type=int, default=None,
                   help="pixels darker than this are ink (default 128 for 8-bit images)")
    b.add_argument("--levels", type=int, default=4, help="number of grid scales (default 4)")
    b.add_argument("--out", help="write the JSON report here")
    b.add_argument("--csv", help="write delta,count,pairwise_dim rows here")
    b.add_argument("--workers", type=int, default=1, help="threads for box counting")
    b.set_defaults(func=cmd_boxcount)

    g = sub.add_parser("generate", help="rasterize a reference fractal to PGM")
    g.add_argument("kind", choices=[k.value for k in Kind])
    g.add_argument("--level", type=int, default=0)
    g.add_argument("--size", type=int, default=None,
                   help="canvas edge in pixels (default: the smallest alias-free size)")
    g.add_argument("--out", required=True)
    g.add_argument("--ascii", action="store_true", help="write plain P2 instead of binary P5")
    g.set_defaults(func=cmd_generate)

    h = sub.add_parser("hyp", help="hyperbolic-geometry calculations")
    hs = h.add_subparsers(dest="hyp_command", required=True, parser_class=_Parser)
    for name, arity in _HYP_ARITY.items():
        hp = hs.add_parser(name, help=_HYP_HELP[name])
        hp.add_argument("values", nargs=arity, type=float, metavar="N")
        hp.add_argument("--out", help="write the JSON report here")
        if name == "dist-h":
            hp.add_argument("--c", type=float, default=1.0, help="distance scale constant")
        if name == "parallels":
            hp.add_argument("--ray", type=float, metavar="FOOT")
            hp.add_argument("--semicircle", type=float, nargs=2, metavar=("CENTER", "RADIUS"))
        hp.set_defaults(func=cmd_hyp)

    s = sub.add_parser("stats", help="mean, std and correlations of CSV columns")
    s.add_argument("csv_path")
    s.add_argument("--pairs", help="columns to correlate, e.g. 'facade,plan;a,b'")
    s.add_argument("--out", help="write the JSON report here")
    s.set_defaults(func=cmd_stats)

    pl = sub.add_parser("plot", help="SVG log-log plot of a boxcount report")
    pl.add_argument("report_path")
    pl.add_argument("svg_out")
    pl.set_defaults(func=cmd_plot)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "c", 1.0) <= 0:
            raise UsageError("--c must be positive")
        if getattr(args, "levels", 2) < 2:
            raise UsageError("--levels must be at least 2")
        if getattr(args, "workers", 1) < 1:
            raise UsageError("--workers must be at least 1")
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (InputError, PGMError, NoInkError) as exc:
        print(f"archgeom: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (hyp.DomainError, hyp.DegenerateError, ValueError, ArithmeticError) as exc:
        print(f"archgeom: domain error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
