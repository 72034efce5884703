import json
import math

import numpy as np
import pytest

from archgeom.boxcount import DimensionReport
from archgeom.cli import dumps, main
from archgeom.generators import GeneratorSpec, generate
from archgeom.image_io import GrayImage, binarize, load_pgm, save_pgm
from archgeom.reference_tables import MEDIEVAL, MODERN


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def gen(tmp_path, kind, level, size=None, name=None):
    path = tmp_path / (name or f"{kind}_{level}.pgm")
    argv = ["generate", kind, "--level", str(level), "--out", str(path)]
    if size is not None:
        argv += ["--size", str(size)]
    assert main(argv) == 0
    return path


def write_csv(path, cols):
    names = list(cols)
    rows = [",".join(names)] + [",".join(repr(v) for v in vals) for vals in zip(*cols.values())]
    path.write_text("\n".join(rows) + "\n")
    return path


# -- hyp

@pytest.mark.parametrize(
    "argv, expected",
    [
        (["dist-h", "0", "1", "0", "2"], "0.693147180560"),
        (["dist-d", "0", "0", "0", "0.5"], "1.098612288668"),
        (["to-disc", "0", "1"], "0.000000000000 + 0.000000000000i"),
        (["to-disc", "0", "2"], "0.333333333333 + 0.000000000000i"),
        (["to-half", "0", "0"], "0.000000000000 + 1.000000000000i"),
        (["geodesic", "0", "1", "0", "2"], "vertical ray, foot 0.000000000000"),
        (["geodesic", "-1", "1", "1", "1"], "semicircle, center 0.000000000000, radius 1.414213562373"),
        (["pythagoras", "2", "0.6", "0.8"], "0.000000000000"),
    ],
)
def test_hyp_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, "hyp", *argv)
    assert code == 0
    assert out.strip() == expected


def test_hyp_parallels(capsys):
    code, out, _ = run(capsys, "hyp", "parallels", "1", "1", "--ray", "0")
    assert code == 0
    assert out.splitlines() == ["vertical ray, foot 1.000000000000",
                                "semicircle, center 1.000000000000, radius 1.000000000000"]
    assert run(capsys, "hyp", "parallels", "1", "1")[0] == 1


def test_hyp_angle_sum_and_report(capsys, tmp_path):
    out_path = tmp_path / "t.json"
    code, out, _ = run(capsys, "hyp", "angle-sum", "0", "1", "1", "2", "-1", "3", "--out", str(out_path))
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc["command"] == "hyp angle-sum"
    assert doc["report"]["angle_sum"] < math.pi
    assert doc["report"]["defect"] == pytest.approx(math.pi - sum(doc["report"]["angles"]))


def test_hyp_dist_h_with_scale(capsys):
    code, out, _ = run(capsys, "hyp", "dist-h", "0", "1", "0", "2", "--c", "3")
    assert code == 0 and float(out) == pytest.approx(3 * math.log(2), abs=1e-11)
    assert run(capsys, "hyp", "dist-h", "0", "1", "0", "2", "--c", "0")[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["dist-h", "0", "0", "0", "2"],
        ["dist-h", "0", "-1", "0", "2"],
        ["dist-d", "1", "0", "0", "0"],
        ["to-half", "0.6", "0.8"],
        ["geodesic", "0", "1", "0", "1"],
        ["angle-sum", "0", "1", "0", "2", "0", "3"],
        ["pythagoras", "0.5", "0.6", "0.8"],
    ],
)
def test_hyp_domain_errors(capsys, argv):
    code, out, err = run(capsys, "hyp", *argv)
    assert code == 3
    assert err.strip() and not out


def test_usage_errors(capsys):
    assert run(capsys, "hyp", "dist-h", "0", "1")[0] == 1
    assert run(capsys, "hyp", "dist-h", "a", "1", "0", "2")[0] == 1
    assert run(capsys, "nosuch")[0] == 1
    assert run(capsys)[0] == 1
    assert run(capsys, "generate", "koch_curve", "--level", "3", "--size", "5", "--out", "x.pgm")[0] == 1


# -- generate

def test_generate_examples(capsys, tmp_path):
    p = gen(tmp_path, "cantor_dust", 2, 9)
    img = load_pgm(p)
    assert (img.width, img.height) == (9, 1)
    assert binarize(img).ink_count == 4
    sq = load_pgm(gen(tmp_path, "filled_square", 0, 64))
    assert (sq.pixels == 0).all() and sq.width == 64
    k0 = binarize(load_pgm(gen(tmp_path, "koch_curve", 0, 27)))
    assert k0.bits.any(axis=1).sum() == 1 and k0.ink_count == 27


@pytest.mark.parametrize("kind, level", [("koch_curve", 3), ("sierpinski_carpet", 3),
                                         ("sierpinski_triangle", 5), ("line", 0)])
def test_generate_matches_library(tmp_path, kind, level):
    img = binarize(load_pgm(gen(tmp_path, kind, level)))
    spec = GeneratorSpec(kind, level, img.width)
    assert img == generate(spec)


def test_generate_ascii(tmp_path):
    p = tmp_path / "c.pgm"
    assert main(["generate", "cantor_dust", "--level", "2", "--out", str(p), "--ascii"]) == 0
    assert p.read_bytes() == b"P2\n9 1\n255\n0 255 0 255 255 255 0 255 0\n"


# -- boxcount

def test_boxcount_examples(capsys, tmp_path):
    for kind, level, target, tol in [("filled_square", 0, 2.0, 1e-12),
                                     ("sierpinski_triangle", 6, 1.585, 0.05),
                                     ("line", 0, 1.0, 0.02)]:
        out = tmp_path / f"{kind}.json"
        code, text, _ = run(capsys, "boxcount", str(gen(tmp_path, kind, level)), "--out", str(out))
        assert code == 0
        assert "average fractal dimension" in text
        rep = json.loads(out.read_text())["report"]
        assert abs(rep["average_dim"] - target) <= tol


def test_boxcount_csv_and_human_table(capsys, tmp_path):
    img = gen(tmp_path, "sierpinski_triangle", 6)
    csv_path = tmp_path / "s.csv"
    code, text, _ = run(capsys, "boxcount", str(img), "--csv", str(csv_path))
    assert code == 0
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "delta,count,pairwise_dim"
    assert len(lines) == 5
    assert lines[1].startswith("64.0,1,")
    assert lines[-1].endswith(",")
    dims = [float(l.split(",")[2]) for l in lines[1:-1]]
    assert dims == pytest.approx([math.log2(3)] * 3)
    lines = text.splitlines()
    head = next(i for i, l in enumerate(lines) if "large grid" in l)
    rows = [l.split() for l in lines[head + 1:head + 4]]
    assert rows[0] == ["64", "32", "1.58"]
    assert rows[-1] == ["16", "8", "1.58"]


def test_boxcount_threshold(capsys, tmp_path):
    p = tmp_path / "g.pgm"
    p.write_bytes(b"P2\n4 1\n255\n10 100 200 250\n")
    out = tmp_path / "r.json"
    assert run(capsys, "boxcount", str(p), "--threshold", "150", "--levels", "2", "--out", str(out))[0] == 0
    recs = json.loads(out.read_text())["report"]["records"]
    assert recs[0] == {"delta": 2.0, "count": 1}
    assert run(capsys, "boxcount", str(p), "--threshold", "300")[0] == 1
    assert run(capsys, "boxcount", str(p), "--threshold", "5")[0] == 2  # nothing darker than 5


def test_boxcount_input_errors(capsys, tmp_path):
    code, _, err = run(capsys, "boxcount", str(tmp_path / "missing.pgm"))
    assert code == 2 and "missing.pgm" in err
    bad = tmp_path / "bad.pgm"
    bad.write_bytes(b"P5\n4 4\n255\n" + bytes(3))
    assert run(capsys, "boxcount", str(bad))[0] == 2
    blank = tmp_path / "blank.pgm"
    save_pgm(blank, GrayImage(np.full((8, 8), 255), 255))
    code, _, err = run(capsys, "boxcount", str(blank))
    assert code == 2 and "no ink" in err
    assert run(capsys, "boxcount", str(bad), "--levels", "1")[0] == 1


def test_boxcount_deterministic_across_runs_and_workers(capsys, tmp_path):
    img = gen(tmp_path, "sierpinski_carpet", 5)
    blobs = set()
    for w in ("1", "1", "4"):
        out = tmp_path / f"r{w}.json"
        assert run(capsys, "boxcount", str(img), "--levels", "6", "--workers", w, "--out", str(out))[0] == 0
        blobs.add(out.read_bytes())
    assert len(blobs) == 1
    blob = blobs.pop()
    assert dumps(json.loads(blob)).encode() == blob


# -- stats

def test_stats_hripsime(capsys, tmp_path):
    csv_path = write_csv(tmp_path / "h.csv", {"facade": MEDIEVAL["hripsime_facade"],
                                              "plan": MEDIEVAL["hripsime_plan"]})
    out = tmp_path / "h.json"
    code, text, _ = run(capsys, "stats", str(csv_path), "--pairs", "facade,plan", "--out", str(out))
    assert code == 0
    rep = json.loads(out.read_text())["report"]
    assert rep["columns"]["facade"]["mean"] == pytest.approx(1.48, abs=5e-4)
    assert rep["columns"]["facade"]["sample_std"] == pytest.approx(0.014, abs=2e-3)
    assert rep["columns"]["plan"]["mean"] == pytest.approx(1.58, abs=5e-4)
    assert rep["columns"]["plan"]["sample_std"] == pytest.approx(0.113, abs=2e-3)
    assert rep["pearson"][0]["r"] == pytest.approx(-0.997, abs=2e-3)
    assert "pearson(facade, plan) = -0.997" in text


def test_stats_cascade_and_identical(capsys, tmp_path):
    vals = MODERN["cascade"]
    csv_path = write_csv(tmp_path / "c.csv", {"a": vals, "b": vals})
    out = tmp_path / "c.json"
    assert run(capsys, "stats", str(csv_path), "--pairs", "a,b", "--out", str(out))[0] == 0
    rep = json.loads(out.read_text())["report"]
    assert rep["columns"]["a"]["mean"] == pytest.approx(1.455, abs=5e-4)
    assert rep["columns"]["a"]["sample_std"] == pytest.approx(0.058, abs=2e-3)
    assert rep["pearson"][0]["r"] == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize(
    "text, where",
    [
        ("a,b\n1,2\n3\n4,5\n", "row 3"),
        ("a,b\n1,2\n3,x\n", "row 3, column 2"),
        ("a,b\n1,2\n", "two data rows"),
        ("a,a\n1,2\n3,4\n", "distinct"),
        ("a\n1\ninf\n", "row 3, column 1"),
    ],
)
def test_stats_input_errors(capsys, tmp_path, text, where):
    p = tmp_path / "bad.csv"
    p.write_text(text)
    code, _, err = run(capsys, "stats", str(p))
    assert code == 2
    assert where in err


def test_stats_numeric_and_usage_errors(capsys, tmp_path):
    p = write_csv(tmp_path / "k.csv", {"a": [1.0, 1.0, 1.0], "b": [1.0, 2.0, 3.0]})
    assert run(capsys, "stats", str(p), "--pairs", "a,b")[0] == 3
    assert run(capsys, "stats", str(p), "--pairs", "a,zz")[0] == 1
    assert run(capsys, "stats", str(tmp_path / "none.csv"))[0] == 2


# -- plot

def _report(capsys, tmp_path, kind, level, levels):
    img = gen(tmp_path, kind, level)
    out = tmp_path / f"{kind}.json"
    assert run(capsys, "boxcount", str(img), "--levels", str(levels), "--out", str(out))[0] == 0
    return out


def test_plot_slope_labels(capsys, tmp_path):
    sq = _report(capsys, tmp_path, "filled_square", 0, 4)
    svg = tmp_path / "sq.svg"
    code, text, _ = run(capsys, "plot", str(sq), str(svg))
    assert code == 0
    assert "slope = 2.000" in svg.read_text()

    koch = _report(capsys, tmp_path, "koch_curve", 6, 9)
    svg = tmp_path / "k.svg"
    assert run(capsys, "plot", str(koch), str(svg))[0] == 0
    body = svg.read_text()
    slope = float(body.split("slope = ")[1][:5])
    assert abs(slope - 1.262) <= 0.05
    assert body.startswith("<svg") or body.startswith("<?xml")
    assert 'viewBox="0 0 640 480"' in body


def test_plot_is_byte_identical(capsys, tmp_path):
    rep = _report(capsys, tmp_path, "sierpinski_triangle", 6, 5)
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    run(capsys, "plot", str(rep), str(a))
    run(capsys, "plot", str(rep), str(b))
    assert a.read_bytes() == b.read_bytes()


def test_plot_errors(capsys, tmp_path):
    rep = _report(capsys, tmp_path, "filled_square", 0, 2)
    doc = json.loads(rep.read_text())
    doc["report"]["records"] = doc["report"]["records"][:1]
    rep.write_text(json.dumps(doc))
    code, _, err = run(capsys, "plot", str(rep), str(tmp_path / "x.svg"))
    assert code == 2 and "two records" in err
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert run(capsys, "plot", str(junk), str(tmp_path / "x.svg"))[0] == 2
    junk.write_text('{"a": 1}')
    assert run(capsys, "plot", str(junk), str(tmp_path / "x.svg"))[0] == 2


def test_report_round_trip(capsys, tmp_path):
    rep_path = _report(capsys, tmp_path, "koch_curve", 4, 5)
    doc = json.loads(rep_path.read_text())
    rep = DimensionReport.from_dict(doc["report"])
    assert dumps({**doc, "report": rep.to_dict()}).encode() == rep_path.read_bytes()
