import json
import logging

import pytest

from main import build_parser, config_from_args, main
from utils.points_io import read_points

QUAD = "0 0\n4 0.5\n3 3\n-0.5 2\n"


@pytest.fixture
def points_file(tmp_path):
    def make(text: str, name: str = "pts.txt"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path
    return make


def test_compute_writes_image_and_stats(tmp_path, points_file):
    pts = points_file("# four sites\n0 0\n1 0\n\n0 1  # apex\n1.5 1.2\n")
    image = tmp_path / "out.ppm"
    code = main(["compute", str(pts), "--distance", "viewangle", "--mode", "furthest", "--grid", "32x24", "--output", str(image)])
    assert code == 0
    assert image.read_bytes().startswith(b"P6\n32 24\n255\n")
    stats = json.loads((tmp_path / "out.json").read_text(encoding="utf-8"))
    assert stats["spec"] == {"kind": "viewangle", "c": None}
    assert stats["mode"] == "furthest"
    assert stats["n"] == 4
    assert stats["grid"]["width"] == 32 and stats["grid"]["height"] == 24


def test_compute_is_identical_across_thread_counts(tmp_path, points_file):
    pts = points_file(QUAD)
    outputs = []
    for threads in ("1", "3"):
        image = tmp_path / f"t{threads}.ppm"
        stats = tmp_path / f"t{threads}.json"
        args = ["compute", str(pts), "--distance", "param-perimeter", "--c", "1", "--grid", "40x40",
                "--threads", threads, "--output", str(image), "--stats", str(stats)]
        assert main(args) == 0
        outputs.append((image.read_bytes(), stats.read_bytes()))
    assert outputs[0] == outputs[1]


def test_compute_warns_when_c_is_ignored(tmp_path, points_file, caplog):
    pts = points_file(QUAD)
    with caplog.at_level(logging.WARNING, logger="bisite"):
        code = main(["compute", str(pts), "--distance", "circumradius", "--c", "5", "--grid", "8x8", "--output", str(tmp_path / "c.ppm")])
    assert code == 0
    assert "ignored" in caplog.text


def test_compute_input_errors(tmp_path, points_file):
    out = str(tmp_path / "x.ppm")
    assert main(["compute", str(tmp_path / "missing.txt"), "--distance", "containing", "--output", out]) == 2
    assert main(["compute", str(points_file("1 2 3\n", "bad.txt")), "--distance", "containing", "--output", out]) == 2
    assert main(["compute", str(points_file("0 0\n1 1\n0 0\n", "dup.txt")), "--distance", "containing", "--output", out]) == 3
    # nearest containing-radius prunes by Delaunay edges, which collinear sites do not have
    collinear = points_file("0 0\n1 0\n2 0\n", "line.txt")
    assert main(["compute", str(collinear), "--distance", "containing", "--grid", "8x8", "--output", out]) == 3
    assert main(["compute", str(collinear), "--distance", "viewangle", "--mode", "furthest", "--grid", "8x8", "--output", out]) == 0


def test_compute_needs_distance(points_file):
    assert main(["compute", str(points_file(QUAD))]) == 2


def test_argument_errors():
    with pytest.raises(SystemExit) as exc:
        main(["compute", "pts.txt", "--grid", "12"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "no-such-check"])
    assert exc.value.code == 2
    assert main(["verify", "pc-limit", "--n", "1"]) == 2
    assert main(["verify", "pc-limit", "--bbox", "1,0,0,1"]) == 2
    assert main([]) == 2


def test_config_from_args_splits_grid():
    args = build_parser().parse_args(["compute", "p.txt", "--distance", "ccc-area", "--grid", "64x32", "--no-jitter"])
    config = config_from_args(args)
    assert (config.width, config.height) == (64, 32)
    assert config.jitter is False
    assert config.kind.value == "ccc-area"
    assert config.c is None


def test_show_config(capsys):
    assert main(["--show-config"]) == 0
    assert "BISITE_THREADS" in capsys.readouterr().out


def test_verify_ppcirc_collinear(capsys):
    assert main(["verify", "ppcirc-collinear", "--n", "3", "--grid", "96x64"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["theorem"] == "ppcirc-collinear"
    assert report["passed"] is True
    assert report["counts"]["consecutiveRegions"] == 2


def test_verify_delaunay_pruning(capsys):
    assert main(["verify", "delaunay-pruning", "--distance", "containing", "--n", "12", "--seed", "1", "--grid", "64x64"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["seed"] == 1
    assert report["n"] == 12


@pytest.mark.parametrize(
    "theorem", ["containing-closest-neighbor", "pc-minus1-segment-crossings", "ccc-furthest-line-crossings"]
)
def test_verify_point_checks(capsys, theorem):
    assert main(["verify", theorem, "--n", "7", "--seed", "2", "--grid", "16x16"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["theorem"] == theorem
    assert report["n"] == 7


def test_verify_precondition_exit_codes(points_file):
    square = points_file("0 0\n1 0\n1 1\n0 1\n")
    assert main(["verify", "pc-limit", "--input", str(square), "--grid", "16x16"]) == 4
    assert main(["verify", "delaunay-pruning", "--distance", "viewangle", "--n", "5", "--grid", "16x16"]) == 4
    assert main(["verify", "pc-minus1-segment-crossings", "--n", "3", "--grid", "16x16"]) == 4


def test_generate_two_line_file(tmp_path):
    out = tmp_path / "two.txt"
    assert main(["generate", "two-line", "--n", "8", "--seed", "1", "--output", str(out)]) == 0
    sites = read_points(out)
    assert len(sites) == 8
    assert sorted({s.y for s in sites}) == [0.0, 10.0]
    assert out.read_text(encoding="utf-8").startswith("# provenance=two-line n=8 seed=1")


def test_generate_to_stdout(capsys):
    assert main(["generate", "convex-position", "--n", "5", "--seed", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("# provenance=convex-position")
    assert len(lines) == 6


def test_generate_rejects_bad_parameters():
    assert main(["generate", "two-line", "--n", "3"]) == 2


def test_arrangement_command(tmp_path, points_file, capsys):
    out = tmp_path / "arr.svg"
    assert main(["arrangement", str(points_file(QUAD)), "--output", str(out)]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["hullVertices"] == 4
    assert summary["faces"] == 11
    assert summary["labeledFaces"] == 10
    assert summary["eulerCharacteristic"] == 2
    assert out.read_text(encoding="utf-8").startswith("<svg")


def test_bench(capsys):
    assert main(["bench", "--n", "6", "--grid", "16x16", "--repeats", "1", "--threads", "2"]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result["fullPairs"] == 15
    assert result["prunedPairs"] <= 3 * 6 - 6
    assert result["identicalAcrossThreads"] is True
    assert result["prunedEqualsFull"] is True
    assert set(result["threads"]) == {"1", "2"}
