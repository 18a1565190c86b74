import json

import numpy as np
import pytest

import hullmap.cli as cli_mod
from hullmap.cli import main
from hullmap.errors import SearchFailedError
from hullmap.section import serialize_offsets
from hullmap.shapes import ellipse_section, heeled_rectangle, rectangle_section


@pytest.fixture()
def rect_file(tmp_path):
    path = tmp_path / "rect.txt"
    path.write_text(serialize_offsets(rectangle_section(41)))
    return path


@pytest.fixture()
def ellipse_file(tmp_path):
    path = tmp_path / "ellipse.txt"
    path.write_text(serialize_offsets(ellipse_section(41, breadth=4.0, draft=1.0)))
    return path


def run(*argv):
    return main([str(a) for a in argv])


def test_fit_writes_all_formats(rect_file, tmp_path, capsys):
    out = tmp_path / "out"
    code = run(
        "fit", "--input", rect_file, "--n", "8", "--sigma-e", "1e-3",
        "--out", out, "--emit", "json,csv,svg", "--no-timing",
    )
    assert code == 0
    assert "converged" in capsys.readouterr().out
    report = json.loads((out / "rect_fit.json").read_text())
    assert report["converged"] is True
    assert report["N_best"] == 8
    assert report["E_best"] < 1e-3
    assert report["wall_time_seconds"] == 0.0
    csv = (out / "rect_contour.csv").read_text().splitlines()
    assert csv[0] == "theta,x,y"
    assert len(csv) == 257
    svg = (out / "rect_plot.svg").read_text()
    assert svg.startswith("<svg")
    assert "polyline" in svg


def test_fit_is_deterministic_without_timing(rect_file, tmp_path):
    out_a, out_b = tmp_path / "a", tmp_path / "b"
    for out in (out_a, out_b):
        assert run(
            "fit", "--input", rect_file, "--n", "5", "--sigma-e", "1e-2",
            "--out", out, "--no-timing",
        ) == 0
    assert (out_a / "rect_fit.json").read_bytes() == (out_b / "rect_fit.json").read_bytes()


def test_fit_requires_an_order(rect_file, tmp_path, capsys):
    assert run("fit", "--input", rect_file, "--out", tmp_path) == 2
    assert "needs --n" in capsys.readouterr().err


def test_unknown_emit_format_is_a_usage_error(rect_file, tmp_path, capsys):
    code = run("fit", "--input", rect_file, "--n", "5", "--out", tmp_path, "--emit", "png")
    assert code == 2
    assert "unknown emit" in capsys.readouterr().err


def test_parse_failure_exits_three(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("symmetric\n0,1\nnot-a-pair\n")
    assert run("fit", "--input", bad, "--n", "5", "--out", tmp_path) == 3
    assert "parse" in capsys.readouterr().err


def test_missing_file_exits_three(tmp_path):
    assert run("fit", "--input", tmp_path / "absent.txt", "--n", "5", "--out", tmp_path) == 3


def test_lewis_mode_reports_the_seed(ellipse_file, tmp_path):
    out = tmp_path / "out"
    assert run("lewis", "--input", ellipse_file, "--out", out, "--emit", "json,svg") == 0
    payload = json.loads((out / "ellipse_lewis.json").read_text())
    assert payload["N"] == 2
    assert payload["area_matched"] is True
    assert payload["sigma_a"] == pytest.approx(
        0.5 * 4.0 / payload["F"], rel=1e-12
    )


def test_search_mode_emits_the_trace(ellipse_file, tmp_path):
    out = tmp_path / "out"
    assert run("search", "--input", ellipse_file, "--out", out, "--no-timing") == 0
    report = json.loads((out / "ellipse_search.json").read_text())
    assert report["per_N"]
    assert all(row["seconds"] == 0.0 for row in report["per_N"])
    assert report["nash_sutcliffe"]["ex"] > 0.997


def test_evaluate_accepts_a_fit_report(rect_file, tmp_path):
    out = tmp_path / "out"
    run("fit", "--input", rect_file, "--n", "5", "--out", out, "--no-timing")
    code = run("evaluate", "--input", out / "rect_fit.json", "--out", out, "--samples", "33")
    assert code == 0
    payload = json.loads((out / "rect_fit_evaluate.json").read_text())
    assert payload["samples"] == 33
    assert len(payload["contour"]) == 33


def test_evaluate_accepts_bare_coefficients(tmp_path):
    src = tmp_path / "coeffs.json"
    src.write_text(json.dumps({"F": 1.0, "a": [1.0], "symmetric": True}))
    assert run("evaluate", "--input", src, "--out", tmp_path, "--samples", "9") == 0
    payload = json.loads((tmp_path / "coeffs_evaluate.json").read_text())
    contour = np.array(payload["contour"])
    assert np.allclose(np.hypot(contour[:, 1], contour[:, 2]), 1.0, atol=1e-12)


def test_evaluate_rejects_malformed_json(tmp_path, capsys):
    src = tmp_path / "garbage.json"
    src.write_text("{]")
    assert run("evaluate", "--input", src, "--out", tmp_path) == 3


def test_asymmetric_fit_round_trip(tmp_path):
    path = tmp_path / "heeled.txt"
    path.write_text(serialize_offsets(heeled_rectangle(21)))
    out = tmp_path / "out"
    code = run(
        "fit", "--input", path, "--n", "12", "--sigma-e", "0.2", "--out", out, "--no-timing"
    )
    assert code == 0
    report = json.loads((out / "heeled_fit.json").read_text())
    assert report["symmetric"] is False
    assert report["converged"] is True


def test_search_failure_exits_five(rect_file, tmp_path, monkeypatch, capsys):
    def boom(section):
        raise SearchFailedError("no order converged")

    monkeypatch.setattr(cli_mod, "search_optimum", boom)
    assert run("search", "--input", rect_file, "--out", tmp_path) == 5
    assert "search" in capsys.readouterr().err


def test_diverged_fit_exits_four(rect_file, tmp_path, monkeypatch, capsys):
    real = cli_mod.fit_section

    def diverge(section, config, record_thetas=False):
        result = real(section, config, record_thetas)
        result.diverged = True
        return result

    monkeypatch.setattr(cli_mod, "fit_section", diverge)
    assert run("fit", "--input", rect_file, "--n", "5", "--out", tmp_path) == 4
    assert "diverged" in capsys.readouterr().err
