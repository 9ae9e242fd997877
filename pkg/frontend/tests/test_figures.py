"""Smoke tests: all four renderers produce non-empty deterministic images."""

import json
import subprocess
import sys

import pytest

import sharpkit_frontend as skf


@pytest.fixture(scope="module")
def fixture_reports(tmp_path_factory):
    """Render inputs produced by the primary CLI."""
    root = tmp_path_factory.mktemp("reports")
    lorenz = root / "lorenz.csv"
    ml = root / "mass_length.csv"
    grid = root / "grid.json"
    kept = root / "kept.csv"

    def cli(*argv):
        out = subprocess.run(
            [sys.executable, "-m", "sharpkit.cli", *argv], capture_output=True, text=True
        )
        assert out.returncode == 0, out.stderr
        return out.stdout

    cli(
        "density", "--preset", "gauss:mu=2.8,sigma=0.7", "--domain", "0:4",
        "--grid-cells", "400", "--lorenz-csv", str(lorenz), "--mass-length-csv", str(ml),
    )
    grid.write_text(cli("grid", "--demo-paper", "--seed", "7"))
    cli(
        "levelset", "--n", "3", "--constrain", "sharpness", "--target", "0.4", "--tol", "0.02",
        "--score", "entropy", "--samples", "50000", "--seed", "3",
        "--dump-kept", str(kept), "--dump-cap", "800",
    )
    return {"lorenz": lorenz, "mass_length": ml, "grid": grid, "kept": kept}


RENDERERS = {
    "lorenz": skf.render_lorenz,
    "mass_length": skf.render_mass_length,
    "grid": skf.render_grid_heatmap,
    "kept": skf.render_simplex_scatter,
}


@pytest.mark.parametrize("name", sorted(RENDERERS))
def test_renderer_nonempty_and_deterministic(fixture_reports, tmp_path, name):
    render = RENDERERS[name]
    first = tmp_path / f"{name}_a.png"
    second = tmp_path / f"{name}_b.png"
    render(fixture_reports[name], first)
    render(fixture_reports[name], second)
    assert first.stat().st_size > 1000
    assert first.read_bytes() == second.read_bytes()


def test_svg_output(fixture_reports, tmp_path):
    out = tmp_path / "lorenz.svg"
    skf.render_lorenz(fixture_reports["lorenz"], out)
    again = tmp_path / "lorenz2.svg"
    skf.render_lorenz(fixture_reports["lorenz"], again)
    assert out.stat().st_size > 1000
    assert out.read_bytes() == again.read_bytes()


def test_schema_version_rejected(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"schema": "sharpkit/999", "kind": "grid", "cells": []}))
    with pytest.raises(skf.SchemaVersionError):
        skf.render_grid_heatmap(bad, tmp_path / "x.png")


def test_wrong_header_rejected(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("a,b\n1,2\n")
    with pytest.raises(skf.SchemaVersionError):
        skf.render_lorenz(bad, tmp_path / "x.png")


def test_ternary_needs_three_outcomes(tmp_path):
    bad = tmp_path / "kept4.csv"
    bad.write_text("p1,p2,p3,p4,constrained,score\n0.25,0.25,0.25,0.25,1.0,0.0\n")
    with pytest.raises(skf.SchemaVersionError):
        skf.render_simplex_scatter(bad, tmp_path / "x.png")
