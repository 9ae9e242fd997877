"""Deterministic figure renderers for sharpkit report files.

Each renderer reads a serialized report produced by the `sharpkit` CLI
(versioned JSON or one of its CSV side files) and writes a fixed-size
image; nothing is recomputed here.  Rendering the same input twice gives
byte-identical files.  PNG and SVG are supported by output extension.
"""

import csv
import json

import matplotlib

matplotlib.use("Agg")
# Fixed salt keeps SVG element ids stable across runs.
matplotlib.rcParams["svg.hashsalt"] = "sharpkit"

import matplotlib.pyplot as plt
import numpy as np

from sharpkit.errors import SharpKitError
from sharpkit.reports import SCHEMA

__all__ = [
    "SchemaVersionError",
    "render_lorenz",
    "render_mass_length",
    "render_grid_heatmap",
    "render_simplex_scatter",
]

FIGSIZE = (6.4, 4.8)
DPI = 120


class SchemaVersionError(SharpKitError):
    """Report file carries an unknown or missing schema version."""


def _save(fig, out_path) -> None:
    path = str(out_path)
    metadata = {"Date": None} if path.endswith(".svg") else None
    fig.savefig(path, dpi=DPI, metadata=metadata)
    plt.close(fig)


def _read_csv_columns(path, expected_header) -> np.ndarray:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0][: len(expected_header)] != list(expected_header):
        raise SchemaVersionError(f"{path}: expected header {expected_header}, got {rows[0] if rows else 'empty file'}")
    return np.array([[float(x) for x in row] for row in rows[1:]])


def _load_report(path, kind) -> dict:
    with open(path) as fh:
        payload = json.load(fh)
    if payload.get("schema") != SCHEMA:
        raise SchemaVersionError(f"{path}: schema {payload.get('schema')!r}, expected {SCHEMA!r}")
    if kind is not None and payload.get("kind") != kind:
        raise SchemaVersionError(f"{path}: kind {payload.get('kind')!r}, expected {kind!r}")
    return payload


def render_lorenz(csv_path, out_path) -> None:
    """Lorenz curve against the uniform diagonal."""
    data = _read_csv_columns(csv_path, ("u", "L"))
    fig, ax = plt.subplots(figsize=FIGSIZE)
    ax.plot([0, 1], [0, 1], linestyle="--", color="gray", linewidth=1, label="uniform")
    ax.plot(data[:, 0], data[:, 1], color="#1f5fa8", linewidth=2, label="mass share")
    ax.fill_between(data[:, 0], data[:, 1], data[:, 0], color="#1f5fa8", alpha=0.15)
    ax.set_xlabel("u (fraction of rearranged domain)")
    ax.set_ylabel("cumulative mass share")
    ax.set_xlim(0, 1)
    ax.set_ylim(0, 1.02)
    ax.legend(loc="upper left")
    ax.set_title("Lorenz representation of sharpness")
    _save(fig, out_path)


def render_mass_length(csv_path, out_path) -> None:
    """Remaining mass vs value-length curves; the gap is the score."""
    data = _read_csv_columns(csv_path, ("t", "mass", "length", "integrand"))
    t, mass, integrand = data[:, 0], data[:, 1], data[:, 3]
    value_length = mass - integrand
    fig, ax = plt.subplots(figsize=FIGSIZE)
    ax.plot(t, mass, color="#e8a000", linewidth=2, label="m(t)")
    ax.plot(t, value_length, color="#d6561f", linewidth=2, label="value x length")
    ax.fill_between(t, value_length, mass, color="#e8a000", alpha=0.2)
    ax.set_xlabel("t (rearranged domain)")
    ax.set_ylabel("curve value")
    ax.legend(loc="upper right")
    ax.set_title("Mass-length decomposition")
    _save(fig, out_path)


def render_grid_heatmap(json_path, out_path) -> None:
    """Annotated per-cell sharpness heatmap from a grid report."""
    payload = _load_report(json_path, "grid")
    cells = payload["cells"]
    rows = max(c["row"] for c in cells) + 1
    cols = max(c["col"] for c in cells) + 1
    scores = np.full((rows, cols), np.nan)
    for c in cells:
        scores[c["row"], c["col"]] = c["sharpness"]
    fig, ax = plt.subplots(figsize=FIGSIZE)
    image = ax.imshow(scores, cmap="viridis", vmin=0.0, vmax=1.0)
    for c in cells:
        lo, hi = c["interval"]
        ax.text(
            c["col"],
            c["row"],
            f"{c['sharpness']:.2f}\n[{lo:.1f},{hi:.1f}]",
            ha="center",
            va="center",
            fontsize=6,
            color="white",
        )
    ax.set_xticks(range(cols))
    ax.set_yticks(range(rows))
    ax.set_xlabel("column")
    ax.set_ylabel("row")
    fig.colorbar(image, ax=ax, label="sharpness")
    ax.set_title("Ensemble sharpness map (cell: S, 90% interval)")
    _save(fig, out_path)


def render_simplex_scatter(csv_path, out_path) -> None:
    """Ternary scatter of kept three-outcome level-set samples."""
    with open(csv_path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0][:3] != ["p1", "p2", "p3"] or "score" not in rows[0]:
        raise SchemaVersionError(f"{csv_path}: expected kept-samples header p1,p2,p3,...,score")
    if len(rows[0]) != 5:
        raise SchemaVersionError(f"{csv_path}: ternary scatter needs exactly 3 outcomes")
    data = np.array([[float(x) for x in row] for row in rows[1:]])
    p = data[:, :3]
    score = data[:, 4]
    # Barycentric embedding: vertices at (0,0), (1,0), (1/2, sqrt(3)/2).
    x = p[:, 1] + 0.5 * p[:, 2]
    y = (np.sqrt(3.0) / 2.0) * p[:, 2]
    fig, ax = plt.subplots(figsize=(6.4, 5.6))
    triangle = np.array([[0.0, 0.0], [1.0, 0.0], [0.5, np.sqrt(3.0) / 2.0], [0.0, 0.0]])
    ax.plot(triangle[:, 0], triangle[:, 1], color="black", linewidth=1)
    pts = ax.scatter(x, y, c=score, s=4, cmap="plasma", linewidths=0)
    for label, (vx, vy, ha, va) in {
        "outcome 1": (0.0, -0.03, "center", "top"),
        "outcome 2": (1.0, -0.03, "center", "top"),
        "outcome 3": (0.5, np.sqrt(3.0) / 2.0 + 0.02, "center", "bottom"),
    }.items():
        ax.text(vx, vy, label, ha=ha, va=va, fontsize=8)
    ax.set_aspect("equal")
    ax.set_axis_off()
    fig.colorbar(pts, ax=ax, label="overlaid score", shrink=0.8)
    ax.set_title("Level-set samples on the 2-simplex")
    _save(fig, out_path)
