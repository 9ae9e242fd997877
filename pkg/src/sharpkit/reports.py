"""Report serialization: versioned JSON and CSV side files.

JSON output is deterministic and byte-stable: keys keep insertion order
and floats are emitted with up to 17 significant digits (`%.17g`), which
round-trips doubles exactly.  Every top-level report carries
``"schema": "sharpkit/1"``.
"""

import csv
from contextlib import contextmanager

import numpy as np

from .errors import InternalError, SharpKitError

SCHEMA = "sharpkit/1"


@contextmanager
def _open_out(path_or_file):
    if hasattr(path_or_file, "write"):
        yield path_or_file
    else:
        with open(path_or_file, "w", newline="") as fh:
            yield fh

__all__ = [
    "SCHEMA",
    "to_json",
    "write_lorenz_csv",
    "write_mass_length_csv",
    "write_grid_csv",
    "write_kept_samples_csv",
    "read_ensemble_csv",
    "read_distributions_csv",
]


def _format_float(x: float) -> str:
    if not np.isfinite(x):
        raise InternalError(f"non-finite value {x} in report")
    text = format(float(x), ".17g")
    # Keep a numeric token that still reads as a float.
    if "." not in text and "e" not in text and "E" not in text:
        text += ".0"
    return text


def _encode(obj, pieces: list, indent: str, level: int, pretty: bool):
    pad = indent * (level + 1) if pretty else ""
    close_pad = indent * level if pretty else ""
    nl = "\n" if pretty else ""
    sep = "," + nl
    colon = ": " if pretty else ":"

    if isinstance(obj, dict):
        if not obj:
            pieces.append("{}")
            return
        pieces.append("{" + nl)
        for i, (key, value) in enumerate(obj.items()):
            if not isinstance(key, str):
                raise InternalError(f"non-string report key {key!r}")
            pieces.append(pad + _quote(key) + colon)
            _encode(value, pieces, indent, level + 1, pretty)
            pieces.append(sep if i < len(obj) - 1 else nl)
        pieces.append(close_pad + "}")
    elif isinstance(obj, (list, tuple, np.ndarray)):
        items = list(obj.tolist()) if isinstance(obj, np.ndarray) else list(obj)
        if not items:
            pieces.append("[]")
            return
        pieces.append("[" + nl)
        for i, value in enumerate(items):
            pieces.append(pad)
            _encode(value, pieces, indent, level + 1, pretty)
            pieces.append(sep if i < len(items) - 1 else nl)
        pieces.append(close_pad + "]")
    elif isinstance(obj, str):
        pieces.append(_quote(obj))
    elif isinstance(obj, bool) or isinstance(obj, np.bool_):
        pieces.append("true" if obj else "false")
    elif obj is None:
        pieces.append("null")
    elif isinstance(obj, (int, np.integer)):
        pieces.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        pieces.append(_format_float(float(obj)))
    else:
        raise InternalError(f"unserializable report value of type {type(obj).__name__}")


def _quote(text: str) -> str:
    out = text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n").replace("\t", "\\t")
    return f'"{out}"'


def to_json(report: dict, pretty: bool = False) -> str:
    """Serialize a report dict to a deterministic JSON string."""
    pieces: list = []
    _encode(report, pieces, "  ", 0, pretty)
    return "".join(pieces)


def write_lorenz_csv(curve, path) -> None:
    """Two-column CSV (u, L(u)) for figure reproduction."""
    with _open_out(path) as fh:
        writer = csv.writer(fh)
        writer.writerow(["u", "L"])
        for u, val in zip(curve.u_grid, curve.values):
            writer.writerow([_format_float(u), _format_float(val)])


def write_mass_length_csv(curve, path) -> None:
    """Columns t, mass, length, integrand at the rearranged midpoints."""
    with _open_out(path) as fh:
        writer = csv.writer(fh)
        writer.writerow(["t", "mass", "length", "integrand"])
        for row in zip(curve.t_grid, curve.mass, curve.length, curve.integrand):
            writer.writerow([_format_float(x) for x in row])


def write_grid_csv(reports, path) -> None:
    """Flat per-cell CSV for heatmap plotting."""
    with _open_out(path) as fh:
        writer = csv.writer(fh)
        writer.writerow(["row", "col", "sharpness", "lo", "hi", "n"])
        for rep in reports:
            writer.writerow(
                [
                    rep.row,
                    rep.col,
                    _format_float(rep.sharpness),
                    _format_float(rep.interval[0]),
                    _format_float(rep.interval[1]),
                    rep.member_count,
                ]
            )


def write_kept_samples_csv(extrema, path) -> None:
    """Kept level-set samples with their constrained and overlaid values."""
    rows = extrema.kept_samples
    if rows is None:
        rows = np.empty((0, extrema.min_distribution.size))
    n = rows.shape[1] if rows.size else extrema.min_distribution.size
    with _open_out(path) as fh:
        writer = csv.writer(fh)
        writer.writerow([f"p{i + 1}" for i in range(n)] + ["constrained", "score"])
        for i in range(rows.shape[0]):
            writer.writerow(
                [_format_float(x) for x in rows[i]]
                + [_format_float(extrema.kept_constrained[i]), _format_float(extrema.kept_scores[i])]
            )


def read_ensemble_csv(path):
    """Read `row,col,member,value` sample lines into a members mapping.

    Returns ``(rows, cols, cells)`` where ``cells[(r, c)]`` is the list of
    member values in file order.
    """
    cells: dict = {}
    max_row = -1
    max_col = -1
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        needed = {"row", "col", "member", "value"}
        if reader.fieldnames is None or not needed.issubset(set(reader.fieldnames)):
            raise SharpKitError(f"{path}: ensemble CSV needs header columns {sorted(needed)}")
        for lineno, line in enumerate(reader, start=2):
            try:
                r, c = int(line["row"]), int(line["col"])
                value = float(line["value"])
            except (TypeError, ValueError) as exc:
                raise SharpKitError(f"{path}:{lineno}: {exc}") from exc
            cells.setdefault((r, c), []).append(value)
            max_row = max(max_row, r)
            max_col = max(max_col, c)
    return max_row + 1, max_col + 1, cells


def read_distributions_csv(path):
    """Read one probability vector per CSV row (no header)."""
    rows = []
    with open(path, newline="") as fh:
        for lineno, line in enumerate(csv.reader(fh), start=1):
            entries = [cell for cell in line if cell.strip() != ""]
            if not entries:
                continue
            try:
                rows.append([float(cell) for cell in entries])
            except ValueError as exc:
                raise SharpKitError(f"{path}:{lineno}: {exc}") from exc
    return rows
