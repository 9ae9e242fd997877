"""Batch command-line front end.

Parses inputs, dispatches to the library, and emits machine-parseable
JSON (default) or CSV reports.  Exit codes: 0 ok, 2 input error, 3
internal invariant violation.
"""

import argparse
import sys

import numpy as np

from . import reproduce
from .companions import (
    entropy_continuous,
    entropy_discrete,
    kl_from_uniform_continuous,
    kl_from_uniform_discrete,
    variance_discrete,
)
from .continuous import sharpness_integral, sharpness_simplified
from .core import (
    DEFAULT_GRID_CELLS,
    BoundedDomain,
    GriddedDensity,
    mass_length,
    rearrange,
    validate_distribution,
)
from .diagnostics import diagnostics_report, support_boundary
from .discrete import sharpness_cumulative, sharpness_discrete, tvd_sharpness
from .ensemble import EnsembleGrid, density_from_samples, grid_sharpness_map, rainfall_demo_grid
from .errors import InternalError, SharpKitError
from .gini import lorenz, sharpness_gini
from .levelset import LevelSetQuery, level_set_extrema, sharpness_rows
from .presets import gaussian_density, gaussian_mixture_density, piecewise_density, uniform_density
from .reports import (
    SCHEMA,
    read_distributions_csv,
    read_ensemble_csv,
    to_json,
    write_grid_csv,
    write_kept_samples_csv,
    write_lorenz_csv,
    write_mass_length_csv,
)
from .transforms import continuous_forward, continuous_inverse, discrete_forward, discrete_inverse


def _parse_floats(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise SharpKitError(f"could not parse number list {text!r}: {exc}") from exc


def _parse_domain(text: str) -> BoundedDomain:
    parts = text.split(":")
    if len(parts) != 2:
        raise SharpKitError(f"domain must look like lo:hi, got {text!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise SharpKitError(f"could not parse domain {text!r}: {exc}") from exc
    return BoundedDomain.interval(lo, hi)


def _parse_kv(body: str, spec: str) -> dict[str, float]:
    out: dict[str, float] = {}
    for part in body.split(","):
        if part.strip() == "":
            continue
        if "=" not in part:
            raise SharpKitError(f"expected key=value in preset {spec!r}, got {part!r}")
        key, _, raw = part.partition("=")
        try:
            out[key.strip()] = float(raw)
        except ValueError as exc:
            raise SharpKitError(f"preset {spec!r}: {exc}") from exc
    return out


def build_preset_density(spec: str, domain: BoundedDomain, n_cells: int) -> GriddedDensity:
    """Build a density from a preset string.

    Grammar: ``uniform``; ``gauss:mu=2.8,sigma=1``;
    ``mix:w1=0.5,mu1=1.2,sigma1=0.3,w2=0.5,mu2=3.0,sigma2=0.4``
    (alias ``gauss-mixture``, w2 defaults to 1 - w1);
    ``piecewise:0=0,2=0.5`` (breakpoint=level pairs, last block runs to
    the domain's upper bound).
    """
    name, _, body = spec.partition(":")
    name = name.strip().lower()
    if name == "uniform":
        return uniform_density(domain, n_cells)
    if name == "gauss":
        kv = _parse_kv(body, spec)
        try:
            return gaussian_density(domain, kv.pop("mu"), kv.pop("sigma"), n_cells)
        except KeyError as exc:
            raise SharpKitError(f"preset {spec!r} needs mu and sigma") from exc
    if name in ("mix", "gauss-mixture"):
        kv = _parse_kv(body, spec)
        try:
            w1 = kv.get("w1", 0.5)
            w2 = kv.get("w2", 1.0 - w1)
            comps = [(w1, kv["mu1"], kv["sigma1"]), (w2, kv["mu2"], kv["sigma2"])]
        except KeyError as exc:
            raise SharpKitError(f"preset {spec!r} needs mu1/sigma1/mu2/sigma2") from exc
        return gaussian_mixture_density(domain, comps, n_cells)
    if name == "piecewise":
        pairs = []
        for part in body.split(","):
            if part.strip() == "":
                continue
            if "=" not in part:
                raise SharpKitError(f"piecewise preset wants breakpoint=level pairs, got {part!r}")
            b, _, v = part.partition("=")
            try:
                pairs.append((float(b), float(v)))
            except ValueError as exc:
                raise SharpKitError(f"preset {spec!r}: {exc}") from exc
        if not pairs:
            raise SharpKitError(f"piecewise preset {spec!r} has no blocks")
        return piecewise_density(domain, [b for b, _ in pairs], [v for _, v in pairs], n_cells)
    raise SharpKitError(f"unknown preset {name!r} (uniform, gauss, mix, gauss-mixture, piecewise)")


def _opt(args, name: str, default):
    return getattr(args, name, default)


def _flatten(obj, prefix: str, rows: list):
    if isinstance(obj, dict):
        for key, value in obj.items():
            _flatten(value, f"{prefix}.{key}" if prefix else str(key), rows)
    elif isinstance(obj, (list, tuple)):
        for i, value in enumerate(obj):
            _flatten(value, f"{prefix}[{i}]", rows)
    else:
        rows.append((prefix, obj))


def _scalar_text(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _emit(report: dict, args) -> None:
    if _opt(args, "out", "json") == "csv":
        rows: list = []
        _flatten(report, "", rows)
        lines = ["key,value"]
        for key, value in rows:
            lines.append(f"{key},{_scalar_text(value)}")
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        sys.stdout.write(to_json(report, pretty=_opt(args, "pretty", False)) + "\n")


def _discrete_record(probs, args) -> dict:
    dist = validate_distribution(probs, policy=_opt(args, "policy", "strict"))
    record = {
        "probs": list(dist.probs),
        "n": dist.n,
        "sharpness": sharpness_discrete(dist),
        "tvd_sharpness": tvd_sharpness(dist),
        "entropy_bits": entropy_discrete(dist),
        "kl_bits": kl_from_uniform_discrete(dist),
        "variance": variance_discrete(dist, _opt(args, "labels_parsed", None)),
    }
    if _opt(args, "steps", False):
        _, steps = sharpness_cumulative(dist)
        record["steps"] = [
            {"j": s.j, "p_j": s.p_j, "m_j": s.m_j, "L_j": s.length_j, "shortfall": s.shortfall}
            for s in steps
        ]
    return record


def cmd_discrete(args) -> int:
    if args.labels is not None:
        args.labels_parsed = _parse_floats(args.labels)
    if args.probs is not None:
        report = {"schema": SCHEMA, "kind": "discrete", **_discrete_record(_parse_floats(args.probs), args)}
    else:
        rows = read_distributions_csv(args.csv)
        if not rows:
            raise SharpKitError(f"{args.csv}: no distributions found")
        report = {
            "schema": SCHEMA,
            "kind": "discrete_batch",
            "results": [_discrete_record(row, args) for row in rows],
        }
    _emit(report, args)
    return 0


def _density_from_args(args) -> GriddedDensity:
    domain = _parse_domain(args.domain)
    if getattr(args, "preset", None):
        return build_preset_density(args.preset, domain, _opt(args, "grid_cells", DEFAULT_GRID_CELLS))
    rows = read_distributions_csv(args.csv)
    samples = [x for row in rows for x in row]
    return density_from_samples(samples, domain, bins=_opt(args, "bins", 50))


def cmd_density(args) -> int:
    density = _density_from_args(args)
    d_star = rearrange(density)
    curve = mass_length(d_star)
    lorenz_curve = lorenz(d_star)
    report = {
        "schema": SCHEMA,
        "kind": "density",
        "domain": list(density.domain.bounds[0]),
        "n_cells": density.n_cells,
        "sharpness_simplified": sharpness_simplified(d_star),
        "sharpness_integral": sharpness_integral(curve),
        "sharpness_gini": sharpness_gini(lorenz_curve),
        "entropy_nats": entropy_continuous(density),
        "kl_nats": kl_from_uniform_continuous(density),
        "t_min": support_boundary(d_star),
    }
    if args.lorenz_csv:
        write_lorenz_csv(lorenz_curve, args.lorenz_csv)
        report["lorenz_csv"] = args.lorenz_csv
    if args.mass_length_csv:
        write_mass_length_csv(curve, args.mass_length_csv)
        report["mass_length_csv"] = args.mass_length_csv
    _emit(report, args)
    return 0


def cmd_transform(args) -> int:
    mode = args.mode
    if mode == "discrete-forward":
        if args.m is None or args.n is None:
            raise SharpKitError("discrete transforms need --m and --n")
        result = discrete_forward(args.s, args.m, args.n)
        inputs = {"s": args.s, "m": args.m, "n": args.n}
    elif mode == "discrete-inverse":
        if args.m is None or args.n is None:
            raise SharpKitError("discrete transforms need --m and --n")
        result = discrete_inverse(args.s, args.n, args.m)
        inputs = {"s": args.s, "n": args.n, "m": args.m}
    elif mode == "continuous-forward":
        if args.l is None or args.L is None:
            raise SharpKitError("continuous transforms need --l and --L")
        result = continuous_forward(args.s, args.l, args.L)
        inputs = {"s": args.s, "l": args.l, "L": args.L}
    else:
        if args.l is None or args.L is None:
            raise SharpKitError("continuous transforms need --l and --L")
        result = continuous_inverse(args.s, args.L, args.l)
        inputs = {"s": args.s, "L": args.L, "l": args.l}
    _emit({"schema": SCHEMA, "kind": "transform", "mode": mode, "input": inputs, "result": result}, args)
    return 0


def cmd_diagnose(args) -> int:
    density = _density_from_args(args)
    d_star = rearrange(density)
    curve = mass_length(d_star)
    record = diagnostics_report(
        density,
        d_star,
        curve,
        sharpness_simplified(d_star),
        points=args.at or (),
    )
    report = {
        "schema": SCHEMA,
        "kind": "diagnostics",
        "domain": list(density.domain.bounds[0]),
        "n_cells": density.n_cells,
        **record,
    }
    _emit(report, args)
    return 0


def cmd_grid(args) -> int:
    domain = _parse_domain(args.domain)
    seed = _opt(args, "seed", 0)
    if args.demo_paper:
        grid, _ = rainfall_demo_grid(
            seed, rows=args.rows, cols=args.cols, member_count=args.members, domain=domain
        )
        source = "demo-paper"
    else:
        if not args.csv:
            raise SharpKitError("grid needs --csv or --demo-paper")
        n_rows, n_cols, cells = read_ensemble_csv(args.csv)
        members = tuple(
            tuple(np.asarray(cells.get((r, c), ())) for c in range(n_cols)) for r in range(n_rows)
        )
        grid = EnsembleGrid(rows=n_rows, cols=n_cols, members=members, domain=domain)
        source = args.csv
    reports = grid_sharpness_map(grid, bins=_opt(args, "bins", 50))
    cells_out = [
        {
            "row": rep.row,
            "col": rep.col,
            "sharpness": rep.sharpness,
            "interval": [rep.interval[0], rep.interval[1]],
            "n": rep.member_count,
        }
        for rep in reports
    ]
    report = {
        "schema": SCHEMA,
        "kind": "grid",
        "meta": {
            "source": source,
            "seed": seed,
            "generator": "PCG64",
            "bins": _opt(args, "bins", 50),
            "domain": list(domain.bounds[0]),
        },
        "cells": cells_out,
    }
    if args.cells_csv:
        write_grid_csv(reports, args.cells_csv)
        report["cells_csv"] = args.cells_csv
    if _opt(args, "out", "json") == "csv":
        write_grid_csv(reports, sys.stdout)
        return 0
    _emit(report, args)
    return 0


def cmd_levelset(args) -> int:
    query = LevelSetQuery(
        n=args.n,
        constrain=args.constrain,
        target=args.target,
        tol=args.tol,
        score=args.score,
        sample_count=args.samples,
        seed=_opt(args, "seed", 0),
        entropy_unit=args.entropy_unit,
    )
    cap = args.dump_cap if args.dump_kept else 0
    extrema = level_set_extrema(query, collect_kept=cap)

    def endpoint(probs, score) -> dict:
        arr = np.asarray(probs)
        return {
            "probs": list(arr),
            "score": score,
            "sharpness": float(sharpness_rows(arr[None, :])[0]),
            "entropy_bits": entropy_discrete(arr),
            "entropy_nats": entropy_discrete(arr, base=np.e),
            "variance": variance_discrete(arr),
        }

    report = {
        "schema": SCHEMA,
        "kind": "levelset",
        "query": {
            "n": query.n,
            "constrain": query.constrain,
            "target": query.target,
            "tol": query.tol,
            "score": query.score,
            "samples": query.sample_count,
            "seed": query.seed,
            "entropy_unit": query.entropy_unit,
        },
        "kept_count": extrema.kept_count,
        "min": endpoint(extrema.min_distribution, extrema.min_score),
        "max": endpoint(extrema.max_distribution, extrema.max_score),
    }
    if args.dump_kept:
        write_kept_samples_csv(extrema, args.dump_kept)
        report["kept_csv"] = args.dump_kept
    _emit(report, args)
    return 0


_HANDLERS = {
    "discrete": cmd_discrete,
    "density": cmd_density,
    "transform": cmd_transform,
    "diagnose": cmd_diagnose,
    "grid": cmd_grid,
    "levelset": cmd_levelset,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sharpkit",
        description="Predictive-sharpness scores, diagnostics, and reference-table reproduction.",
    )
    parser.add_argument(
        "--reproduce",
        choices=("table1", "table2", "cube", "rl-example"),
        help="recompute a published table/example and report pass/fail per value",
    )
    parser.add_argument("--pretty", action="store_true", help="indent JSON output")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", choices=("json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--grid-cells", type=int, dest="grid_cells", default=argparse.SUPPRESS)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("discrete", parents=[common], help="score a finite probability vector")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--probs", help="comma-separated probabilities")
    group.add_argument("--csv", help="CSV with one distribution per row")
    p.add_argument("--policy", choices=("strict", "renormalize"), default="strict")
    p.add_argument("--steps", action="store_true", help="include the per-step decomposition")
    p.add_argument("--labels", help="comma-separated outcome labels for variance")

    p = sub.add_parser("density", parents=[common], help="score a continuous density")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--preset", help="uniform | gauss:... | mix:... | piecewise:...")
    group.add_argument("--csv", help="CSV of samples (histogram path)")
    p.add_argument("--domain", required=True, help="lo:hi")
    p.add_argument("--bins", type=int, default=50, help="histogram bins for --csv input")
    p.add_argument("--lorenz-csv", dest="lorenz_csv", help="write the Lorenz curve here")
    p.add_argument("--mass-length-csv", dest="mass_length_csv", help="write the mass-length curve here")

    p = sub.add_parser("transform", parents=[common], help="move a score across domain sizes/measures")
    p.add_argument(
        "--mode",
        required=True,
        choices=("discrete-forward", "discrete-inverse", "continuous-forward", "continuous-inverse"),
    )
    p.add_argument("--s", type=float, required=True, help="input sharpness score")
    p.add_argument("--m", type=int, help="smaller outcome count")
    p.add_argument("--n", type=int, help="larger outcome count")
    p.add_argument("--l", type=float, help="smaller domain measure")
    p.add_argument("--L", type=float, help="larger domain measure")

    p = sub.add_parser("diagnose", parents=[common], help="rearranged-space diagnostics report")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--preset")
    group.add_argument("--csv")
    p.add_argument("--domain", required=True, help="lo:hi")
    p.add_argument("--bins", type=int, default=50)
    p.add_argument("--at", type=float, action="append", help="outcome point to map (repeatable)")

    p = sub.add_parser("grid", parents=[common], help="per-cell sharpness over an ensemble grid")
    p.add_argument("--csv", help="samples CSV with header row,col,member,value")
    p.add_argument("--demo-paper", action="store_true", help="run the built-in rainfall simulation")
    p.add_argument("--domain", default="0:10", help="lo:hi")
    p.add_argument("--bins", type=int, default=50)
    p.add_argument("--rows", type=int, default=6)
    p.add_argument("--cols", type=int, default=6)
    p.add_argument("--members", type=int, default=30)
    p.add_argument("--cells-csv", dest="cells_csv", help="also write the flat per-cell CSV here")

    p = sub.add_parser("levelset", parents=[common], help="extrema of one measure over a level set of another")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--constrain", required=True, choices=("sharpness", "entropy", "variance"))
    p.add_argument("--target", type=float, required=True)
    p.add_argument("--tol", type=float, required=True)
    p.add_argument("--score", required=True, choices=("sharpness", "entropy", "variance"))
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--entropy-unit", dest="entropy_unit", choices=("nats", "bits"), default="nats")
    p.add_argument("--dump-kept", dest="dump_kept", help="write kept samples CSV here")
    p.add_argument("--dump-cap", dest="dump_cap", type=int, default=10_000)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.reproduce:
            _emit(reproduce.run(args.reproduce), args)
            return 0
        if args.command is None:
            parser.print_usage(sys.stderr)
            sys.stderr.write("sharpkit: error: a subcommand (or --reproduce) is required\n")
            return 2
        return _HANDLERS[args.command](args)
    except InternalError as exc:
        sys.stderr.write(f"sharpkit: internal invariant violation: {exc}\n")
        return 3
    except SharpKitError as exc:
        sys.stderr.write(f"sharpkit: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
