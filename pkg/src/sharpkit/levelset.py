"""Level-set experiments on the probability simplex.

Draw distributions uniformly from the simplex, keep the ones whose chosen
measure (sharpness, entropy, or variance) sits in a tolerance band around
a target, and report the extremes of a second measure over that level set.
Sampling shards carry derived seeds, so results are reproducible and the
min/max merge is order-independent.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._parallel import ordered_map
from .errors import EmptyLevelSet, RangeError

__all__ = ["LevelSetQuery", "LevelSetExtrema", "sample_simplex", "level_set_extrema"]

MEASURES = ("sharpness", "entropy", "variance")

_SHARD_SIZE = 1 << 17


@dataclass(frozen=True)
class LevelSetQuery:
    """A level-set filter plus the measure to overlay on the kept samples.

    ``target`` must be attainable by the constrained measure for the given
    outcome count; entropy is read in ``entropy_unit`` ("nats" by default,
    which is what the reference experiments pin).
    """

    n: int
    constrain: str
    target: float
    tol: float
    score: str
    sample_count: int = 1_000_000
    seed: int = 0
    entropy_unit: str = "nats"

    def __post_init__(self):
        if self.n < 2:
            raise RangeError(f"need n >= 2 outcomes, got {self.n}")
        if self.constrain not in MEASURES or self.score not in MEASURES:
            raise RangeError(f"measures must be one of {MEASURES}")
        if self.tol <= 0:
            raise RangeError(f"tolerance must be > 0, got {self.tol}")
        if self.sample_count < 1:
            raise RangeError(f"sample count must be >= 1, got {self.sample_count}")
        if self.entropy_unit not in ("nats", "bits"):
            raise RangeError(f"entropy unit must be 'nats' or 'bits', got {self.entropy_unit!r}")
        lo, hi = self.attainable_range()
        if not lo <= self.target <= hi:
            raise RangeError(
                f"target {self.target} outside attainable {self.constrain} range [{lo}, {hi}] for n={self.n}"
            )

    def attainable_range(self) -> tuple[float, float]:
        if self.constrain == "sharpness":
            return 0.0, 1.0
        if self.constrain == "entropy":
            top = math.log(self.n) if self.entropy_unit == "nats" else math.log2(self.n)
            return 0.0, top
        # Variance peaks with mass split between the extreme labels 0 and n-1.
        return 0.0, (self.n - 1) ** 2 / 4.0


@dataclass(frozen=True, eq=False)
class LevelSetExtrema:
    """Extremes of the overlaid score across the kept level-set samples."""

    min_distribution: np.ndarray
    min_score: float
    max_distribution: np.ndarray
    max_score: float
    kept_count: int
    kept_samples: np.ndarray | None = None
    kept_constrained: np.ndarray | None = None
    kept_scores: np.ndarray | None = None


def sample_simplex(n: int, count: int, seed: int) -> np.ndarray:
    """Uniform draws from the (n-1)-simplex, one distribution per row.

    Uses the exponential-normalization scheme (iid exponentials divided by
    their sum), which is the flat Dirichlet.  Deterministic under seed.
    """
    if n < 2:
        raise RangeError(f"need n >= 2 outcomes, got {n}")
    if count < 1:
        raise RangeError(f"need count >= 1, got {count}")
    rng = np.random.default_rng(seed)
    draws = rng.exponential(size=(count, n))
    return draws / draws.sum(axis=1, keepdims=True)


def sharpness_rows(rows: np.ndarray) -> np.ndarray:
    """Compact-form sharpness of each row of a (k, n) probability matrix."""
    n = rows.shape[1]
    ordered = np.sort(rows, axis=1)
    j = np.arange(1, n + 1)
    coeff = (2.0 * j - n - 1.0) / (n - 1.0)
    return ordered @ coeff


def entropy_rows(rows: np.ndarray, unit: str = "nats") -> np.ndarray:
    logs = np.where(rows > 0.0, np.log(np.where(rows > 0.0, rows, 1.0)), 0.0)
    h = -(rows * logs).sum(axis=1)
    return h if unit == "nats" else h / math.log(2.0)


def variance_rows(rows: np.ndarray) -> np.ndarray:
    labels = np.arange(rows.shape[1], dtype=float)
    mean = rows @ labels
    return rows @ labels**2 - mean**2


def _measure_rows(name: str, rows: np.ndarray, unit: str) -> np.ndarray:
    if name == "sharpness":
        return sharpness_rows(rows)
    if name == "entropy":
        return entropy_rows(rows, unit)
    return variance_rows(rows)


def level_set_extrema(query: LevelSetQuery, collect_kept: int = 0) -> LevelSetExtrema:
    """Filter sampled distributions to the level set and report score extrema.

    Ties break to the first occurrence in draw order.  Pass
    ``collect_kept`` to additionally keep up to that many qualifying
    samples (with their constrained and overlaid values) for export.
    """
    shard_sizes = []
    remaining = query.sample_count
    while remaining > 0:
        size = min(_SHARD_SIZE, remaining)
        shard_sizes.append(size)
        remaining -= size
    seeds = np.random.SeedSequence(query.seed).spawn(len(shard_sizes))

    def run_shard(args):
        shard_seed, size = args
        rows = np.random.default_rng(shard_seed).exponential(size=(size, query.n))
        rows /= rows.sum(axis=1, keepdims=True)
        constrained = _measure_rows(query.constrain, rows, query.entropy_unit)
        keep = np.abs(constrained - query.target) <= query.tol
        kept = rows[keep]
        if kept.shape[0] == 0:
            return None
        scores = _measure_rows(query.score, kept, query.entropy_unit)
        i, j = int(np.argmin(scores)), int(np.argmax(scores))
        return (
            kept.shape[0],
            (float(scores[i]), kept[i]),
            (float(scores[j]), kept[j]),
            (kept, constrained[keep], scores),
        )

    results = ordered_map(run_shard, zip(seeds, shard_sizes))

    kept_count = 0
    best_min = None
    best_max = None
    dump_rows, dump_constrained, dump_scores = [], [], []
    dump_left = max(int(collect_kept), 0)
    for res in results:
        if res is None:
            continue
        count, (lo_score, lo_row), (hi_score, hi_row), (kept, constrained, scores) = res
        kept_count += count
        if best_min is None or lo_score < best_min[0]:
            best_min = (lo_score, lo_row)
        if best_max is None or hi_score > best_max[0]:
            best_max = (hi_score, hi_row)
        if dump_left > 0:
            take = min(dump_left, kept.shape[0])
            dump_rows.append(kept[:take])
            dump_constrained.append(constrained[:take])
            dump_scores.append(scores[:take])
            dump_left -= take

    if kept_count == 0:
        raise EmptyLevelSet(
            f"no sample within {query.tol} of {query.constrain} = {query.target} "
            f"(n={query.n}, {query.sample_count} draws)"
        )
    return LevelSetExtrema(
        min_distribution=best_min[1],
        min_score=best_min[0],
        max_distribution=best_max[1],
        max_score=best_max[0],
        kept_count=kept_count,
        kept_samples=np.concatenate(dump_rows) if dump_rows else None,
        kept_constrained=np.concatenate(dump_constrained) if dump_constrained else None,
        kept_scores=np.concatenate(dump_scores) if dump_scores else None,
    )
