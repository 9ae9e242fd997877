"""Analysis toolkit for the rearranged space.

The rearrangement discards where mass sat in the original domain, but any
point can be re-located approximately by matching its density value to the
sorted profile.  On top of that mapping this module provides plateau
detection, the zero-support boundary, local contributions to the score,
mass above a density level, relative likelihood, and relative rank.
"""

from dataclasses import dataclass

import numpy as np

from .core import GriddedDensity, MassLengthCurve, RearrangedDensity
from .errors import AllZero, LevelNotPresent, OutOfDomain, RangeError

__all__ = [
    "MappedPoint",
    "map_point",
    "plateau_interval",
    "support_boundary",
    "local_contribution",
    "local_contribution_region",
    "mass_above",
    "relative_likelihood",
    "relative_rank",
    "key_points",
    "diagnostics_report",
]


@dataclass(frozen=True)
class MappedPoint:
    """A point of the original domain located in the rearranged space.

    ``plateau`` is the interval of equal-density positions containing
    ``t`` whenever at least two grid cells share the matched value; the
    mapping is non-unique there and the interval is the honest answer.
    """

    source_value: float
    density: float
    t_index: int
    t: float
    plateau: tuple[float, float] | None = None


def _default_eps(d_star: RearrangedDensity) -> float:
    return 1e-9 * float(d_star.values[-1])


def _plateau_bounds(d_star: RearrangedDensity, tau: float, eps: float) -> tuple[int, int]:
    """First and last sorted indices with |value - tau| <= eps (values sorted)."""
    v = d_star.values
    first = int(np.searchsorted(v, tau - eps, side="left"))
    last = int(np.searchsorted(v, tau + eps, side="right")) - 1
    return first, last


def map_point(density: GriddedDensity, d_star: RearrangedDensity, y: float) -> MappedPoint:
    """Locate an outcome point in the rearranged space by density matching.

    Returns the grid position whose rearranged value is closest to the
    density at ``y`` (ties resolve to the smallest index).  When two or
    more cells match within tolerance, the full plateau is attached.
    """
    d_y = density.value_at(y)
    j = int(np.argmin(np.abs(d_star.values - d_y)))
    eps = _default_eps(d_star)
    first, last = _plateau_bounds(d_star, float(d_star.values[j]), eps)
    t = d_star.t_grid
    plateau = (float(t[first]), float(t[last])) if last > first else None
    return MappedPoint(
        source_value=float(y),
        density=d_y,
        t_index=j,
        t=float(t[j]),
        plateau=plateau,
    )


def plateau_interval(d_star: RearrangedDensity, tau: float, eps: float | None = None) -> tuple[float, float]:
    """Rearranged interval over which the density equals ``tau`` within ``eps``.

    ``eps`` defaults to 1e-9 times the maximum density, which catches
    exact piecewise plateaus without merging distinct analytic levels.
    """
    if eps is None:
        eps = _default_eps(d_star)
    if eps < 0:
        raise RangeError(f"tolerance must be >= 0, got {eps}")
    first, last = _plateau_bounds(d_star, float(tau), float(eps))
    if last < first:
        raise LevelNotPresent(f"no grid cell within {eps} of density {tau}")
    t = d_star.t_grid
    return float(t[first]), float(t[last])


def support_boundary(d_star: RearrangedDensity) -> float:
    """Left edge of the first strictly positive rearranged cell.

    Marks how much of the rearranged domain carries zero density; 0 when
    the density is fully supported.
    """
    positive = np.nonzero(d_star.values > 0.0)[0]
    if positive.size == 0:
        raise AllZero("density has no positive cell")
    return float(positive[0] * d_star.cell_width)


def local_contribution(curve: MassLengthCurve, t_a: float, t_b: float) -> float:
    """Contribution of the rearranged interval [t_a, t_b] to the score.

    Sums the curve integrand over the interval, weighting boundary cells
    by their overlap fraction; exact because the integrand is constant
    within each cell.  The full interval reproduces the sharpness score.
    """
    omega = curve.domain_measure
    if not (0.0 <= t_a <= t_b <= omega):
        raise RangeError(f"need 0 <= t_a <= t_b <= {omega}, got [{t_a}, {t_b}]")
    dt = curve.cell_width
    lefts = np.arange(curve.t_grid.size) * dt
    overlap = np.clip(np.minimum(t_b, lefts + dt) - np.maximum(t_a, lefts), 0.0, None)
    return max(float((curve.integrand * overlap).sum()) / omega, 0.0)


def local_contribution_region(
    density: GriddedDensity,
    d_star: RearrangedDensity,
    curve: MassLengthCurve,
    region,
) -> float:
    """Contribution of a set of original-domain cells to the score.

    ``region`` is a collection of cell indices of ``density``.  Each cell's
    value is matched to a rearranged position (equal densities share a
    plateau, on which the integrand is constant, so the representative
    index is immaterial) and the per-cell integrand slices are summed with
    multiplicity.  Disjoint regions covering the domain therefore add up
    to the total score.
    """
    idx = np.unique(np.asarray(region, dtype=int))
    if idx.size == 0:
        return 0.0
    if idx[0] < 0 or idx[-1] >= density.n_cells:
        bad = idx[0] if idx[0] < 0 else idx[-1]
        raise OutOfDomain(f"cell index {bad} outside [0, {density.n_cells - 1}]")
    matched = np.searchsorted(d_star.values, density.values[idx], side="left")
    total = float(curve.integrand[matched].sum()) * curve.cell_width
    return max(total / curve.domain_measure, 0.0)


def mass_above(d_star: RearrangedDensity, tau: float) -> float:
    """Probability mass carried by cells with density strictly above ``tau``."""
    if tau < 0:
        raise RangeError(f"density level must be >= 0, got {tau}")
    start = int(np.searchsorted(d_star.values, tau, side="right"))
    return float(d_star.values[start:].sum()) * d_star.cell_width


def relative_likelihood(density: GriddedDensity, y: float) -> float:
    """Density at ``y`` relative to the maximum density (1 at a mode)."""
    return density.value_at(y) / float(density.values.max())


def relative_rank(density: GriddedDensity, d_star: RearrangedDensity, y: float) -> float:
    """Fraction of rearranged grid cells with density strictly below d(y)."""
    d_y = density.value_at(y)
    below = int(np.searchsorted(d_star.values, d_y, side="left"))
    return below / d_star.n_cells


def key_points(density: GriddedDensity, d_star: RearrangedDensity) -> dict[str, MappedPoint]:
    """Locate the mode, median, and mean in the rearranged space.

    The mode is the argmax cell midpoint; the median is the smallest
    outcome at which the cumulative mass reaches one half; the mean is the
    first moment of the gridded density.  Each point is then mapped by its
    containing cell's density value.
    """
    mids = density.midpoints()
    v = density.values
    mode_y = float(mids[int(np.argmax(v))])

    masses = v * density.cell_measure
    cum = np.cumsum(masses)
    k = int(np.searchsorted(cum, 0.5, side="left"))
    lo, _ = density.domain.bounds[0]
    left_edge = lo + k * density.cell_width
    prev_mass = float(cum[k - 1]) if k > 0 else 0.0
    median_y = left_edge + (0.5 - prev_mass) / float(v[k])

    mean_y = float((mids * masses).sum())

    return {
        "mode": map_point(density, d_star, mode_y),
        "median": map_point(density, d_star, median_y),
        "mean": map_point(density, d_star, mean_y),
    }


def diagnostics_report(
    density: GriddedDensity,
    d_star: RearrangedDensity,
    curve: MassLengthCurve,
    sharpness: float,
    points=(),
) -> dict:
    """Assemble the serializable diagnostics record for a density.

    ``points`` is an iterable of outcome values to map; for each one the
    record carries its mapped position, relative likelihood, relative
    rank, and the mass sitting strictly above its density level.
    """
    t_min = support_boundary(d_star)
    omega = d_star.domain_measure
    mapped = [map_point(density, d_star, y) for y in points]
    keys = key_points(density, d_star)

    def point_dict(mp: MappedPoint) -> dict:
        return {
            "y": mp.source_value,
            "density": mp.density,
            "t_index": mp.t_index,
            "t": mp.t,
            "plateau": list(mp.plateau) if mp.plateau else None,
        }

    return {
        "sharpness": sharpness,
        "t_min": t_min,
        "key_points": {name: point_dict(mp) for name, mp in keys.items()},
        "mapped_points": [point_dict(mp) for mp in mapped],
        "contributions": {
            "excluded_region": local_contribution(curve, 0.0, t_min),
            "support_region": local_contribution(curve, t_min, omega),
            "total": sharpness,
        },
        "mass_above": [mass_above(d_star, mp.density) for mp in mapped],
        "rl": [relative_likelihood(density, mp.source_value) for mp in mapped],
        "rank": [relative_rank(density, d_star, mp.source_value) for mp in mapped],
    }
