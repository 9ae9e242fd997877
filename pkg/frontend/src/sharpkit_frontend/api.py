"""Array-friendly pass-through to the sharpkit library.

Every numeric result here is produced by sharpkit itself; this module
only builds the typed objects from plain arrays and unwraps the results.
Scalar and already-array-like operations are re-exported unchanged, so
the full public surface is available from one namespace.  Errors are the
sharpkit exception taxonomy, re-exported from :mod:`sharpkit.errors`.
"""

import numpy as np

import sharpkit as sk

# Direct re-exports: these already accept plain sequences or scalars.
from sharpkit import (  # noqa: F401
    relative_sharpness,
    sharpness_cumulative,
    sharpness_det,
    sharpness_discrete,
    tvd_sharpness,
    entropy_discrete,
    kl_from_uniform_discrete,
    variance_discrete,
    discrete_forward,
    discrete_inverse,
    continuous_forward,
    continuous_inverse,
    sharpness_uniform_subset,
    sample_simplex,
)
from sharpkit.errors import *  # noqa: F401,F403

__all__ = [
    "density",
    "density_from_pdf",
    "density_from_histogram",
    "flatten_density",
    "rearranged_values",
    "continuous_sharpness",
    "continuous_sharpness_integral",
    "continuous_sharpness_gini",
    "continuous_entropy",
    "continuous_kl",
    "mass_length_curves",
    "lorenz_curve",
    "analyze",
    "point_location",
    "point_relative_likelihood",
    "point_relative_rank",
    "level_plateau",
    "level_mass_above",
    "zero_support_boundary",
    "interval_contribution",
    "region_contribution",
    "located_key_points",
    # re-exports
    "sharpness_discrete",
    "sharpness_cumulative",
    "sharpness_det",
    "tvd_sharpness",
    "relative_sharpness",
    "entropy_discrete",
    "kl_from_uniform_discrete",
    "variance_discrete",
    "discrete_forward",
    "discrete_inverse",
    "continuous_forward",
    "continuous_inverse",
    "sharpness_uniform_subset",
    "sample_simplex",
]


def density(values, lo: float = 0.0, hi: float = 1.0) -> sk.GriddedDensity:
    """Cell densities on [lo, hi] as a validated gridded density."""
    return sk.GriddedDensity(sk.BoundedDomain.interval(lo, hi), np.asarray(values, dtype=float))


def density_from_pdf(pdf, lo: float, hi: float, cells: int = sk.DEFAULT_GRID_CELLS) -> sk.GriddedDensity:
    """Sample a callable pdf at cell midpoints and renormalize."""
    return sk.GriddedDensity.from_pdf(pdf, sk.BoundedDomain.interval(lo, hi), cells)


def density_from_histogram(samples, lo: float, hi: float, bins: int = 50) -> sk.GriddedDensity:
    """Equal-width histogram density of raw samples."""
    return sk.density_from_samples(samples, sk.BoundedDomain.interval(lo, hi), bins)


def flatten_density(values, bounds) -> sk.GriddedDensity:
    """Flatten a multidimensional density grid; bounds is ((lo, hi), ...)."""
    return sk.flatten_multidim(np.asarray(values, dtype=float), sk.BoundedDomain(tuple(bounds)))


def _as_density(d, lo, hi) -> sk.GriddedDensity:
    if isinstance(d, sk.GriddedDensity):
        return d
    return density(d, lo, hi)


def rearranged_values(values, lo: float = 0.0, hi: float = 1.0) -> np.ndarray:
    """The non-decreasing rearrangement of the cell densities."""
    return sk.rearrange(_as_density(values, lo, hi)).values


def continuous_sharpness(values, lo: float = 0.0, hi: float = 1.0) -> float:
    """Sharpness of cell densities on [lo, hi] (simplified form)."""
    return sk.sharpness_simplified(sk.rearrange(_as_density(values, lo, hi)))


def continuous_sharpness_integral(values, lo: float = 0.0, hi: float = 1.0) -> float:
    """Same score through the mass-length integral form."""
    return sk.sharpness_integral(sk.mass_length(sk.rearrange(_as_density(values, lo, hi))))


def continuous_sharpness_gini(values, lo: float = 0.0, hi: float = 1.0) -> float:
    """Same score through the Lorenz/Gini form."""
    return sk.sharpness_gini(sk.lorenz(sk.rearrange(_as_density(values, lo, hi))))


def continuous_entropy(values, lo: float = 0.0, hi: float = 1.0, base: float = np.e) -> float:
    return sk.entropy_continuous(_as_density(values, lo, hi), base=base)


def continuous_kl(values, lo: float = 0.0, hi: float = 1.0, base: float = np.e) -> float:
    return sk.kl_from_uniform_continuous(_as_density(values, lo, hi), base=base)


def mass_length_curves(values, lo: float = 0.0, hi: float = 1.0) -> dict:
    """Rearranged-space curves as plain arrays: t, mass, length, integrand."""
    curve = sk.mass_length(sk.rearrange(_as_density(values, lo, hi)))
    return {
        "t": np.asarray(curve.t_grid),
        "mass": np.asarray(curve.mass),
        "length": np.asarray(curve.length),
        "integrand": np.asarray(curve.integrand),
    }


def lorenz_curve(values, lo: float = 0.0, hi: float = 1.0, m_points: int | None = None):
    """Lorenz-type curve as (u, cumulative mass share) arrays."""
    curve = sk.lorenz(sk.rearrange(_as_density(values, lo, hi)), m_points)
    return np.asarray(curve.u_grid), np.asarray(curve.values)


def _prepared(values, lo, hi):
    d = _as_density(values, lo, hi)
    d_star = sk.rearrange(d)
    return d, d_star


def analyze(values, lo: float = 0.0, hi: float = 1.0, points=()) -> dict:
    """Full rearranged-space diagnostics record for cell densities."""
    d, d_star = _prepared(values, lo, hi)
    curve = sk.mass_length(d_star)
    return sk.diagnostics_report(d, d_star, curve, sk.sharpness_simplified(d_star), points=points)


def point_location(values, y: float, lo: float = 0.0, hi: float = 1.0) -> sk.MappedPoint:
    d, d_star = _prepared(values, lo, hi)
    return sk.map_point(d, d_star, y)


def point_relative_likelihood(values, y: float, lo: float = 0.0, hi: float = 1.0) -> float:
    return sk.relative_likelihood(_as_density(values, lo, hi), y)


def point_relative_rank(values, y: float, lo: float = 0.0, hi: float = 1.0) -> float:
    d, d_star = _prepared(values, lo, hi)
    return sk.relative_rank(d, d_star, y)


def level_plateau(values, tau: float, lo: float = 0.0, hi: float = 1.0, eps: float | None = None):
    _, d_star = _prepared(values, lo, hi)
    return sk.plateau_interval(d_star, tau, eps)


def level_mass_above(values, tau: float, lo: float = 0.0, hi: float = 1.0) -> float:
    _, d_star = _prepared(values, lo, hi)
    return sk.mass_above(d_star, tau)


def zero_support_boundary(values, lo: float = 0.0, hi: float = 1.0) -> float:
    _, d_star = _prepared(values, lo, hi)
    return sk.support_boundary(d_star)


def interval_contribution(values, t_a: float, t_b: float, lo: float = 0.0, hi: float = 1.0) -> float:
    _, d_star = _prepared(values, lo, hi)
    return sk.local_contribution(sk.mass_length(d_star), t_a, t_b)


def region_contribution(values, cells, lo: float = 0.0, hi: float = 1.0) -> float:
    d, d_star = _prepared(values, lo, hi)
    return sk.local_contribution_region(d, d_star, sk.mass_length(d_star), cells)


def located_key_points(values, lo: float = 0.0, hi: float = 1.0) -> dict:
    d, d_star = _prepared(values, lo, hi)
    return sk.key_points(d, d_star)
