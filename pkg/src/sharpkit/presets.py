"""Analytic density presets: the reference-table family.

Uniform, Gaussian, two-component Gaussian mixture, and piecewise-constant
block densities, all sampled at cell midpoints and renormalized on the
domain (truncation to the domain is absorbed into the normalizing
constant).
"""

import math

import numpy as np

from .core import DEFAULT_GRID_CELLS, BoundedDomain, GriddedDensity
from .errors import RangeError

__all__ = [
    "uniform_density",
    "gaussian_density",
    "gaussian_mixture_density",
    "piecewise_density",
]


def uniform_density(domain: BoundedDomain, n_cells: int = DEFAULT_GRID_CELLS) -> GriddedDensity:
    return GriddedDensity.from_pdf(lambda x: np.ones_like(x), domain, n_cells)


def _normal_curve(x, mu: float, sigma: float):
    return np.exp(-0.5 * ((x - mu) / sigma) ** 2) / (sigma * math.sqrt(2.0 * math.pi))


def gaussian_density(
    domain: BoundedDomain, mu: float, sigma: float, n_cells: int = DEFAULT_GRID_CELLS
) -> GriddedDensity:
    """Gaussian truncated to the domain and renormalized."""
    if sigma <= 0:
        raise RangeError(f"sigma must be > 0, got {sigma}")
    return GriddedDensity.from_pdf(lambda x: _normal_curve(x, mu, sigma), domain, n_cells)


def gaussian_mixture_density(
    domain: BoundedDomain, components, n_cells: int = DEFAULT_GRID_CELLS
) -> GriddedDensity:
    """Mixture of Gaussians, renormalized on the domain.

    ``components`` is a sequence of (weight, mu, sigma) triples; weights
    need not sum to 1 since the curve is renormalized anyway.
    """
    comps = [(float(w), float(mu), float(sg)) for w, mu, sg in components]
    if not comps:
        raise RangeError("mixture needs at least one component")
    for w, _, sg in comps:
        if w < 0 or sg <= 0:
            raise RangeError(f"component weight {w} / sigma {sg} invalid")

    def curve(x):
        total = np.zeros_like(x)
        for w, mu, sg in comps:
            total += w * _normal_curve(x, mu, sg)
        return total

    return GriddedDensity.from_pdf(curve, domain, n_cells)


def piecewise_density(
    domain: BoundedDomain, breakpoints, levels, n_cells: int = DEFAULT_GRID_CELLS
) -> GriddedDensity:
    """Piecewise-constant density: ``levels[i]`` holds from breakpoint i to i+1.

    ``breakpoints`` are the left edges of the blocks (ascending, starting
    at the domain's lower bound); the last block runs to the upper bound.
    Exact on the grid whenever the breakpoints align with cell edges.
    """
    lo, hi = domain.bounds[0]
    breaks = np.asarray(breakpoints, dtype=float)
    vals = np.asarray(levels, dtype=float)
    if breaks.size != vals.size or breaks.size == 0:
        raise RangeError("need one level per breakpoint")
    if breaks[0] != lo or np.any(np.diff(breaks) <= 0) or breaks[-1] >= hi:
        raise RangeError(f"breakpoints must ascend from {lo} and stay below {hi}")

    def curve(x):
        idx = np.searchsorted(breaks, x, side="right") - 1
        return vals[np.clip(idx, 0, vals.size - 1)]

    return GriddedDensity.from_pdf(curve, domain, n_cells)
