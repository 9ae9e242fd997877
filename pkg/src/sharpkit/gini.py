"""Lorenz-curve representation of sharpness.

The cumulative mass share of the rearranged density over the normalized
position u in [0, 1] is a Lorenz-type curve; one minus twice its area is
a Gini-style coefficient that equals the sharpness score.  Used as a
third, independent evaluation path and as plot data.
"""

from dataclasses import dataclass

import numpy as np

from .core import NORMALIZATION_TOL, RearrangedDensity, _readonly, clamp_unit
from .errors import InternalError, RangeError

__all__ = ["LorenzCurve", "lorenz", "sharpness_gini"]


@dataclass(frozen=True, eq=False)
class LorenzCurve:
    """Cumulative probability-mass share over the normalized rearranged axis."""

    u_grid: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        u = _readonly(self.u_grid)
        vals = _readonly(self.values)
        if u.size != vals.size or u.size < 2:
            raise RangeError("Lorenz curve needs matching grids with >= 2 points")
        if abs(vals[0]) > NORMALIZATION_TOL or abs(vals[-1] - 1.0) > NORMALIZATION_TOL:
            raise InternalError("Lorenz curve must run from 0 to 1")
        if np.any(np.diff(vals) < -1e-12):
            raise InternalError("Lorenz curve is not non-decreasing")
        if np.any(np.diff(vals, 2) < -1e-9):
            raise InternalError("Lorenz curve is not convex on the grid")
        if np.any(vals > u + 1e-9):
            raise InternalError("Lorenz curve exceeds the diagonal")
        object.__setattr__(self, "u_grid", u)
        object.__setattr__(self, "values", vals)


def lorenz(d_star: RearrangedDensity, m_points: int | None = None) -> LorenzCurve:
    """Cumulative mass share of a rearranged density.

    By default the curve is evaluated at the N + 1 cell boundaries of the
    underlying grid, where the prefix sums are exact and the curve is
    genuinely piecewise-linear (no interpolation error).  Pass ``m_points``
    to resample onto an even grid of that many points instead.
    """
    n = d_star.n_cells
    boundary_u = np.arange(n + 1) / n
    boundary_mass = np.concatenate(([0.0], np.cumsum(d_star.values) * d_star.cell_width))
    if m_points is None:
        return LorenzCurve(boundary_u, boundary_mass)
    if m_points < 2:
        raise RangeError(f"need at least 2 grid points, got {m_points}")
    u = np.linspace(0.0, 1.0, m_points)
    return LorenzCurve(u, np.interp(u, boundary_u, boundary_mass))


def sharpness_gini(curve: LorenzCurve) -> float:
    """Gini-style sharpness: one minus twice the area under the Lorenz curve.

    The trapezoidal rule is exact here because the curve is piecewise
    linear between its grid points.
    """
    area = float(np.trapezoid(curve.values, curve.u_grid))
    return clamp_unit(1.0 - 2.0 * area)
