"""Domain and distribution value types plus the rearrangement kernel.

Densities are represented piecewise-constant on uniform grids, which makes
every downstream integral an exact finite sum on the representation.  All
value types are immutable after construction (backing arrays are marked
read-only), so every operation in the library is a pure function that is
safe to call from concurrent threads.
"""

from dataclasses import dataclass
from math import prod

import numpy as np

from .errors import (
    InternalError,
    NegativeMass,
    NonUniformGrid,
    NotNormalized,
    OutOfDomain,
    RangeError,
    ZeroTotal,
)

#: Default cell count for gridded densities.
DEFAULT_GRID_CELLS = 10_000

#: Absolute tolerance on total mass.
NORMALIZATION_TOL = 1e-9

#: Entries in [-NONNEG_SLACK, 0) are treated as round-off and clamped to 0.
NONNEG_SLACK = 1e-12


def _readonly(values) -> np.ndarray:
    arr = np.array(values, dtype=float, copy=True)
    arr.setflags(write=False)
    return arr


def _clamp_nonnegative(values: np.ndarray, what: str) -> np.ndarray:
    low = values.min(initial=0.0)
    if low < -NONNEG_SLACK:
        idx = int(np.argmin(values))
        raise NegativeMass(f"{what}[{idx}] = {values[idx]} is negative")
    if low < 0.0:
        values = np.where(values < 0.0, 0.0, values)
    return values


def clamp_unit(score: float, slack: float = NONNEG_SLACK) -> float:
    """Clamp a score to [0, 1] if within ``slack`` of a bound.

    Values further outside the unit interval indicate a logic bug and
    raise :class:`InternalError` rather than being absorbed.
    """
    if -slack <= score < 0.0:
        return 0.0
    if 1.0 < score <= 1.0 + slack:
        return 1.0
    if score < 0.0 or score > 1.0:
        raise InternalError(f"score {score} outside [0, 1] beyond slack {slack}")
    return float(score)


@dataclass(frozen=True)
class BoundedDomain:
    """A box-shaped outcome region with finite total measure.

    ``bounds`` holds one ``(lo, hi)`` pair per axis, in outcome units.
    """

    bounds: tuple[tuple[float, float], ...]

    def __post_init__(self):
        norm = tuple((float(lo), float(hi)) for lo, hi in self.bounds)
        if not norm:
            raise RangeError("domain needs at least one axis")
        for ax, (lo, hi) in enumerate(norm):
            if not (np.isfinite(lo) and np.isfinite(hi)) or hi <= lo:
                raise RangeError(f"axis {ax}: need finite lo < hi, got ({lo}, {hi})")
        object.__setattr__(self, "bounds", norm)

    @classmethod
    def interval(cls, lo: float, hi: float) -> "BoundedDomain":
        return cls(((lo, hi),))

    @classmethod
    def from_measure(cls, measure: float) -> "BoundedDomain":
        """One-dimensional stand-in domain [0, measure]."""
        return cls.interval(0.0, measure)

    @property
    def dim(self) -> int:
        return len(self.bounds)

    @property
    def measure(self) -> float:
        return prod(hi - lo for lo, hi in self.bounds)

    def contains(self, y: float) -> bool:
        """Membership test for one-dimensional domains."""
        lo, hi = self._axis()
        return lo <= y <= hi

    def _axis(self) -> tuple[float, float]:
        if self.dim != 1:
            raise RangeError("point operations need a one-dimensional domain")
        return self.bounds[0]


@dataclass(frozen=True, eq=False)
class DiscreteDistribution:
    """A finite probability vector over n ordered outcomes."""

    probs: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.probs, dtype=float).ravel()
        if arr.size < 2:
            raise RangeError(f"need at least 2 outcomes, got {arr.size}")
        arr = _clamp_nonnegative(arr, "probs")
        total = float(arr.sum())
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise NotNormalized(f"probabilities sum to {total}, not 1")
        object.__setattr__(self, "probs", _readonly(arr))

    @property
    def n(self) -> int:
        return self.probs.size


def validate_distribution(probs, policy: str = "strict") -> DiscreteDistribution:
    """Validate a raw probability sequence into a :class:`DiscreteDistribution`.

    ``policy="strict"`` accepts the entries as-is and raises
    :class:`NotNormalized` unless they already sum to 1 within tolerance.
    ``policy="renormalize"`` divides by the (positive) total instead.
    """
    if policy not in ("strict", "renormalize"):
        raise RangeError(f"unknown policy {policy!r}")
    arr = np.asarray(probs, dtype=float).ravel()
    if arr.size < 2:
        raise RangeError(f"need at least 2 outcomes, got {arr.size}")
    arr = _clamp_nonnegative(arr, "probs")
    total = float(arr.sum())
    if policy == "renormalize":
        if total <= 0.0:
            raise ZeroTotal(f"cannot renormalize total mass {total}")
        arr = arr / total
    return DiscreteDistribution(arr)


@dataclass(frozen=True, eq=False)
class GriddedDensity:
    """A piecewise-constant density on a uniform grid over a domain.

    ``values`` holds one density per cell (probability per unit measure)
    in a flat sequence; multidimensional grids go through
    :func:`flatten_multidim` first.
    """

    domain: BoundedDomain
    values: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=float)
        if arr.ndim != 1:
            raise RangeError("values must be a flat sequence; use flatten_multidim")
        if arr.size < 1:
            raise RangeError("density needs at least one cell")
        arr = _clamp_nonnegative(arr, "density")
        mass = float(arr.sum()) * (self.domain.measure / arr.size)
        if abs(mass - 1.0) > NORMALIZATION_TOL:
            raise NotNormalized(f"density integrates to {mass}, not 1")
        object.__setattr__(self, "values", _readonly(arr))

    @classmethod
    def from_pdf(cls, pdf, domain: BoundedDomain, n_cells: int = DEFAULT_GRID_CELLS) -> "GriddedDensity":
        """Sample a one-dimensional pdf at cell midpoints and renormalize.

        Matches how the reference tables treat analytic densities: the raw
        curve is evaluated on the grid, then divided by its total mass on
        the domain so the representation is a proper density.
        """
        lo, hi = domain._axis()
        if n_cells < 1:
            raise RangeError(f"n_cells must be >= 1, got {n_cells}")
        width = (hi - lo) / n_cells
        mids = lo + (np.arange(n_cells) + 0.5) * width
        raw = np.asarray(pdf(mids), dtype=float)
        if raw.shape != mids.shape:
            raw = np.broadcast_to(raw, mids.shape).astype(float)
        raw = _clamp_nonnegative(raw.copy(), "pdf values")
        total = float(raw.sum()) * width
        if total <= 0.0:
            raise ZeroTotal("pdf has zero total mass on the domain")
        return cls(domain, raw / total)

    @property
    def n_cells(self) -> int:
        return self.values.size

    @property
    def cell_measure(self) -> float:
        return self.domain.measure / self.n_cells

    @property
    def cell_width(self) -> float:
        """Cell extent along the axis (one-dimensional domains)."""
        lo, hi = self.domain._axis()
        return (hi - lo) / self.n_cells

    def midpoints(self) -> np.ndarray:
        lo, _ = self.domain._axis()
        return lo + (np.arange(self.n_cells) + 0.5) * self.cell_width

    def cell_index(self, y: float) -> int:
        lo, hi = self.domain._axis()
        if not (lo <= y <= hi):
            raise OutOfDomain(f"point {y} outside [{lo}, {hi}]")
        # y == hi belongs to the last cell.
        return min(int((y - lo) / self.cell_width), self.n_cells - 1)

    def value_at(self, y: float) -> float:
        return float(self.values[self.cell_index(y)])


@dataclass(frozen=True, eq=False)
class RearrangedDensity:
    """The non-decreasing rearrangement of a gridded density.

    Lives on the synthetic axis [0, domain_measure], split into cells of
    width ``cell_width`` whose midpoints form the t-grid.
    """

    values: np.ndarray
    domain_measure: float
    cell_width: float

    def __post_init__(self):
        arr = _readonly(self.values)
        if arr.ndim != 1 or arr.size < 1:
            raise RangeError("rearranged values must be a non-empty flat sequence")
        if np.any(np.diff(arr) < 0.0):
            raise InternalError("rearranged values are not non-decreasing")
        mass = float(arr.sum()) * self.cell_width
        if abs(mass - 1.0) > NORMALIZATION_TOL:
            raise NotNormalized(f"rearranged density integrates to {mass}, not 1")
        object.__setattr__(self, "values", arr)

    @property
    def n_cells(self) -> int:
        return self.values.size

    @property
    def t_grid(self) -> np.ndarray:
        """Cell midpoints on [0, domain_measure]."""
        return (np.arange(self.n_cells) + 0.5) * self.cell_width


@dataclass(frozen=True, eq=False)
class MassLengthCurve:
    """Remaining-mass and remaining-length curves of a rearranged density.

    Evaluated at the t-grid midpoints.  Within each cell the integrand
    ``mass - value * length`` is constant (mass and the value-length product
    fall at the same rate), so summing it times the cell width reproduces
    the exact integral on the piecewise-constant representation.
    """

    t_grid: np.ndarray
    mass: np.ndarray
    length: np.ndarray
    integrand: np.ndarray
    domain_measure: float
    cell_width: float

    def __post_init__(self):
        for name in ("t_grid", "mass", "length", "integrand"):
            object.__setattr__(self, name, _readonly(getattr(self, name)))
        if not (self.t_grid.size == self.mass.size == self.length.size == self.integrand.size):
            raise RangeError("curve arrays must share one grid")
        if np.any(np.diff(self.mass) > NONNEG_SLACK):
            raise InternalError("mass curve is not non-increasing")


def rearrange(density: GriddedDensity) -> RearrangedDensity:
    """Sort the density values ascending onto the axis [0, measure].

    Mass is preserved exactly (the value multiset is unchanged) and the
    result does not depend on the input cell order or on how a
    multidimensional grid was flattened.
    """
    ordered = np.sort(density.values, kind="stable")
    return RearrangedDensity(
        values=ordered,
        domain_measure=density.domain.measure,
        cell_width=density.cell_measure,
    )


def mass_length(d_star: RearrangedDensity) -> MassLengthCurve:
    """Build the mass and length curves of a rearranged density.

    The remaining mass at each midpoint is the exact right-to-left prefix
    sum of ``values * cell_width`` minus the half cell already passed.
    """
    v = d_star.values
    dt = d_star.cell_width
    omega = d_star.domain_measure
    t = d_star.t_grid
    suffix = np.cumsum(v[::-1])[::-1] * dt
    mass = suffix - v * (dt / 2.0)
    length = omega - t
    integrand = mass - v * length
    if abs((mass[0] + v[0] * dt / 2.0) - 1.0) > NORMALIZATION_TOL:
        raise InternalError("mass curve does not start at 1")
    if abs(mass[-1] - v[-1] * dt / 2.0) > NORMALIZATION_TOL:
        raise InternalError("mass curve does not end at 0")
    return MassLengthCurve(
        t_grid=t,
        mass=mass,
        length=length,
        integrand=integrand,
        domain_measure=omega,
        cell_width=dt,
    )


def flatten_multidim(values, domain: BoundedDomain, axis_edges=None) -> GriddedDensity:
    """Flatten a multidimensional cell grid into a one-dimensional density.

    The rearrangement only consumes the multiset of density values, so the
    flattening order is irrelevant downstream.  The returned density lives
    on a one-dimensional domain of the same total measure.

    ``axis_edges``, when given, supplies explicit per-axis bin edges; cells
    must then all carry equal measure (relative spread <= 1e-12), otherwise
    :class:`NonUniformGrid` is raised.
    """
    arr = np.asarray(values, dtype=float)
    if axis_edges is not None:
        edges = [np.asarray(e, dtype=float) for e in axis_edges]
        if len(edges) != domain.dim:
            raise RangeError(f"expected {domain.dim} edge arrays, got {len(edges)}")
        widths = [np.diff(e) for e in edges]
        shape = tuple(w.size for w in widths)
        if arr.size != prod(shape):
            raise RangeError(f"values size {arr.size} does not match edge grid {shape}")
        cell = widths[0]
        for w in widths[1:]:
            cell = np.multiply.outer(cell, w)
        spread = float(cell.max() - cell.min())
        if spread > 1e-12 * float(cell.max()):
            raise NonUniformGrid(f"cell measures vary by {spread} (relative > 1e-12)")
    flat = arr.ravel()
    return GriddedDensity(BoundedDomain.from_measure(domain.measure), flat)
