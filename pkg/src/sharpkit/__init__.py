"""Predictive sharpness for probabilistic models.

Sharpness measures how strongly a prediction concentrates probability
mass over its outcome space: 0 for the uniform distribution, 1 for a
point prediction.  The package covers finite outcome spaces, bounded
continuous (including multidimensional) domains via the non-decreasing
rearrangement of the density, score transformations across domain sizes,
a Lorenz/Gini representation, rearranged-space diagnostics, an
ensemble-grid workflow, and simplex level-set experiments.
"""

from .companions import (
    entropy_continuous,
    entropy_discrete,
    kl_from_uniform_continuous,
    kl_from_uniform_discrete,
    variance_discrete,
)
from .continuous import (
    sharpness_density,
    sharpness_integral,
    sharpness_simplified,
    sharpness_uniform_subset,
)
from .core import (
    DEFAULT_GRID_CELLS,
    BoundedDomain,
    DiscreteDistribution,
    GriddedDensity,
    MassLengthCurve,
    RearrangedDensity,
    flatten_multidim,
    mass_length,
    rearrange,
    validate_distribution,
)
from .diagnostics import (
    MappedPoint,
    diagnostics_report,
    key_points,
    local_contribution,
    local_contribution_region,
    map_point,
    mass_above,
    plateau_interval,
    relative_likelihood,
    relative_rank,
    support_boundary,
)
from .discrete import (
    CumulativeStep,
    relative_sharpness,
    sharpness_cumulative,
    sharpness_det,
    sharpness_discrete,
    tvd_sharpness,
)
from .ensemble import (
    CellReport,
    EnsembleGrid,
    SharpnessSeries,
    density_from_samples,
    grid_sharpness_map,
    rainfall_demo_grid,
    sharpness_timeseries,
)
from .errors import (
    AllZero,
    DegenerateBaseline,
    EmptyLevelSet,
    EmptySample,
    InternalError,
    LengthMismatch,
    LevelNotPresent,
    NegativeMass,
    NonUniformGrid,
    NotNormalized,
    OutOfDomain,
    OutOfRangeResult,
    RangeError,
    SampleOutOfDomain,
    ShapeMismatch,
    SharpKitError,
    ZeroTotal,
)
from .gini import LorenzCurve, lorenz, sharpness_gini
from .levelset import LevelSetExtrema, LevelSetQuery, level_set_extrema, sample_simplex
from .presets import (
    gaussian_density,
    gaussian_mixture_density,
    piecewise_density,
    uniform_density,
)
from .transforms import (
    continuous_forward,
    continuous_inverse,
    discrete_forward,
    discrete_inverse,
)

__version__ = "0.1.0"

__all__ = [
    "BoundedDomain",
    "DiscreteDistribution",
    "GriddedDensity",
    "RearrangedDensity",
    "MassLengthCurve",
    "LorenzCurve",
    "MappedPoint",
    "CumulativeStep",
    "EnsembleGrid",
    "CellReport",
    "SharpnessSeries",
    "LevelSetQuery",
    "LevelSetExtrema",
    "DEFAULT_GRID_CELLS",
    "validate_distribution",
    "rearrange",
    "mass_length",
    "flatten_multidim",
    "sharpness_det",
    "tvd_sharpness",
    "sharpness_cumulative",
    "sharpness_discrete",
    "relative_sharpness",
    "sharpness_integral",
    "sharpness_simplified",
    "sharpness_uniform_subset",
    "sharpness_density",
    "discrete_forward",
    "discrete_inverse",
    "continuous_forward",
    "continuous_inverse",
    "lorenz",
    "sharpness_gini",
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
    "entropy_discrete",
    "kl_from_uniform_discrete",
    "variance_discrete",
    "entropy_continuous",
    "kl_from_uniform_continuous",
    "density_from_samples",
    "grid_sharpness_map",
    "sharpness_timeseries",
    "rainfall_demo_grid",
    "sample_simplex",
    "level_set_extrema",
    "uniform_density",
    "gaussian_density",
    "gaussian_mixture_density",
    "piecewise_density",
    "SharpKitError",
    "NegativeMass",
    "NotNormalized",
    "ZeroTotal",
    "NonUniformGrid",
    "RangeError",
    "DegenerateBaseline",
    "OutOfRangeResult",
    "OutOfDomain",
    "LevelNotPresent",
    "AllZero",
    "LengthMismatch",
    "SampleOutOfDomain",
    "EmptySample",
    "ShapeMismatch",
    "EmptyLevelSet",
    "InternalError",
]
