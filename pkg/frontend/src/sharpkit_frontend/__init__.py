"""Array-friendly wrapper and figure renderers for sharpkit.

The wrapper (:mod:`sharpkit_frontend.api`) exposes the full library
surface with plain arrays and scalars; every number comes from sharpkit
itself.  The renderers (:mod:`sharpkit_frontend.figures`) draw the
standard figures from serialized CLI reports only.
"""

from sharpkit.errors import *  # noqa: F401,F403

from .api import *  # noqa: F401,F403
from .figures import (  # noqa: F401
    SchemaVersionError,
    render_grid_heatmap,
    render_lorenz,
    render_mass_length,
    render_simplex_scatter,
)

__version__ = "0.1.0"
