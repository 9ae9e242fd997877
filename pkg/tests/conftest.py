import numpy as np
import pytest

from sharpkit import BoundedDomain, GriddedDensity


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)


def random_density(rng, n_cells=512, zero_fraction=0.0, lo=None, hi=None) -> GriddedDensity:
    """A random valid gridded density, optionally with exact-zero cells."""
    if lo is None:
        lo = rng.uniform(-5.0, 5.0)
    if hi is None:
        hi = lo + rng.uniform(0.5, 10.0)
    values = rng.gamma(shape=0.8, scale=1.0, size=n_cells)
    if zero_fraction > 0.0:
        mask = rng.random(n_cells) < zero_fraction
        if mask.all():
            mask[rng.integers(n_cells)] = False
        values[mask] = 0.0
    domain = BoundedDomain.interval(lo, hi)
    width = (hi - lo) / n_cells
    return GriddedDensity(domain, values / (values.sum() * width))


def random_distribution(rng, n) -> np.ndarray:
    return rng.dirichlet(np.ones(n))
