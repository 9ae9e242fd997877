import csv

import numpy as np
import pytest

from sharpkit import (
    BoundedDomain,
    GriddedDensity,
    gaussian_density,
    lorenz,
    piecewise_density,
    rearrange,
    sharpness_gini,
    sharpness_simplified,
    uniform_density,
)
from sharpkit.reports import write_lorenz_csv
from conftest import random_density

DOMAIN = BoundedDomain.interval(0.0, 4.0)


class TestLorenzCurve:
    def test_uniform_is_diagonal(self):
        curve = lorenz(rearrange(uniform_density(DOMAIN, 100)))
        assert np.allclose(curve.values, curve.u_grid, atol=1e-12)

    def test_two_block_prefms(self):
        # Hand prefix sums: no mass until u = 0.5, then linear to 1, so the
        # curve sits at 0.5 when u = 0.75.
        curve = lorenz(rearrange(piecewise_density(DOMAIN, (0.0, 2.0), (0.0, 0.5), 400)))
        at = lambda u: curve.values[np.searchsorted(curve.u_grid, u)]
        assert at(0.25) == pytest.approx(0.0, abs=1e-12)
        assert at(0.5) == pytest.approx(0.0, abs=1e-12)
        assert at(0.75) == pytest.approx(0.5, abs=1e-12)

    def test_total_mass(self, rng):
        curve = lorenz(rearrange(random_density(rng)))
        assert curve.values[-1] == pytest.approx(1.0, abs=1e-9)

    def test_resampled_grid(self, rng):
        curve = lorenz(rearrange(random_density(rng, n_cells=64)), m_points=17)
        assert curve.u_grid.size == 17
        assert curve.values[0] == 0.0 and curve.values[-1] == pytest.approx(1.0, abs=1e-9)

    def test_below_diagonal(self, rng):
        curve = lorenz(rearrange(random_density(rng, zero_fraction=0.4)))
        assert np.all(curve.values <= curve.u_grid + 1e-9)


class TestGiniScore:
    def test_uniform_zero(self):
        assert sharpness_gini(lorenz(rearrange(uniform_density(DOMAIN, 256)))) == pytest.approx(
            0.0, abs=1e-12
        )

    def test_gaussian_reference_value(self):
        d_star = rearrange(gaussian_density(DOMAIN, 2.8, 0.5, 100_000))
        assert sharpness_gini(lorenz(d_star)) == pytest.approx(0.610, abs=5e-3)

    def test_matches_simplified_form(self, rng):
        for _ in range(200):
            d_star = rearrange(random_density(rng, n_cells=int(rng.integers(4, 500))))
            assert abs(sharpness_gini(lorenz(d_star)) - sharpness_simplified(d_star)) <= 2e-4

    def test_permutation_invariance(self, rng):
        d = random_density(rng, n_cells=128)
        shuffled = GriddedDensity(d.domain, rng.permutation(d.values))
        a = sharpness_gini(lorenz(rearrange(d)))
        b = sharpness_gini(lorenz(rearrange(shuffled)))
        assert a == pytest.approx(b, abs=1e-12)


def test_lorenz_csv_export(tmp_path, rng):
    curve = lorenz(rearrange(random_density(rng, n_cells=32)))
    path = tmp_path / "lorenz.csv"
    write_lorenz_csv(curve, path)
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["u", "L"]
    assert len(rows) == curve.u_grid.size + 1
    back = np.array([[float(a), float(b)] for a, b in rows[1:]])
    assert np.array_equal(back[:, 0], curve.u_grid)
    assert np.array_equal(back[:, 1], curve.values)
