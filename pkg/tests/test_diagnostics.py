import numpy as np
import pytest

from sharpkit import (
    BoundedDomain,
    GriddedDensity,
    LevelNotPresent,
    OutOfDomain,
    RangeError,
    diagnostics_report,
    gaussian_density,
    key_points,
    local_contribution,
    local_contribution_region,
    map_point,
    mass_above,
    mass_length,
    piecewise_density,
    plateau_interval,
    rearrange,
    relative_likelihood,
    relative_rank,
    sharpness_simplified,
    support_boundary,
    uniform_density,
)
from conftest import random_density

DOMAIN4 = BoundedDomain.interval(0.0, 4.0)


def two_block(n=400):
    return piecewise_density(DOMAIN4, (0.0, 2.0), (0.0, 0.5), n)


def prepared(density):
    d_star = rearrange(density)
    return density, d_star, mass_length(d_star)


class TestMapPoint:
    def test_mode_maps_to_top(self):
        # N odd so no midpoint pairs mirror around the mean exactly.
        d = gaussian_density(DOMAIN4, 2.8, 0.4, 999)
        d_star = rearrange(d)
        mp = map_point(d, d_star, 2.8)
        assert mp.t_index == d.n_cells - 1

    def test_zero_region_maps_to_leading_plateau(self):
        d, d_star, _ = prepared(two_block())
        mp = map_point(d, d_star, 1.0)
        assert mp.density == 0.0
        assert mp.t < 2.0
        assert mp.plateau is not None
        t_a, t_b = mp.plateau
        assert t_a <= mp.t <= t_b < 2.0

    def test_median_level_of_three_block_density(self):
        # Hand sort of levels (0, 0.15, 0.85): the middle level occupies
        # rearranged positions [2, 3).
        d = piecewise_density(DOMAIN4, (0.0, 2.0, 3.0), (0.0, 0.15, 0.85), 400)
        d_star = rearrange(d)
        mp = map_point(d, d_star, 2.5)
        assert 2.0 <= mp.t < 3.0
        assert mp.plateau[0] >= 2.0 and mp.plateau[1] < 3.0

    def test_out_of_domain(self):
        d, d_star, _ = prepared(two_block())
        with pytest.raises(OutOfDomain):
            map_point(d, d_star, 4.5)

    def test_plateau_contains_all_matches(self, rng):
        d = random_density(rng, n_cells=64, zero_fraction=0.5)
        d_star = rearrange(d)
        mids = d.midpoints()
        for y in mids[:: 8]:
            mp = map_point(d, d_star, float(y))
            matches = np.nonzero(d_star.values == d_star.values[mp.t_index])[0]
            if matches.size > 1:
                assert mp.plateau is not None
                t = d_star.t_grid
                assert mp.plateau[0] <= t[matches[0]] and t[matches[-1]] <= mp.plateau[1]


class TestPlateauInterval:
    def test_uniform_whole_domain(self):
        d_star = rearrange(uniform_density(DOMAIN4, 200))
        t_a, t_b = plateau_interval(d_star, 0.25)
        assert t_a == pytest.approx(d_star.t_grid[0], abs=1e-12)
        assert t_b == pytest.approx(d_star.t_grid[-1], abs=1e-12)

    def test_zero_block(self):
        _, d_star, _ = prepared(two_block())
        t_a, t_b = plateau_interval(d_star, 0.0)
        assert t_a < 0.02
        assert t_b == pytest.approx(2.0 - d_star.cell_width / 2, abs=1e-12)

    def test_absent_level(self):
        _, d_star, _ = prepared(two_block())
        with pytest.raises(LevelNotPresent):
            plateau_interval(d_star, 99.0)


class TestSupportBoundary:
    def test_fully_supported(self):
        d_star = rearrange(uniform_density(DOMAIN4, 128))
        assert support_boundary(d_star) == 0.0

    def test_two_block(self):
        _, d_star, _ = prepared(two_block())
        assert support_boundary(d_star) == pytest.approx(2.0, abs=1e-12)

    def test_single_cell_support(self):
        n = 16
        values = np.zeros(n)
        values[3] = n / 4.0
        d = GriddedDensity(DOMAIN4, values)
        d_star = rearrange(d)
        assert support_boundary(d_star) == pytest.approx(4.0 - d_star.cell_width, abs=1e-12)


class TestLocalContribution:
    def test_full_domain_recovers_score(self, rng):
        d, d_star, curve = prepared(random_density(rng, n_cells=250))
        score = sharpness_simplified(d_star)
        assert abs(local_contribution(curve, 0.0, d_star.domain_measure) - score) <= 1e-12

    def test_uniform_subinterval_is_zero(self):
        _, _, curve = prepared(uniform_density(DOMAIN4, 100))
        assert local_contribution(curve, 0.7, 3.1) <= 1e-15

    def test_zero_block_carries_whole_score(self):
        _, d_star, curve = prepared(two_block())
        assert local_contribution(curve, 0.0, 2.0) == pytest.approx(0.5, abs=1e-12)
        assert local_contribution(curve, 2.0, 4.0) == pytest.approx(0.0, abs=1e-12)

    def test_partial_cell_split_is_additive(self, rng):
        _, d_star, curve = prepared(random_density(rng, n_cells=33))
        omega = d_star.domain_measure
        cut = omega * 0.371  # lands strictly inside a cell
        total = local_contribution(curve, 0.0, cut) + local_contribution(curve, cut, omega)
        assert abs(total - local_contribution(curve, 0.0, omega)) <= 1e-12

    def test_range_error(self):
        _, _, curve = prepared(two_block())
        with pytest.raises(RangeError):
            local_contribution(curve, 3.0, 2.0)
        with pytest.raises(RangeError):
            local_contribution(curve, 0.0, 4.5)


class TestRegionContribution:
    def test_whole_domain(self, rng):
        d, d_star, curve = prepared(random_density(rng, n_cells=120, zero_fraction=0.3))
        score = sharpness_simplified(d_star)
        got = local_contribution_region(d, d_star, curve, range(d.n_cells))
        assert abs(got - score) <= 1e-9

    def test_zero_cells_match_interval_form(self):
        d, d_star, curve = prepared(two_block())
        zero_cells = np.nonzero(d.values == 0.0)[0]
        t_min = support_boundary(d_star)
        a = local_contribution_region(d, d_star, curve, zero_cells)
        b = local_contribution(curve, 0.0, t_min)
        assert abs(a - b) <= 1e-9

    def test_partition_additivity(self, rng):
        d, d_star, curve = prepared(random_density(rng, n_cells=90, zero_fraction=0.2))
        cells = rng.permutation(d.n_cells)
        parts = np.array_split(cells, 7)
        total = sum(local_contribution_region(d, d_star, curve, part) for part in parts)
        assert abs(total - sharpness_simplified(d_star)) <= 1e-9

    def test_bad_cell_index(self):
        d, d_star, curve = prepared(two_block())
        with pytest.raises(OutOfDomain):
            local_contribution_region(d, d_star, curve, [d.n_cells])


class TestMassAbove:
    def test_above_max_is_zero(self):
        _, d_star, _ = prepared(two_block())
        assert mass_above(d_star, 0.5) == 0.0
        assert mass_above(d_star, 99.0) == 0.0

    def test_zero_threshold_on_positive_density(self):
        d_star = rearrange(uniform_density(DOMAIN4, 64))
        assert mass_above(d_star, 0.0) == pytest.approx(1.0, abs=1e-12)

    def test_two_level_blocks(self):
        # Unit-length blocks at 0.15 and 0.85 on [2,4]: strictly above the
        # 0.15 level sits only the top block.  Built directly so the levels
        # are bit-exact.
        values = np.array([0.0] * 200 + [0.15] * 100 + [0.85] * 100)
        d = GriddedDensity(DOMAIN4, values)
        d_star = rearrange(d)
        assert mass_above(d_star, 0.15) == pytest.approx(0.85, abs=1e-12)

    def test_complement_identity(self, rng):
        d_star = rearrange(random_density(rng, n_cells=150, zero_fraction=0.25))
        for tau in (0.0, 0.05, 0.3, 1.0):
            at_or_below = (d_star.values[d_star.values <= tau]).sum() * d_star.cell_width
            assert abs(mass_above(d_star, tau) + at_or_below - 1.0) <= 1e-9


class TestPointScores:
    def test_relative_likelihood_reference(self):
        d = gaussian_density(BoundedDomain.interval(0.0, 5.0), 3.4, 0.8, 10_000)
        assert relative_likelihood(d, 2.0) == pytest.approx(0.216, abs=2e-3)
        assert relative_likelihood(d, 3.5) == pytest.approx(0.992, abs=2e-3)

    def test_uniform_rl_is_one(self):
        d = uniform_density(DOMAIN4, 77)
        for y in (0.0, 1.1, 4.0):
            assert relative_likelihood(d, y) == 1.0

    def test_rl_scale_free(self, rng):
        # Scaling the raw curve before normalization cannot change RL.
        d1 = GriddedDensity.from_pdf(lambda x: np.exp(-x), DOMAIN4, 100)
        d2 = GriddedDensity.from_pdf(lambda x: 7.3 * np.exp(-x), DOMAIN4, 100)
        for y in (0.3, 2.2, 3.9):
            assert relative_likelihood(d1, y) == pytest.approx(relative_likelihood(d2, y), abs=1e-12)

    def test_relative_rank_extremes(self):
        d = uniform_density(DOMAIN4, 50)
        d_star = rearrange(d)
        assert relative_rank(d, d_star, 1.0) == 0.0

        g = gaussian_density(DOMAIN4, 0.0, 1.0, 999)  # strictly decreasing on [0,4]
        g_star = rearrange(g)
        assert relative_rank(g, g_star, 0.0) == (g.n_cells - 1) / g.n_cells
        assert relative_rank(g, g_star, 4.0) == 0.0

    def test_rank_monotone_in_density(self, rng):
        d = random_density(rng, n_cells=80)
        d_star = rearrange(d)
        mids = d.midpoints()
        pts = sorted((float(y) for y in mids), key=lambda y: d.value_at(y))
        ranks = [relative_rank(d, d_star, y) for y in pts]
        assert all(a <= b + 1e-12 for a, b in zip(ranks, ranks[1:]))


class TestKeyPoints:
    def test_symmetric_gaussian(self):
        # Symmetric in the domain: mode, median, and mean coincide at the
        # center up to grid resolution.
        d = gaussian_density(DOMAIN4, 2.0, 0.5, 1001)
        pts = key_points(d, rearrange(d))
        for name in ("mode", "median", "mean"):
            assert pts[name].source_value == pytest.approx(2.0, abs=d.cell_width)

    def test_two_block_median_and_mean(self):
        # Uniform on [2,4]: median and mean both sit at 3.
        d = two_block(400)
        pts = key_points(d, rearrange(d))
        assert pts["median"].source_value == pytest.approx(3.0, abs=1e-9)
        assert pts["mean"].source_value == pytest.approx(3.0, abs=1e-9)

    def test_mode_on_top_plateau(self):
        d = piecewise_density(DOMAIN4, (0.0, 2.0, 3.0), (0.0, 0.15, 0.85), 400)
        d_star = rearrange(d)
        pts = key_points(d, d_star)
        assert pts["mode"].density == pytest.approx(0.85, abs=1e-12)
        assert pts["mode"].t >= 3.0 - 1e-9


def test_report_schema_keys(rng):
    d, d_star, curve = prepared(gaussian_density(DOMAIN4, 2.8, 0.7, 2000))
    record = diagnostics_report(d, d_star, curve, sharpness_simplified(d_star), points=[1.0, 2.5])
    assert set(record) == {
        "sharpness",
        "t_min",
        "key_points",
        "mapped_points",
        "contributions",
        "mass_above",
        "rl",
        "rank",
    }
    assert len(record["mapped_points"]) == 2
    contrib = record["contributions"]
    assert contrib["excluded_region"] + contrib["support_region"] == pytest.approx(
        record["sharpness"], abs=1e-9
    )
