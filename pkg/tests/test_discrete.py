import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sharpkit import (
    DegenerateBaseline,
    RangeError,
    relative_sharpness,
    sharpness_cumulative,
    sharpness_det,
    sharpness_discrete,
    tvd_sharpness,
)
from conftest import random_distribution

simplex_vectors = st.integers(min_value=2, max_value=24).flatmap(
    lambda n: st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=n, max_size=n)
).filter(lambda raw: sum(raw) > 1e-6).map(lambda raw: [x / sum(raw) for x in raw])


class TestDeterministic:
    def test_one_of_four_excluded(self):
        assert sharpness_det(4, 1) == pytest.approx(1 / 3, abs=1e-15)

    def test_nothing_excluded(self):
        assert sharpness_det(4, 0) == 0.0

    def test_all_but_one_excluded(self):
        assert sharpness_det(4, 3) == 1.0

    def test_range_errors(self):
        with pytest.raises(RangeError):
            sharpness_det(4, 4)
        with pytest.raises(RangeError):
            sharpness_det(1, 0)
        with pytest.raises(RangeError):
            sharpness_det(4, -1)


class TestTvd:
    def test_motivating_degeneracy(self):
        # TVD scores both of these 2/3; the cumulative measure separates
        # them (5/6 for the more concentrated one, by hand from the sorted
        # coefficients (-1, -1/3, 1/3, 1)).
        a = [0.0, 0.0, 0.5, 0.5]
        b = [0.0, 0.0, 0.25, 0.75]
        assert tvd_sharpness(a) == pytest.approx(2 / 3, abs=1e-12)
        assert tvd_sharpness(b) == pytest.approx(2 / 3, abs=1e-12)
        assert sharpness_discrete(a) == pytest.approx(2 / 3, abs=1e-12)
        assert sharpness_discrete(b) == pytest.approx(5 / 6, abs=1e-12)

    def test_uniform_scores_zero(self):
        for n in (2, 5, 13):
            assert tvd_sharpness([1.0 / n] * n) == 0.0


class TestCumulative:
    def test_reference_scores(self):
        score, _ = sharpness_cumulative([0.0, 1 / 3, 1 / 3, 1 / 3])
        assert score == pytest.approx(1 / 3, abs=1e-12)
        score, _ = sharpness_cumulative([0.25, 0.25, 0.25, 0.25])
        assert score == 0.0
        score, _ = sharpness_cumulative([0.0, 0.0, 0.0, 1.0])
        assert score == 1.0

    def test_step_fields(self):
        _, steps = sharpness_cumulative([0.0, 0.25, 0.25, 0.5])
        assert [s.j for s in steps] == [1, 2, 3]
        assert [s.length_j for s in steps] == [4, 3, 2]
        assert abs(steps[0].m_j - 1.0) <= 1e-12
        assert all(s.shortfall >= -1e-12 for s in steps)

    def test_matches_compact_form(self, rng):
        for _ in range(200):
            n = int(rng.integers(2, 65))
            p = random_distribution(rng, n)
            score, _ = sharpness_cumulative(p)
            assert abs(score - sharpness_discrete(p)) <= 1e-12


class TestCompact:
    def test_reference_scores(self):
        assert sharpness_discrete([0.0, 0.0, 0.3, 0.7]) == pytest.approx(0.800, abs=1e-12)
        assert sharpness_discrete([0.16, 0.0, 0.0, 0.84]) == pytest.approx(0.8933333333333333, abs=1e-12)
        assert sharpness_discrete([0.24, 0.24, 0.28, 0.24]) == pytest.approx(0.040, abs=1e-12)

    def test_seven_outcome_scale_example(self):
        # Five equally likely outcomes of seven: score 1/3 while entropy
        # sits near 2.3 bits, the scale contrast discussed alongside the
        # reference table.
        p = [0.0, 0.0, 0.2, 0.2, 0.2, 0.2, 0.2]
        assert sharpness_discrete(p) == pytest.approx(1 / 3, abs=1e-12)

    @given(simplex_vectors)
    @settings(max_examples=200, deadline=None)
    def test_normalized_to_unit_interval(self, p):
        assert 0.0 <= sharpness_discrete(p) <= 1.0

    @given(simplex_vectors)
    @settings(max_examples=100, deadline=None)
    def test_permutation_invariance(self, p):
        rolled = p[1:] + p[:1]
        assert sharpness_discrete(p) == pytest.approx(sharpness_discrete(rolled), abs=1e-12)

    def test_zero_iff_uniform(self, rng):
        for n in (2, 3, 17):
            assert sharpness_discrete([1.0 / n] * n) == pytest.approx(0.0, abs=1e-12)
        for _ in range(50):
            p = random_distribution(rng, 6)
            if np.ptp(p) > 1e-6:
                assert sharpness_discrete(p) > 0.0

    def test_one_iff_degenerate(self):
        assert sharpness_discrete([0.0, 1.0, 0.0]) == 1.0
        assert sharpness_discrete([0.0, 0.999, 0.001]) < 1.0

    def test_deterministic_consistency(self, rng):
        # r zeros plus uniform mass on the rest scores exactly r/(n-1).
        for _ in range(30):
            n = int(rng.integers(3, 40))
            r = int(rng.integers(0, n - 1))
            p = np.zeros(n)
            p[r:] = 1.0 / (n - r)
            assert abs(sharpness_discrete(p) - sharpness_det(n, r)) <= 1e-12


class TestRelativeSharpness:
    def test_reference_gain(self):
        assert relative_sharpness(0.98, 0.999) == pytest.approx(0.95, abs=1e-12)

    def test_no_gain(self):
        assert relative_sharpness(0.4, 0.4) == 0.0

    def test_full_gain(self):
        assert relative_sharpness(0.3, 1.0) == 1.0

    def test_decreasing_scores_rejected(self):
        with pytest.raises(RangeError):
            relative_sharpness(0.8, 0.7)

    def test_degenerate_baseline(self):
        with pytest.raises(DegenerateBaseline):
            relative_sharpness(1.0, 1.0)

    @given(
        st.floats(min_value=0.0, max_value=0.99),
        st.floats(min_value=0.0, max_value=1.0),
    )
    @settings(max_examples=100, deadline=None)
    def test_open_interval_property(self, s1, gap):
        s2 = s1 + (1.0 - s1) * gap
        out = relative_sharpness(s1, s2)
        assert 0.0 <= out <= 1.0
