import math

import numpy as np
import pytest

from sharpkit import (
    BoundedDomain,
    GriddedDensity,
    LengthMismatch,
    entropy_continuous,
    entropy_discrete,
    gaussian_density,
    kl_from_uniform_continuous,
    kl_from_uniform_discrete,
    piecewise_density,
    rearrange,
    uniform_density,
    variance_discrete,
)
from conftest import random_density, random_distribution

DOMAIN = BoundedDomain.interval(0.0, 4.0)


class TestDiscrete:
    def test_uniform_entropy(self):
        assert entropy_discrete([0.25] * 4) == pytest.approx(2.0, abs=1e-12)

    def test_reference_rows(self):
        assert entropy_discrete([0, 0, 0.3, 0.7]) == pytest.approx(0.881, abs=1e-3)
        assert kl_from_uniform_discrete([0, 0, 0.01, 0.99]) == pytest.approx(1.919, abs=1e-3)
        assert kl_from_uniform_discrete([0, 1 / 3, 1 / 3, 1 / 3]) == pytest.approx(0.415, abs=1e-3)

    def test_degenerate(self):
        assert entropy_discrete([0, 0, 0, 1.0]) == 0.0
        assert kl_from_uniform_discrete([1.0, 0.0]) == pytest.approx(1.0, abs=1e-12)

    def test_kl_entropy_identity(self, rng):
        for _ in range(100):
            p = random_distribution(rng, int(rng.integers(2, 20)))
            lhs = kl_from_uniform_discrete(p)
            rhs = math.log2(p.size) - entropy_discrete(p)
            assert abs(lhs - rhs) <= 1e-12

    def test_base_parameter(self):
        p = [0.1, 0.9]
        assert entropy_discrete(p, base=math.e) == pytest.approx(
            entropy_discrete(p) * math.log(2.0), abs=1e-12
        )

    def test_variance_reference_rows(self):
        assert variance_discrete([0.25] * 4) == pytest.approx(1.25, abs=1e-12)
        assert variance_discrete([0.24, 0.24, 0.28, 0.24]) == pytest.approx(1.2096, abs=1e-12)
        assert variance_discrete([0, 0, 0, 1.0]) == 0.0

    def test_variance_of_highly_concentrated_row(self):
        # By hand with labels (0,1,2,3): E = 2.99, E[x^2] = 8.95, so the
        # variance is exactly 0.0099.  The reference table prints 0.001
        # for this row, which is a misprint (see README).
        assert variance_discrete([0, 0, 0.01, 0.99]) == pytest.approx(0.0099, abs=1e-12)

    def test_variance_custom_labels(self):
        assert variance_discrete([0.5, 0.5], values=[-1.0, 1.0]) == pytest.approx(1.0, abs=1e-12)
        with pytest.raises(LengthMismatch):
            variance_discrete([0.5, 0.5], values=[0.0, 1.0, 2.0])


class TestContinuous:
    def test_uniform_entropy_is_log_measure(self):
        d = uniform_density(DOMAIN, 500)
        assert entropy_continuous(d) == pytest.approx(math.log(4.0), abs=1e-12)
        assert kl_from_uniform_continuous(d) == pytest.approx(0.0, abs=1e-12)

    def test_two_block_kl(self):
        d = piecewise_density(DOMAIN, (0.0, 2.0), (0.0, 0.5), 500)
        assert kl_from_uniform_continuous(d) == pytest.approx(math.log(2.0), abs=1e-12)

    def test_narrow_gaussian_reference(self):
        d = gaussian_density(DOMAIN, 2.8, 0.01, 200_000)
        assert kl_from_uniform_continuous(d) == pytest.approx(4.573, abs=1e-2)

    def test_kl_entropy_identity(self, rng):
        for _ in range(50):
            d = random_density(rng, n_cells=int(rng.integers(5, 200)))
            lhs = kl_from_uniform_continuous(d)
            rhs = math.log(d.domain.measure) - entropy_continuous(d)
            assert abs(lhs - rhs) <= 1e-12

    def test_entropy_rearrangement_invariant(self, rng):
        d = random_density(rng, n_cells=333, zero_fraction=0.2)
        d_star = rearrange(d)
        rearranged = GriddedDensity(BoundedDomain.from_measure(d.domain.measure), d_star.values)
        assert abs(entropy_continuous(d) - entropy_continuous(rearranged)) <= 1e-12

    def test_base_parameter(self):
        d = gaussian_density(DOMAIN, 2.8, 0.5, 1000)
        assert entropy_continuous(d, base=2.0) == pytest.approx(
            entropy_continuous(d) / math.log(2.0), abs=1e-12
        )
