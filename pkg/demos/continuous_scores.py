"""Walkthrough: sharpness of continuous densities on a bounded interval.

Evaluates the reference family on [0, 4] through all three equivalent
routes (mass-length integral, simplified first-moment form, Gini form)
and demonstrates the multidimensional case on the unit cube.

Run:  python demos/continuous_scores.py
"""

import numpy as np

from sharpkit import (
    BoundedDomain,
    entropy_continuous,
    flatten_multidim,
    gaussian_density,
    gaussian_mixture_density,
    kl_from_uniform_continuous,
    lorenz,
    mass_length,
    piecewise_density,
    rearrange,
    sharpness_gini,
    sharpness_integral,
    sharpness_simplified,
    uniform_density,
)

DOMAIN = BoundedDomain.interval(0.0, 4.0)
N = 50_000


def main():
    family = [
        ("uniform", uniform_density(DOMAIN, N)),
        ("gaussian mu=2.8 sigma=1", gaussian_density(DOMAIN, 2.8, 1.0, N)),
        ("mixture 0.5/0.5", gaussian_mixture_density(DOMAIN, [(0.5, 1.2, 0.3), (0.5, 3.0, 0.4)], N)),
        ("mixture 0.6/0.4", gaussian_mixture_density(DOMAIN, [(0.6, 1.2, 0.3), (0.4, 3.0, 0.4)], N)),
        ("block 0 | 0.5", piecewise_density(DOMAIN, (0.0, 2.0), (0.0, 0.5), N)),
        ("gaussian sigma=0.5", gaussian_density(DOMAIN, 2.8, 0.5, N)),
        ("blocks 0 | .15 | .85", piecewise_density(DOMAIN, (0.0, 2.0, 3.0), (0.0, 0.15, 0.85), N)),
        ("gaussian sigma=0.1", gaussian_density(DOMAIN, 2.8, 0.1, N)),
        ("gaussian sigma=0.01", gaussian_density(DOMAIN, 2.8, 0.01, N)),
    ]
    print(f"{'density':<24} {'S(int)':>7} {'S(simp)':>8} {'S(gini)':>8} {'H(nats)':>8} {'KL':>6}")
    for name, density in family:
        d_star = rearrange(density)
        print(
            f"{name:<24}"
            f" {sharpness_integral(mass_length(d_star)):>7.4f}"
            f" {sharpness_simplified(d_star):>8.4f}"
            f" {sharpness_gini(lorenz(d_star)):>8.4f}"
            f" {entropy_continuous(density):>8.3f}"
            f" {kl_from_uniform_continuous(density):>6.3f}"
        )

    print("\npoint-prediction limit: shrinking blocks at the domain edge")
    for delta in (0.4, 0.04, 0.004):
        d = piecewise_density(DOMAIN, (0.0, 4.0 - delta), (0.0, 1.0 / delta), 10_000)
        print(f"  width {delta:>6}: S = {sharpness_simplified(rearrange(d)):.4f}")

    print("\nmultidimensional: 99% of mass on one octant of the unit cube")
    cube = BoundedDomain(((0.0, 1.0),) * 3)
    values = np.full((2, 2, 2), 0.01 / (0.125 * 7))
    values[0, 0, 0] = 0.99 / 0.125
    score = sharpness_simplified(rearrange(flatten_multidim(values, cube)))
    print(f"  S = {score:.3f} (hard exclusion of 7/8 of the space would score 0.875)")


if __name__ == "__main__":
    main()
