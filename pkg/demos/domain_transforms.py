"""Walkthrough: comparing sharpness across different domain definitions.

A score always refers to a domain.  Extending the domain with
zero-probability outcomes rescales the score mechanically, and the
transform formulas move scores between those normalizations without
recomputing the distribution.

Run:  python demos/domain_transforms.py
"""

import numpy as np

from sharpkit import (
    BoundedDomain,
    GriddedDensity,
    continuous_forward,
    continuous_inverse,
    discrete_forward,
    discrete_inverse,
    gaussian_density,
    sharpness_density,
    sharpness_discrete,
)


def main():
    p = [0.0, 0.0, 0.5, 0.5]
    s4 = sharpness_discrete(p)
    print(f"S({p}) over 4 outcomes = {s4:.4f}")

    s7 = discrete_forward(s4, 4, 7)
    direct = sharpness_discrete(p + [0.0, 0.0, 0.0])
    print(f"embedded in 7 outcomes: transform {s7:.4f} vs direct {direct:.4f}")

    s2 = discrete_inverse(s4, 4, 2)
    print(f"restricted to its 2-outcome support: {s2:.4f} (uniform there)")

    print("\ncontinuous: gaussian on [0, 4] extended to [0, 8]")
    domain = BoundedDomain.interval(0.0, 4.0)
    d = gaussian_density(domain, 2.8, 1.0, 4000)
    s_small = sharpness_density(d)
    s_large = continuous_forward(s_small, 4.0, 8.0)
    padded = GriddedDensity(
        BoundedDomain.interval(0.0, 8.0), np.concatenate([d.values, np.zeros(4000)])
    )
    print(f"  S on [0,4] = {s_small:.4f}")
    print(f"  transform to [0,8]: {s_large:.4f} vs direct zero-padded grid {sharpness_density(padded):.4f}")
    print(f"  back to [0,4]: {continuous_inverse(s_large, 8.0, 4.0):.4f}")

    print("\nround trips are identities:")
    for x in (0.0, 0.25, 0.5, 0.99):
        rt = discrete_inverse(discrete_forward(x, 3, 12), 12, 3)
        print(f"  {x:.2f} -> forward(3,12) -> inverse = {rt:.12f}")


if __name__ == "__main__":
    main()
