"""Walkthrough: sharpness of finite predictive distributions.

Scores a family of four-outcome predictions, shows why plain total
variation distance is too coarse, unpacks the cumulative decomposition,
and measures the relative gain between two forecasts.

Run:  python demos/discrete_scores.py
"""

from sharpkit import (
    entropy_discrete,
    kl_from_uniform_discrete,
    relative_sharpness,
    sharpness_cumulative,
    sharpness_discrete,
    tvd_sharpness,
    variance_discrete,
)

FAMILY = [
    (0.25, 0.25, 0.25, 0.25),
    (0.24, 0.24, 0.28, 0.24),
    (0.0, 1 / 3, 1 / 3, 1 / 3),
    (0.0, 0.25, 0.25, 0.5),
    (0.0, 0.0, 0.4, 0.6),
    (0.0, 0.0, 0.3, 0.7),
    (0.16, 0.0, 0.0, 0.84),
    (0.0, 0.0, 0.1, 0.9),
    (0.0, 0.0, 0.01, 0.99),
    (0.0, 0.0, 0.0, 1.0),
]


def main():
    print("sharpness vs entropy / divergence / variance over 4 outcomes")
    print(f"{'distribution':<28} {'S':>6} {'H(bits)':>8} {'KL':>6} {'Var':>7}")
    for probs in FAMILY:
        print(
            f"{str(list(probs)):<28} {sharpness_discrete(probs):>6.3f}"
            f" {entropy_discrete(probs):>8.3f}"
            f" {kl_from_uniform_discrete(probs):>6.3f}"
            f" {variance_discrete(probs):>7.4f}"
        )

    print("\nwhy TVD is not enough: both of these score 2/3 under TVD")
    for probs in ((0.0, 0.0, 0.5, 0.5), (0.0, 0.0, 0.25, 0.75)):
        print(
            f"  {list(probs)}: TVD_S = {tvd_sharpness(probs):.4f},"
            f" S = {sharpness_discrete(probs):.4f}"
        )

    print("\ncumulative decomposition of {0, 0.25, 0.25, 0.5}:")
    score, steps = sharpness_cumulative((0.0, 0.25, 0.25, 0.5))
    for s in steps:
        print(
            f"  step {s.j}: p=({s.p_j:.2f}) remaining mass {s.m_j:.2f}"
            f" over {s.length_j} outcomes -> shortfall {s.shortfall:.3f}"
        )
    print(f"  mean shortfall = S = {score:.3f}")

    print("\nrelative gain: refining S=0.98 to S=0.999 captures")
    print(f"  {relative_sharpness(0.98, 0.999):.0%} of the available improvement")


if __name__ == "__main__":
    main()
