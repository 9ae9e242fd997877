"""Sharpness measures for finite outcome spaces.

Scores run from 0 (uniform, maximally vague) to 1 (all mass on a single
outcome).  Two equivalent formulations are provided: a cumulative form
that exposes the per-step decomposition, and a compact sorted-coefficient
form for fast evaluation.
"""

from dataclasses import dataclass

import numpy as np

from .core import DiscreteDistribution, clamp_unit, validate_distribution
from .errors import DegenerateBaseline, RangeError

__all__ = [
    "CumulativeStep",
    "sharpness_det",
    "tvd_sharpness",
    "sharpness_cumulative",
    "sharpness_discrete",
    "relative_sharpness",
]


@dataclass(frozen=True)
class CumulativeStep:
    """One step of the cumulative sharpness decomposition.

    At step ``j`` (over ascending-sorted probabilities), ``m_j`` is the
    probability mass still unaccounted for, ``length_j`` the number of
    remaining outcomes, and ``shortfall`` how far the current probability
    undercuts a uniform split of that remaining mass.
    """

    j: int
    p_j: float
    m_j: float
    length_j: int
    shortfall: float


def _as_distribution(p) -> DiscreteDistribution:
    if isinstance(p, DiscreteDistribution):
        return p
    return validate_distribution(p, policy="strict")


def sharpness_det(n: int, r: int) -> float:
    """Deterministic sharpness: fraction of ruled-out outcomes, r/(n-1)."""
    if n < 2:
        raise RangeError(f"need n >= 2 outcomes, got {n}")
    if not 0 <= r <= n - 1:
        raise RangeError(f"excluded count {r} outside [0, {n - 1}]")
    return r / (n - 1)


def tvd_sharpness(p) -> float:
    """Normalized total variation distance from the uniform distribution.

    A first-approximation concentration score; it cannot separate
    distributions that differ only in how mass is spread within their
    support, which is what :func:`sharpness_discrete` adds.
    """
    dist = _as_distribution(p)
    n = dist.n
    score = float(np.abs(dist.probs - 1.0 / n).sum()) / (2.0 * (1.0 - 1.0 / n))
    return clamp_unit(score)


def sharpness_cumulative(p) -> tuple[float, list[CumulativeStep]]:
    """Sharpness via the stepwise shortfall decomposition.

    Walks the probabilities in ascending order; at each of the first
    ``n - 1`` steps the local shortfall ``m_j - p_j * L_j`` measures how
    much mass the current outcome cedes to more probable ones.  The score
    is the mean shortfall.  Returns ``(score, steps)``.
    """
    dist = _as_distribution(p)
    n = dist.n
    ordered = np.sort(dist.probs, kind="stable")
    remaining = np.cumsum(ordered[::-1])[::-1]
    lengths = n - np.arange(n) # L_j = n - j + 1 with j starting at 1
    shortfalls = remaining - ordered * lengths
    steps = [
        CumulativeStep(
            j=j + 1,
            p_j=float(ordered[j]),
            m_j=float(remaining[j]),
            length_j=int(lengths[j]),
            shortfall=float(shortfalls[j]),
        )
        for j in range(n - 1)
    ]
    score = float(shortfalls[: n - 1].sum()) / (n - 1)
    return clamp_unit(score), steps


def sharpness_discrete(p) -> float:
    """Sharpness in the compact sorted-coefficient form.

    Equivalent to :func:`sharpness_cumulative` (the per-step sums collapse
    onto a coefficient ``(2j - n - 1)/(n - 1)`` for the j-th smallest
    probability) but without the decomposition.
    """
    dist = _as_distribution(p)
    n = dist.n
    ordered = np.sort(dist.probs, kind="stable")
    j = np.arange(1, n + 1)
    coeff = (2.0 * j - n - 1.0) / (n - 1.0)
    return clamp_unit(float(coeff @ ordered))


def relative_sharpness(s1: float, s2: float) -> float:
    """Relative sharpness gain (s2 - s1) / (1 - s1).

    Quantifies how much of the remaining headroom above the baseline
    score ``s1`` the new score ``s2`` captures: 0 iff the scores are
    equal, 1 iff ``s2`` reaches a point prediction.
    """
    s1, s2 = float(s1), float(s2)
    if not (0.0 <= s1 <= 1.0 and 0.0 <= s2 <= 1.0):
        raise RangeError(f"scores must lie in [0, 1], got ({s1}, {s2})")
    if s2 < s1:
        raise RangeError(f"baseline {s1} exceeds new score {s2}")
    if s1 == 1.0:
        raise DegenerateBaseline("relative gain undefined from a baseline of 1")
    return clamp_unit((s2 - s1) / (1.0 - s1))
