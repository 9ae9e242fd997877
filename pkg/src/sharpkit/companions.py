"""Entropy, divergence-from-uniform, and variance companions.

Sharpness isolates concentration; these standard measures sit alongside
it in the reference tables and the level-set experiments.  Discrete
quantities default to bits and continuous ones to nats, matching the
table conventions; pass ``base`` to override.
"""

import math

import numpy as np

from .core import DiscreteDistribution, GriddedDensity, validate_distribution
from .errors import LengthMismatch

__all__ = [
    "entropy_discrete",
    "kl_from_uniform_discrete",
    "variance_discrete",
    "entropy_continuous",
    "kl_from_uniform_continuous",
]


def _probs(p) -> np.ndarray:
    if isinstance(p, DiscreteDistribution):
        return p.probs
    return validate_distribution(p, policy="strict").probs


def _xlogx(values: np.ndarray) -> np.ndarray:
    # 0 * log 0 = 0 by continuity.
    out = np.zeros_like(values)
    pos = values > 0.0
    out[pos] = values[pos] * np.log(values[pos])
    return out


def entropy_discrete(p, base: float = 2.0) -> float:
    """Shannon entropy of a probability vector (bits by default)."""
    probs = _probs(p)
    return float(-_xlogx(probs).sum()) / math.log(base)


def kl_from_uniform_discrete(p, base: float = 2.0) -> float:
    """Divergence from the uniform distribution over the same outcomes.

    Equals ``log(n) - entropy`` by construction (same summation).
    """
    probs = _probs(p)
    n = probs.size
    pos = probs > 0.0
    return float((probs[pos] * np.log(probs[pos] * n)).sum()) / math.log(base)


def variance_discrete(p, values=None) -> float:
    """Variance of the outcome labels (default labels 0..n-1)."""
    probs = _probs(p)
    if values is None:
        labels = np.arange(probs.size, dtype=float)
    else:
        labels = np.asarray(values, dtype=float).ravel()
        if labels.size != probs.size:
            raise LengthMismatch(f"{labels.size} labels for {probs.size} probabilities")
    mean = float(probs @ labels)
    return float(probs @ labels**2) - mean**2


def entropy_continuous(density: GriddedDensity, base: float = math.e) -> float:
    """Differential entropy of the piecewise-constant density (nats by default)."""
    h = float(-_xlogx(density.values).sum()) * density.cell_measure
    return h / math.log(base)


def kl_from_uniform_continuous(density: GriddedDensity, base: float = math.e) -> float:
    """Divergence from the uniform density on the same domain.

    Equals ``log(measure) - entropy`` by construction.
    """
    v = density.values
    omega = density.domain.measure
    pos = v > 0.0
    kl = float((v[pos] * np.log(v[pos] * omega)).sum()) * density.cell_measure
    return kl / math.log(base)
