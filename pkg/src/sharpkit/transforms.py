"""Sharpness-score transformations across domain sizes and measures.

A distribution embedded in a larger domain (extra zero-probability
outcomes, or zero-density regions) has a mechanically rescaled score;
these maps move a score between the two normalizations without needing
the distribution itself.  The inverses assume the mass outside the small
domain really is zero -- that cannot be checked from a bare score, so an
impossible output raises :class:`OutOfRangeResult` instead.
"""

from .errors import OutOfRangeResult, RangeError

__all__ = [
    "discrete_forward",
    "discrete_inverse",
    "continuous_forward",
    "continuous_inverse",
]

_RESULT_SLACK = 1e-12


def _check_score(s: float, name: str = "score") -> float:
    s = float(s)
    if not 0.0 <= s <= 1.0:
        raise RangeError(f"{name} {s} outside [0, 1]")
    return s


def _check_sizes(m: int, n: int) -> tuple[int, int]:
    m, n = int(m), int(n)
    if not 2 <= m < n:
        raise RangeError(f"need 2 <= m < n, got m={m}, n={n}")
    return m, n


def _check_measures(small: float, large: float) -> tuple[float, float]:
    small, large = float(small), float(large)
    if not 0.0 < small < large:
        raise RangeError(f"need 0 < small < large measure, got {small}, {large}")
    return small, large


def _bounded_result(s: float) -> float:
    if -_RESULT_SLACK <= s < 0.0:
        return 0.0
    if 1.0 < s <= 1.0 + _RESULT_SLACK:
        return 1.0
    if s < 0.0 or s > 1.0:
        raise OutOfRangeResult(
            f"transformed score {s} outside [0, 1]; the zero-mass precondition did not hold"
        )
    return s


def discrete_forward(s_m: float, m: int, n: int) -> float:
    """Score of a size-m distribution re-read over n > m outcomes."""
    s_m = _check_score(s_m, "s_m")
    m, n = _check_sizes(m, n)
    return 1.0 + (m - 1) / (n - 1) * (s_m - 1.0)


def discrete_inverse(s_n: float, n: int, m: int) -> float:
    """Score restricted from n outcomes down to m < n.

    Valid only when the size-n distribution put zero mass on at least
    ``n - m`` outcomes (caller-asserted).
    """
    s_n = _check_score(s_n, "s_n")
    m, n = _check_sizes(m, n)
    return _bounded_result(1.0 + (n - 1) / (m - 1) * (s_n - 1.0))


def continuous_forward(s_small: float, small_measure: float, large_measure: float) -> float:
    """Score of a density extended by zero onto a larger-measure domain."""
    s_small = _check_score(s_small, "s_small")
    small, large = _check_measures(small_measure, large_measure)
    return 1.0 + (small / large) * (s_small - 1.0)


def continuous_inverse(s_large: float, large_measure: float, small_measure: float) -> float:
    """Score restricted to a smaller-measure domain.

    Valid only when the density vanishes outside the small domain
    (caller-asserted).
    """
    s_large = _check_score(s_large, "s_large")
    small, large = _check_measures(small_measure, large_measure)
    return _bounded_result(1.0 + (large / small) * (s_large - 1.0))
