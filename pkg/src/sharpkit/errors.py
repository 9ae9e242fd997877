"""Exception taxonomy.

Every error raised by the library derives from :class:`SharpKitError`.
Input-side problems (bad distributions, out-of-domain points, violated
preconditions) map to CLI exit code 2; :class:`InternalError` signals a
violated numerical invariant and maps to exit code 3.
"""


class SharpKitError(Exception):
    """Base class for all sharpkit errors."""


class NegativeMass(SharpKitError):
    """A probability or density entry is negative beyond round-off slack."""


class NotNormalized(SharpKitError):
    """Total mass differs from 1 beyond the normalization tolerance."""


class ZeroTotal(SharpKitError):
    """Renormalization requested for a sequence with non-positive total."""


class NonUniformGrid(SharpKitError):
    """Grid cells do not all carry the same measure."""


class RangeError(SharpKitError):
    """A scalar argument violates its documented range."""


class DegenerateBaseline(SharpKitError):
    """Relative gain is undefined from a baseline score of exactly 1."""


class OutOfRangeResult(SharpKitError):
    """An inverse transform produced a score outside [0, 1].

    Signals that the zero-mass precondition on the restricted domain did
    not actually hold for the distribution behind the input score.
    """


class OutOfDomain(SharpKitError):
    """A queried outcome point or cell lies outside the domain."""


class LevelNotPresent(SharpKitError):
    """No grid cell matches the requested density level."""


class AllZero(SharpKitError):
    """Density has no strictly positive cell (invalid upstream)."""


class LengthMismatch(SharpKitError):
    """Outcome labels and probabilities have different lengths."""


class SampleOutOfDomain(SharpKitError):
    """An ensemble sample falls outside the declared domain bounds."""


class EmptySample(SharpKitError):
    """A sample sequence is empty or too small to use."""


class ShapeMismatch(SharpKitError):
    """Grids of different shapes were combined."""


class EmptyLevelSet(SharpKitError):
    """No sampled distribution satisfied the level-set constraint."""


class InternalError(SharpKitError):
    """A computed value violated an invariant beyond round-off slack."""
