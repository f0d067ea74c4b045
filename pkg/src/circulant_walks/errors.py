"""Exception types raised by the library.

Every exception derives from CirculantError so callers (and the CLI) can
catch library failures with a single except clause.
"""


class CirculantError(Exception):
    """Base class for all errors raised by circulant_walks."""


# graph construction / divisor structure


class InvalidOrder(CirculantError):
    """Graph order n is below 2 or not an integer."""


class EmptySet(CirculantError):
    """Connection set is empty after reduction mod n."""


class ContainsZero(CirculantError):
    """Connection set contains 0 mod n (loops are not allowed)."""


class NotSymmetric(CirculantError):
    """Connection set lacks n - s for some member s."""


class NotADivisor(CirculantError):
    """d is not a proper divisor of n."""


# spectra


class IndexOutOfRange(CirculantError):
    """Eigenvalue index outside 0..n-1."""


class NotPowerOfTwo(CirculantError):
    """Order (or divisor) is not a power of two of the required size."""


class RatioTooSmall(CirculantError):
    """n / d fell below the minimum the half-phase construction needs."""


# dynamics


class VertexOutOfRange(CirculantError):
    """Vertex index outside 0..n-1."""


class OrderTooLarge(CirculantError):
    """Full-matrix operation requested above the configured order cap."""


class SetsNotDisjoint(CirculantError):
    """Product-law check requires disjoint connection sets."""


# time-lattice search


class LengthMismatch(CirculantError):
    """Phase targets and eigenvalue lists have different lengths."""


class EmptyRange(CirculantError):
    """Lattice index range is empty."""


class RangeTooLarge(CirculantError):
    """Lattice scan exceeds the configured point cap."""


# cli


class EmptyRecords(CirculantError):
    """CSV emission called with no records."""
