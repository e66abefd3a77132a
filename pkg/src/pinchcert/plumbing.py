"""Log-domain translation between curve lengths and node-parameter magnitudes.

Near a maximally degenerate boundary surface, each pinching curve carries a
local analytic parameter t with 0 < |t| < 1, and at leading order the
hyperbolic length of the curve determines the magnitude through

    length = 2 * pi**2 / log(1 / |t|).

Everything downstream only ever needs |t|, and |t| is far too small to hold
in linear scale (it decays doubly exponentially along the sequences built in
:mod:`pinchcert.pinchseq`), so the universal currency here is

    lam = log|t| = -2 * pi**2 / length      (a negative real).

Magnitudes whose log exceeds the precision guard (default 1e300, override
with the PINCHCERT_PRECISION_GUARD environment variable) are rejected with
PrecisionError instead of saturating: a saturated lam would silently fake
the domination margins computed from it.

``gap_check`` evaluates the worst-case separation condition between two
node parameters: with envelopes lam_i in [lo_i, hi_i], the j-th parameter
is dominated by the p-th power of the i-th one iff

    G = hi_j - p * lo_i < 0

(largest possible |t_j| against smallest possible |t_i|).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Sequence

from .errors import PrecisionError, ValidationError

# lam = -LENGTH_LOG_FACTOR / length, exact leading-order inversion
LENGTH_LOG_FACTOR = 2.0 * math.pi**2
# coarse extremal-length estimate: 2*pi / log(1/|t|)
EXTREMAL_LOG_FACTOR = 2.0 * math.pi

DEFAULT_PRECISION_GUARD = 1e300
PRECISION_GUARD_ENV = "PINCHCERT_PRECISION_GUARD"


def precision_guard() -> float:
    """Current overflow guard for |lam|, env-overridable."""
    raw = os.environ.get(PRECISION_GUARD_ENV)
    if raw is None:
        return DEFAULT_PRECISION_GUARD
    try:
        guard = float(raw)
    except ValueError:
        raise ValidationError(
            f"{PRECISION_GUARD_ENV} must be a positive real, got {raw!r}"
        ) from None
    if not guard > 0.0:
        raise ValidationError(f"{PRECISION_GUARD_ENV} must be positive, got {raw!r}")
    return guard


def check_log_magnitude(lam: float, context: str = "log-magnitude") -> float:
    """Validate lam = log|t|: negative, finite, inside the precision guard."""
    lam = float(lam)
    if math.isnan(lam) or lam >= 0.0:
        raise ValidationError(f"{context} must be a negative real, got {lam!r}")
    if not math.isfinite(lam) or -lam >= precision_guard():
        raise PrecisionError(
            f"{context} {lam!r} exceeds the precision guard {precision_guard()!r}"
        )
    return lam


def check_log_point(lams: Sequence[float], n: int | None = None) -> tuple[float, ...]:
    """Validate a full point of node-parameter log-magnitudes."""
    point = tuple(float(v) for v in lams)
    if n is not None and len(point) != n:
        raise ValidationError(f"expected {n} log-magnitudes, got {len(point)}")
    if not point:
        raise ValidationError("a log point needs at least one coordinate")
    for k, lam in enumerate(point, start=1):
        check_log_magnitude(lam, context=f"log-magnitude #{k}")
    return point


def log_t_from_length(length: float) -> float:
    """lam = -2*pi**2 / length, the leading-order node-parameter magnitude
    of a pinching curve of the given hyperbolic length."""
    length = float(length)
    if not math.isfinite(length) or length <= 0.0:
        raise ValidationError(f"length must be a finite positive real, got {length!r}")
    lam = -LENGTH_LOG_FACTOR / length
    if not math.isfinite(lam) or -lam >= precision_guard():
        raise PrecisionError(
            f"length {length!r} gives log-magnitude {lam!r} beyond the precision guard"
        )
    return lam


def length_from_log_t(lam: float) -> float:
    """Exact leading-order inverse: length = 2*pi**2 / (-lam)."""
    lam = check_log_magnitude(lam)
    return LENGTH_LOG_FACTOR / (-lam)


def extremal_length_estimate(lam: float) -> float:
    """Coarse extremal length 2*pi / (-lam) of the pinching curve; the
    extremal/hyperbolic ratio is identically 1/pi."""
    lam = check_log_magnitude(lam)
    return EXTREMAL_LOG_FACTOR / (-lam)


def length_envelope_to_log_envelope(lo: float, hi: float) -> tuple[float, float]:
    """Convert a two-sided length bound [lo, hi] to a log-magnitude bound.

    Longer curve means larger (less negative) lam, so the interval maps
    order-reversingly onto (lam_lo, lam_hi) = (-2pi^2/lo, -2pi^2/hi).
    """
    lo = float(lo)
    hi = float(hi)
    if not (0.0 < lo <= hi) or not math.isfinite(hi):
        raise ValidationError(f"need 0 < lo <= hi, got lo={lo!r}, hi={hi!r}")
    return (log_t_from_length(lo), log_t_from_length(hi))


@dataclass(frozen=True)
class GapReport:
    """Worst-case separation between node parameters i and j at one point.

    ``gap`` is G = lam_hi(j) - p * lam_lo(i); ``dominated`` iff G < 0,
    meaning every point of the envelope box has |t_j| < |t_i|**p.  Callers
    scanning a sequence should see gap -> -infinity as the sequence
    parameter grows.
    """

    i: int
    j: int
    p: int
    gap: float
    dominated: bool


def gap_check(
    envelopes: Sequence[tuple[float, float] | None], i: int, j: int, p: int
) -> GapReport:
    """Check |t_j| against |t_i|**p in the worst case over an envelope box.

    ``envelopes`` holds one (lam_lo, lam_hi) pair per node index, 1-based
    positions ``i < j``; entries at positions other than i and j are never
    inspected and may be None.  Only claimed, and only checked, for j > i.
    """
    n = len(envelopes)
    if not (isinstance(p, int) and p >= 1):
        raise ValidationError(f"p must be a positive integer, got {p!r}")
    if not (1 <= i < j <= n):
        raise ValidationError(
            f"need 1 <= i < j <= {n} (separation is only claimed for j > i), "
            f"got i={i}, j={j}"
        )
    if envelopes[i - 1] is None or envelopes[j - 1] is None:
        raise ValidationError(f"envelopes for positions {i} and {j} are required")
    lo_i, hi_i = envelopes[i - 1]
    lo_j, hi_j = envelopes[j - 1]
    for name, lam in (("lo_i", lo_i), ("hi_i", hi_i), ("lo_j", lo_j), ("hi_j", hi_j)):
        check_log_magnitude(lam, context=name)
    if lo_i > hi_i or lo_j > hi_j:
        raise ValidationError("each envelope needs lam_lo <= lam_hi")
    gap = hi_j - p * lo_i
    return GapReport(i=i, j=j, p=p, gap=gap, dominated=gap < 0.0)
