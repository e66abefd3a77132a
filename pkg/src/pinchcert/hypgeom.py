"""Hyperbolic trigonometry primitives and metric-comparison envelopes.

Lengths are geodesic lengths on closed hyperbolic surfaces (curvature -1),
handled as plain positive floats.  Two families of operations live here:

* collar geometry around a short simple geodesic: ``collar_width``,
  ``crossing_length_lower`` (any crossing geodesic must traverse the whole
  collar), ``pentagon_side`` and ``bers_crossing_bound`` (explicit crossing
  curve built from ortho-geodesics of a bounded pants decomposition);

* two-sided envelopes relating curve lengths on surfaces a bounded distance
  apart: ``wolpert_envelope`` for the symmetric (quasiconformal) metric,
  ``thurston_length_upper`` and ``lemma41_envelope`` for the asymmetric
  Lipschitz metric, and ``thurston_lower_bound`` which evaluates the
  defining sup over a finite curve family.

All operations are pure, deterministic and safe for concurrent use.
Double precision throughout; identities hold to ~1e-12 relative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InfeasibleError, OutOfRegimeError, ValidationError


def _require_length(value: float, name: str = "length") -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise ValidationError(f"{name} must be a finite positive real, got {value!r}")
    return value


@dataclass(frozen=True)
class HypConstants:
    """Geometric constants for one run, all user-overridable.

    Every unresolved field gets a documented fallback:

    * ``wolpert_c``   defaults to exp(2K), the standard quasiconformal
      length-distortion constant at distance K (1.0 exactly when K = 0);
    * ``lemma41_c``   defaults to max(exp(K), exp(K) * C1) -- treated as a
      parameter of the asymmetric-metric envelope, never as ground truth;
    * ``bers_B``      defaults to 21 * (genus - 1), a published upper bound
      for the Bers pants-decomposition constant;
    * ``C2``          defaults to ``bers_B`` (the crossing-curve bound is
      dominated by cuff lengths once the pinched curve is long).

    ``cprime`` names the constant absorbed into the log-magnitude bounds of
    pinching sequences; it is carried in configuration echoes so that runs
    are reproducible, but the envelope pipeline derives its widths from
    ``wolpert_c`` / ``lemma41_c`` and the slack parameter only.
    """

    genus: int
    K: float = 0.0
    wolpert_c: float | None = None
    lemma41_c: float | None = None
    lemma41_eps: float = 0.1
    bers_B: float | None = None
    C1: float = 2.0
    C2: float | None = None
    cprime: float = math.e

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 2:
            raise ValidationError(f"genus must be an integer >= 2, got {self.genus!r}")
        if not math.isfinite(self.K) or self.K < 0.0:
            raise ValidationError(f"K must be a finite real >= 0, got {self.K!r}")
        wolpert_explicit = self.wolpert_c is not None
        if self.wolpert_c is None:
            object.__setattr__(self, "wolpert_c", math.exp(2.0 * self.K))
        if self.lemma41_c is None:
            object.__setattr__(
                self, "lemma41_c", max(math.exp(self.K), math.exp(self.K) * self.C1)
            )
        if self.bers_B is None:
            object.__setattr__(self, "bers_B", 21.0 * (self.genus - 1))
        if self.C2 is None:
            object.__setattr__(self, "C2", self.bers_B)

        if not math.isfinite(self.wolpert_c) or self.wolpert_c < 1.0:
            raise ValidationError(f"wolpert_c must be >= 1, got {self.wolpert_c!r}")
        if wolpert_explicit and self.wolpert_c == 1.0 and self.K != 0.0:
            # exp(2K) can round to 1.0 for tiny K, so the degenerate-envelope
            # restriction only applies to explicitly supplied constants
            raise ValidationError("wolpert_c == 1 is only permitted when K == 0")
        if not math.isfinite(self.lemma41_c) or self.lemma41_c < 1.0:
            raise ValidationError(f"lemma41_c must be >= 1, got {self.lemma41_c!r}")
        if not (0.0 < self.lemma41_eps < 1.0) or not math.isfinite(self.lemma41_eps):
            raise ValidationError(
                f"lemma41_eps must lie in (0, 1), got {self.lemma41_eps!r}"
            )
        for name in ("bers_B", "C1", "C2", "cprime"):
            v = getattr(self, name)
            if not math.isfinite(v) or v <= 0.0:
                raise ValidationError(f"{name} must be a finite positive real, got {v!r}")

    def as_dict(self) -> dict:
        return {
            "genus": self.genus,
            "K": self.K,
            "wolpert_c": self.wolpert_c,
            "lemma41_c": self.lemma41_c,
            "lemma41_eps": self.lemma41_eps,
            "bers_B": self.bers_B,
            "C1": self.C1,
            "C2": self.C2,
            "cprime": self.cprime,
        }


def collar_width(length: float) -> float:
    """Half-width of the standard embedded collar around a simple geodesic.

    w(l) = arcsinh(1 / sinh(l/2)); strictly decreasing in l, and for
    l <= 0.1 satisfies 2 w(l) >= log(1/l).
    """
    length = _require_length(length)
    return math.asinh(1.0 / math.sinh(length / 2.0))


def crossing_length_lower(l_alpha: float) -> float:
    """Lower bound for any closed geodesic crossing a simple geodesic of
    length ``l_alpha``: it must traverse the collar, so it is at least
    2 * collar_width(l_alpha)."""
    return 2.0 * collar_width(l_alpha)


def pentagon_side(a: float, b: float) -> float:
    """Fifth side of a right-angled pentagon with non-adjacent sides a, b.

    Solves cosh(c) = sinh(a) * sinh(b).  Raises InfeasibleError when
    sinh(a) * sinh(b) < 1, where no such pentagon exists.
    """
    a = _require_length(a, "a")
    b = _require_length(b, "b")
    product = math.sinh(a) * math.sinh(b)
    if product < 1.0:
        raise InfeasibleError(
            f"no right-angled pentagon with sinh(a)*sinh(b) = {product} < 1"
        )
    return math.acosh(product)


def bers_crossing_bound(l_alpha: float, consts: HypConstants) -> float:
    """Upper bound C1 * max(0, log(1/l)) + C2 for the length of a crossing
    curve assembled from ortho-geodesics of a bounded pants decomposition.
    Monotone non-increasing in ``l_alpha``."""
    l_alpha = _require_length(l_alpha, "l_alpha")
    return consts.C1 * max(0.0, math.log(1.0 / l_alpha)) + consts.C2


def wolpert_envelope(l_Y: float, consts: HypConstants) -> tuple[float, float]:
    """Two-sided bound [l/c, c*l] on a curve's length on any surface within
    symmetric-metric distance K of Y, with c = ``wolpert_c``.  Degenerates
    to the identity interval iff c = 1."""
    l_Y = _require_length(l_Y, "l_Y")
    c = consts.wolpert_c
    return (l_Y / c, c * l_Y)


def thurston_length_upper(l_X: float, consts: HypConstants) -> float:
    """Upper bound exp(K) * l_X for a curve's length on any surface within
    asymmetric distance K from X; valid for every curve."""
    l_X = _require_length(l_X, "l_X")
    return math.exp(consts.K) * l_X


def lemma41_envelope(l_Y: float, consts: HypConstants) -> tuple[float, float]:
    """Short-curve envelope [l/c, c * l^(1/c)] for the asymmetric metric.

    Only valid when l_Y <= ``lemma41_eps``; outside the regime an
    OutOfRegimeError is raised (the hypothesis of the estimate fails, the
    value would be meaningless).  The upper bound is genuinely weaker than
    a multiplicative one: the length ratio is unbounded in this direction.
    """
    l_Y = _require_length(l_Y, "l_Y")
    if l_Y > consts.lemma41_eps:
        raise OutOfRegimeError(
            f"short-curve envelope requires length <= {consts.lemma41_eps}, got {l_Y}"
        )
    c = consts.lemma41_c
    return (l_Y / c, c * l_Y ** (1.0 / c))


def thurston_lower_bound(lengths_X, lengths_Y) -> float:
    """max over a finite marked curve family of log(l_Y / l_X).

    This is a *lower* bound for the asymmetric distance from X to Y: the
    true distance takes the sup over all closed curves, and only finitely
    many are sampled here.
    """
    xs = [float(v) for v in lengths_X]
    ys = [float(v) for v in lengths_Y]
    if not xs or len(xs) != len(ys):
        raise ValidationError(
            f"need two non-empty families of equal size, got {len(xs)} and {len(ys)}"
        )
    for v in xs + ys:
        if not math.isfinite(v) or v <= 0.0:
            raise ValidationError(f"curve lengths must be positive reals, got {v!r}")
    return max(math.log(y / x) for x, y in zip(xs, ys))
