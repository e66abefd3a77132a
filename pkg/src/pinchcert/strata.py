"""Stratum dimension arithmetic and coarse-density verdicts.

A stratum of abelian differentials is named by the partition kappa of
2g - 2 listing its zero orders.  The projectivized stratum has dimension
2g + n - 2 (n = number of zeros, standard period-coordinate count), and its
projection to moduli space is coarsely dense iff that dimension reaches
3g - 3, i.e. iff n >= g - 1.

The all-twos partitions sit exactly at the threshold, and there the verdict
holds for the whole stratum only; the verdict record carries a caveat flag
for them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError

_ALL_TWOS_CAVEAT = (
    "the dimension criterion is only true for the whole stratum: for zero "
    "orders (2,...,2) the even spin component meets the dimension bound "
    "without having coarsely dense projection, so component-level verdicts "
    "need separate treatment"
)


@dataclass(frozen=True)
class StratumSignature:
    """Zero orders kappa = (kappa_1, ..., kappa_n), a partition of 2g - 2."""

    kappa: tuple[int, ...]

    def __post_init__(self):
        kappa = tuple(self.kappa)
        object.__setattr__(self, "kappa", kappa)
        if not kappa:
            raise ValidationError("kappa must be a non-empty list of zero orders")
        for k in kappa:
            if not isinstance(k, int) or k < 1:
                raise ValidationError(
                    f"every zero order must be a positive integer, got {k!r}"
                )
        total = sum(kappa)
        if total % 2 != 0:
            raise ValidationError(
                f"sum of zero orders must be even (it equals 2g - 2), got {total}"
            )
        if total < 2:
            raise ValidationError(
                f"sum of zero orders must be at least 2 (genus >= 2), got {total}"
            )

    @property
    def genus(self) -> int:
        return (sum(self.kappa) + 2) // 2

    @property
    def n(self) -> int:
        return len(self.kappa)


def dim_projective_stratum(s: StratumSignature) -> int:
    """dim of the projectivized stratum: 2g + n - 2."""
    return 2 * s.genus + s.n - 2


@dataclass(frozen=True)
class DensityVerdict:
    kappa: tuple[int, ...]
    genus: int
    n: int
    dim_PH: int
    threshold: int
    verdict: str  # "dense" | "not_dense"
    caveat: str | None

    def to_json_doc(self) -> dict:
        doc = {
            "kappa": list(self.kappa),
            "genus": self.genus,
            "n": self.n,
            "dim_PH": self.dim_PH,
            "threshold": self.threshold,
            "verdict": self.verdict,
        }
        if self.caveat is not None:
            doc["caveat"] = self.caveat
        return doc


def coarse_density_verdict(s: StratumSignature) -> DensityVerdict:
    """Coarse-density verdict for the stratum's projection to moduli space:
    dense iff dim_PH = 2g + n - 2 >= 3g - 3, equivalently n >= g - 1."""
    dim = dim_projective_stratum(s)
    threshold = 3 * s.genus - 3
    dense = dim >= threshold
    caveat = None
    if s.n >= 2 and all(k == 2 for k in s.kappa):
        caveat = _ALL_TWOS_CAVEAT
    return DensityVerdict(
        kappa=s.kappa,
        genus=s.genus,
        n=s.n,
        dim_PH=dim,
        threshold=threshold,
        verdict="dense" if dense else "not_dense",
        caveat=caveat,
    )
