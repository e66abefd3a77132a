"""Pinching-sequence envelopes in three regimes.

A run fixes a genus g (hence n = 3g - 3 pinching curves, indexed i = 1..n)
and a sequence parameter m.  The reference surfaces pinch the i-th curve to

    target(i, m) = m**(-i)        (symmetric-metric regime), or
    target(i, m) = exp(-m**i)     (asymmetric-metric regimes),

so consecutive curves shrink at wildly separated rates.  A surface within
distance K of the reference then carries the i-th curve with length inside a
two-sided envelope:

    teichmuller    [t/c,        c * t]              c = wolpert_c
    thurston-from  [t/c,        c * t**(1/c)]       c = lemma41_c
    thurston-to    [(1/c)**c * t**c,  c * t]        c = lemma41_c

(the thurston-from/-to names record the direction of the asymmetric metric;
both require the target length to be at most ``lemma41_eps``).  Each length
envelope is converted to a log-magnitude envelope via
:func:`pinchcert.plumbing.length_envelope_to_log_envelope` and widened by a
relative slack sigma on both sides (lam_lo * (1+sigma), lam_hi / (1+sigma))
to absorb the unspecified lower-order terms of the length/magnitude
relation.

Inadmissible (i, m) cells in the asymmetric regimes are trimmed rather than
fatal, and the trim is recorded in the output.  Cells whose log-magnitudes
leave the precision guard raise PrecisionError by default; callers that
prefer partial output (the CLI does) pass ``skip_overflow=True`` and get the
skipped cells recorded alongside the trims.
"""

from __future__ import annotations

import enum
import io
import math
from dataclasses import dataclass
from . import docio
from .errors import OutOfRegimeError, PrecisionError, ValidationError
from .hypgeom import HypConstants
from .plumbing import GapReport, gap_check, log_t_from_length, precision_guard


class Regime(str, enum.Enum):
    TEICHMULLER = "teichmuller"
    THURSTON_FROM = "thurston-from"
    THURSTON_TO = "thurston-to"

    @property
    def is_thurston(self) -> bool:
        return self is not Regime.TEICHMULLER


# default scan depth per regime: the asymmetric regimes grow log-magnitudes
# like exp(m**i) and leave double precision almost immediately
DEFAULT_M_MAX = {
    Regime.TEICHMULLER: 50,
    Regime.THURSTON_FROM: 6,
    Regime.THURSTON_TO: 6,
}


@dataclass(frozen=True)
class RegimeConfig:
    regime: Regime
    genus: int
    consts: HypConstants
    m_min: int
    m_max: int
    slack: float = 0.05

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 2:
            raise ValidationError(f"genus must be an integer >= 2, got {self.genus!r}")
        if self.genus != self.consts.genus:
            raise ValidationError(
                f"config genus {self.genus} != constants genus {self.consts.genus}"
            )
        if not isinstance(self.m_min, int) or self.m_min < 2:
            raise ValidationError(f"m_min must be an integer >= 2, got {self.m_min!r}")
        if not isinstance(self.m_max, int) or self.m_max < self.m_min:
            raise ValidationError(
                f"m_max must be an integer >= m_min={self.m_min}, got {self.m_max!r}"
            )
        if not math.isfinite(self.slack) or self.slack < 0.0:
            raise ValidationError(f"slack must be a finite real >= 0, got {self.slack!r}")

    @property
    def n(self) -> int:
        return 3 * self.genus - 3

    def as_dict(self) -> dict:
        return {
            "regime": self.regime.value,
            "genus": self.genus,
            "n": self.n,
            "m_min": self.m_min,
            "m_max": self.m_max,
            "slack": self.slack,
            "constants": self.consts.as_dict(),
        }


def target_length(regime: Regime, i: int, m: int) -> float:
    """Pinched length of curve i on the m-th reference surface."""
    _check_index_m(i, m)
    mi = m**i
    if regime is Regime.TEICHMULLER:
        try:
            target = 1.0 / float(mi)
        except OverflowError:
            target = 0.0
    else:
        try:
            target = math.exp(-float(mi))
        except OverflowError:
            target = 0.0
    if target <= 0.0:
        raise PrecisionError(
            f"target length for i={i}, m={m} underflows double precision "
            f"(exponent m**i = {mi})"
        )
    return target


def min_admissible_m(regime: Regime, i: int, consts: HypConstants) -> int:
    """Smallest m >= 2 whose target length for curve i is inside the
    short-curve regime (always 2 in the symmetric regime)."""
    if not isinstance(i, int) or i < 1:
        raise ValidationError(f"curve index must be a positive integer, got {i!r}")
    if regime is Regime.TEICHMULLER:
        return 2
    m = 2
    while not _is_admissible(i, m, consts):
        m += 1
    return m


def _check_index_m(i: int, m: int) -> None:
    if not isinstance(i, int) or i < 1:
        raise ValidationError(f"curve index must be a positive integer, got {i!r}")
    if not isinstance(m, int) or m < 2:
        raise ValidationError(f"sequence parameter must be an integer >= 2, got {m!r}")


def _is_admissible(i: int, m: int, consts: HypConstants) -> bool:
    # target exp(-m**i) <= eps; anything beyond float range is tiny, hence fine
    try:
        x = float(m**i)
    except OverflowError:
        return True
    return math.exp(-x) <= consts.lemma41_eps


def _length_ends(
    regime: Regime, i: int, m: int, consts: HypConstants
) -> tuple[float | None, float | None]:
    """Length-envelope ends, each independently None when it underflows.

    Raises OutOfRegimeError (with the smallest admissible m for this i)
    when the asymmetric short-curve hypothesis fails.
    """
    _check_index_m(i, m)
    if regime is Regime.TEICHMULLER:
        c = consts.wolpert_c
        try:
            t = 1.0 / float(m**i)
        except OverflowError:
            t = 0.0
        lo, hi = t / c, c * t
    else:
        if not _is_admissible(i, m, consts):
            raise OutOfRegimeError(
                f"target length for i={i}, m={m} exceeds lemma41_eps="
                f"{consts.lemma41_eps}; smallest admissible m is "
                f"{min_admissible_m(regime, i, consts)}",
                min_admissible_m=min_admissible_m(regime, i, consts),
            )
        c = consts.lemma41_c
        try:
            x = float(m**i)
        except OverflowError:
            x = math.inf
        # exp of a hugely negative argument underflows to 0.0 without error;
        # _end then marks that end unrepresentable
        if regime is Regime.THURSTON_FROM:
            lo = math.exp(-x) / c
            hi = c * math.exp(-x / c)
        else:
            lo = (1.0 / c) ** c * math.exp(-c * x)
            hi = c * math.exp(-x)

    def _end(v: float) -> float | None:
        return v if (math.isfinite(v) and v > 0.0) else None

    return _end(lo), _end(hi)


def xm_length_envelope(
    regime: Regime, i: int, m: int, consts: HypConstants
) -> tuple[float, float]:
    """Two-sided length bound for curve i on a surface near the m-th
    reference surface; raises PrecisionError if either end underflows."""
    lo, hi = _length_ends(regime, i, m, consts)
    if lo is None or hi is None:
        raise PrecisionError(
            f"length envelope for i={i}, m={m} underflows double precision"
        )
    return lo, hi


def log_envelope_ends(
    regime: Regime, i: int, m: int, consts: HypConstants, slack: float
) -> tuple[float | None, float | None]:
    """Slack-widened log-magnitude envelope ends for one (i, m) cell.

    Each end is computed independently and returned as None when it (or the
    length it derives from) leaves the representable window; the other end
    stays usable.  Raises OutOfRegimeError for inadmissible cells.
    """
    len_lo, len_hi = _length_ends(regime, i, m, consts)
    widen = 1.0 + slack
    lam_lo = lam_hi = None
    if len_lo is not None:
        try:
            lam_lo = log_t_from_length(len_lo) * widen
            if -lam_lo >= precision_guard():
                lam_lo = None
        except PrecisionError:
            lam_lo = None
    if len_hi is not None:
        try:
            lam_hi = log_t_from_length(len_hi) / widen
        except PrecisionError:
            lam_hi = None
    return lam_lo, lam_hi


@dataclass(frozen=True)
class EnvelopeRow:
    m: int
    i: int
    target_len: float
    len_lo: float
    len_hi: float
    lam_lo: float
    lam_hi: float


@dataclass(frozen=True)
class TrimRecord:
    m: int
    i: int
    reason: str


CSV_COLUMNS = ("m", "i", "target_len", "len_lo", "len_hi", "lam_lo", "lam_hi")


@dataclass(frozen=True)
class SequenceEnvelope:
    """All envelope rows of one run, sorted by (m, i), plus trim records."""

    config: RegimeConfig
    rows: tuple[EnvelopeRow, ...]
    trimmed: tuple[TrimRecord, ...]

    def __post_init__(self):
        index = {(r.m, r.i): r for r in self.rows}
        object.__setattr__(self, "_index", index)

    def ms(self) -> list[int]:
        return sorted({row.m for row in self.rows})

    def row(self, m: int, i: int) -> EnvelopeRow | None:
        return self._index.get((m, i))

    def rows_for_m(self, m: int) -> list[EnvelopeRow]:
        return [r for r in self.rows if r.m == m]

    def complete_ms(self) -> list[int]:
        """m values where every curve index has a row (required by
        certificates, which need the whole coordinate box)."""
        return [m for m in self.ms() if len(self.rows_for_m(m)) == self.config.n]

    def lam_box(self, m: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
        rows = sorted(self.rows_for_m(m), key=lambda r: r.i)
        if len(rows) != self.config.n:
            raise ValidationError(
                f"m={m} has only {len(rows)} of {self.config.n} envelope rows"
            )
        return (
            tuple(r.lam_lo for r in rows),
            tuple(r.lam_hi for r in rows),
        )

    def to_json_doc(self) -> dict:
        return {
            "config": self.config.as_dict(),
            "trimmed": [
                {"m": t.m, "i": t.i, "reason": t.reason} for t in self.trimmed
            ],
            "envelopes": [
                {
                    "m": m,
                    "rows": [
                        {
                            "i": r.i,
                            "target_len": r.target_len,
                            "len_lo": r.len_lo,
                            "len_hi": r.len_hi,
                            "lam_lo": r.lam_lo,
                            "lam_hi": r.lam_hi,
                        }
                        for r in sorted(self.rows_for_m(m), key=lambda r: r.i)
                    ],
                }
                for m in self.ms()
            ],
        }

    def to_csv(self) -> str:
        out = io.StringIO()
        out.write(",".join(CSV_COLUMNS) + "\n")
        for r in self.rows:
            out.write(
                f"{r.m},{r.i},{docio.format_float(r.target_len)},"
                f"{docio.format_float(r.len_lo)},{docio.format_float(r.len_hi)},"
                f"{docio.format_float(r.lam_lo)},{docio.format_float(r.lam_hi)}\n"
            )
        return out.getvalue()


def build_sequence(config: RegimeConfig, skip_overflow: bool = False) -> SequenceEnvelope:
    """Populate every (i, m) envelope cell of the configured run.

    Deterministic for a fixed config.  Inadmissible cells (asymmetric
    regimes only) are trimmed and recorded.  Cells beyond the precision
    guard raise PrecisionError naming the first offending (i, m), unless
    ``skip_overflow`` is set, in which case they are recorded like trims.
    """
    rows: list[EnvelopeRow] = []
    trimmed: list[TrimRecord] = []
    for m in range(config.m_min, config.m_max + 1):
        for i in range(1, config.n + 1):
            try:
                target = target_length(config.regime, i, m)
                lam_lo, lam_hi = log_envelope_ends(
                    config.regime, i, m, config.consts, config.slack
                )
                if lam_lo is None or lam_hi is None:
                    raise PrecisionError(
                        f"log-magnitude envelope for i={i}, m={m} exceeds the "
                        f"precision guard {precision_guard()!r}"
                    )
                len_lo, len_hi = xm_length_envelope(config.regime, i, m, config.consts)
            except OutOfRegimeError as exc:
                trimmed.append(TrimRecord(m=m, i=i, reason=str(exc)))
                continue
            except PrecisionError as exc:
                if skip_overflow:
                    trimmed.append(TrimRecord(m=m, i=i, reason=str(exc)))
                    continue
                raise PrecisionError(f"at i={i}, m={m}: {exc}") from exc
            rows.append(
                EnvelopeRow(
                    m=m,
                    i=i,
                    target_len=target,
                    len_lo=len_lo,
                    len_hi=len_hi,
                    lam_lo=lam_lo,
                    lam_hi=lam_hi,
                )
            )
    return SequenceEnvelope(config=config, rows=tuple(rows), trimmed=tuple(trimmed))


@dataclass(frozen=True)
class GapScan:
    """Per-m separation reports for one (i, j, p) triple.

    ``threshold`` is the smallest scanned m from which the report is
    dominated at every later scanned m (None when the scan never settles).
    """

    i: int
    j: int
    p: int
    entries: tuple[tuple[int, GapReport], ...]
    threshold: int | None


def gap_scan(env: SequenceEnvelope, i: int, j: int, p: int) -> GapScan:
    """Scan the separation condition |t_j| = o(|t_i|**p) along a built
    sequence, over the m values where both envelopes are representable."""
    n = env.config.n
    entries = []
    for m in env.ms():
        row_i = env.row(m, i)
        row_j = env.row(m, j)
        if row_i is None or row_j is None:
            continue
        envelopes: list[tuple[float, float] | None] = [None] * n
        envelopes[i - 1] = (row_i.lam_lo, row_i.lam_hi)
        envelopes[j - 1] = (row_j.lam_lo, row_j.lam_hi)
        entries.append((m, gap_check(envelopes, i, j, p)))
    threshold = None
    for m, report in reversed(entries):
        if not report.dominated:
            break
        threshold = m
    return GapScan(i=i, j=j, p=p, entries=tuple(entries), threshold=threshold)
