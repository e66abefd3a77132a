"""Multivariate analytic germs and domination certificates.

A germ is finitely many exact monomials c_alpha * t**alpha plus, optionally,
a coefficient envelope |c_alpha| <= M / r**|alpha| majorizing every unstored
coefficient.  Multi-indices carry the dominance order: alpha succeeds beta
iff alpha exceeds beta at the largest position where they differ.  Along a
pinching sequence the node magnitudes |t_i| shrink at rates separated so
violently that this order sorts monomials by magnitude: the order-minimal
stored index beta is the *leading monomial*, and its term eventually crushes
the sum of every other term.

``tail_bound`` makes that quantitative.  The indices after beta split into
blocks B_i = {alpha: alpha agrees with beta above position i, alpha_i >
beta_i}; stored monomials are summed exactly within their block, and the
unstored remainder of each block is majorized by relaxing the block to
delta_i + (all non-negative indices), delta_i = (0,..,0, beta_i + 1,
beta_{i+1},.., beta_n), which the envelope turns into the closed form

    M * r**-(1 + beta_i + .. + beta_n)
      * exp(lam_i + sum_{k>=i} beta_k lam_k)
      * prod_k 1 / (1 - exp(lam_k)/r)

valid whenever every |t_k| = exp(lam_k) < r.  The bound is conservative by
construction: it never underestimates the true tail.

``certify`` runs lead-versus-tail over a built sequence envelope, minimizing
the lead and maximizing the tail over each coordinate box.  A positive
margin at parameter m is a machine-checkable proof that the germ has no
zero anywhere inside the m-th box.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    DegenerateGermError,
    DivergenceError,
    PrecisionError,
    ValidationError,
)
from .pinchseq import SequenceEnvelope
from .plumbing import check_log_point, precision_guard

MultiIndex = tuple[int, ...]

PRECEDES = -1
EQUAL = 0
SUCCEEDS = 1

# relative size below which a signed evaluation is reported as cancelled
CANCELLATION_RTOL = 1e-12
LOG_CANCELLATION_RTOL = math.log(CANCELLATION_RTOL)


def check_multi_index(alpha: Sequence[int], n: int | None = None) -> MultiIndex:
    idx = tuple(alpha)
    if not idx:
        raise ValidationError("a multi-index needs at least one entry")
    if n is not None and len(idx) != n:
        raise ValidationError(f"expected arity {n}, got {len(idx)}")
    for e in idx:
        if not isinstance(e, int) or e < 0:
            raise ValidationError(f"multi-index entries must be integers >= 0, got {e!r}")
    return idx


def compare(alpha: Sequence[int], beta: Sequence[int]) -> int:
    """Dominance order on multi-indices of equal arity.

    Returns SUCCEEDS (+1) iff alpha exceeds beta at the largest position
    where they differ, PRECEDES (-1) iff the reverse, EQUAL (0) otherwise.
    A PRECEDES result means alpha is the more dominant monomial: smaller
    indices correspond to larger terms along a pinching sequence.
    """
    a = check_multi_index(alpha)
    b = check_multi_index(beta)
    if len(a) != len(b):
        raise ValidationError(f"arity mismatch: {len(a)} vs {len(b)}")
    ra, rb = a[::-1], b[::-1]
    return (ra > rb) - (ra < rb)


def order_key(alpha: Sequence[int]) -> MultiIndex:
    """Sort key realizing the dominance order (reversed-tuple lex order)."""
    return tuple(alpha)[::-1]


def minimal_index(indices: Iterable[Sequence[int]]) -> MultiIndex:
    """Order-minimum of a non-empty finite set (it always exists: the order
    is a well-ordering on multi-indices)."""
    items = [check_multi_index(a) for a in indices]
    if not items:
        raise ValidationError("cannot take the minimum of an empty index set")
    arity = len(items[0])
    for a in items:
        if len(a) != arity:
            raise ValidationError("all indices must share one arity")
    return min(items, key=order_key)


@dataclass(frozen=True)
class CauchyEnvelope:
    """Coefficient majorant |c_alpha| <= M / r**|alpha| for unstored terms."""

    M: float
    r: float

    def __post_init__(self):
        if not (math.isfinite(self.M) and self.M > 0.0):
            raise ValidationError(f"M must be a finite positive real, got {self.M!r}")
        if not (math.isfinite(self.r) and self.r > 0.0):
            raise ValidationError(f"r must be a finite positive real, got {self.r!r}")


Coefficient = Fraction | float


def _check_coefficient(c: Coefficient) -> Coefficient:
    if isinstance(c, Fraction):
        if c == 0:
            raise ValidationError("zero coefficients must not be stored")
        return c
    if isinstance(c, (int, float)):
        c = float(c)
        if not math.isfinite(c) or c == 0.0:
            raise ValidationError(
                f"coefficients must be finite and nonzero, got {c!r}"
            )
        return c
    raise ValidationError(f"unsupported coefficient type {type(c).__name__}")


def log_abs_coefficient(c: Coefficient) -> float:
    """log|c| from the exact value (rationals split into log p - log q so
    huge numerators survive)."""
    if isinstance(c, Fraction):
        return math.log(abs(c.numerator)) - math.log(c.denominator)
    return math.log(abs(c))


def coefficient_sign(c: Coefficient) -> int:
    return 1 if c > 0 else -1


@dataclass(frozen=True)
class AnalyticGerm:
    """Finitely many exact monomials plus an optional coefficient envelope.

    Stored coefficients are exact and not required to obey the envelope;
    the envelope majorizes only the coefficients that are *not* stored.
    """

    n: int
    monomials: Mapping[MultiIndex, Coefficient]
    envelope: CauchyEnvelope | None = None

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValidationError(f"arity must be a positive integer, got {self.n!r}")
        clean: dict[MultiIndex, Coefficient] = {}
        for alpha, c in self.monomials.items():
            idx = check_multi_index(alpha, self.n)
            clean[idx] = _check_coefficient(c)
        object.__setattr__(self, "monomials", clean)

    def sorted_terms(self) -> list[tuple[MultiIndex, Coefficient]]:
        return sorted(self.monomials.items(), key=lambda kv: order_key(kv[0]))


@dataclass(frozen=True)
class LeadingTerm:
    """Order-minimal stored monomial.

    ``conditional`` is set when the germ carries an envelope: unstored terms
    are then majorized rather than located, so the user must separately
    assert that no unstored term precedes ``beta`` (the lead-complete
    assertion checked by :func:`certify`).
    """

    beta: MultiIndex
    coefficient: Coefficient
    conditional: bool


def leading_monomial(f: AnalyticGerm) -> LeadingTerm:
    if not f.monomials:
        raise DegenerateGermError(
            "germ stores no monomials; an identically-zero series has no leading term"
        )
    beta = minimal_index(f.monomials.keys())
    return LeadingTerm(
        beta=beta, coefficient=f.monomials[beta], conditional=f.envelope is not None
    )


def eval_log_abs_monomial(alpha: Sequence[int], lams: Sequence[float]) -> float:
    """log|t**alpha| = sum_k alpha_k * lam_k (0.0 for the empty product)."""
    idx = check_multi_index(alpha)
    point = check_log_point(lams, n=len(idx))
    total = math.fsum(a * lam for a, lam in zip(idx, point))
    if not math.isfinite(total) or -total >= precision_guard():
        raise PrecisionError(
            f"monomial log-magnitude {total!r} exceeds the precision guard"
        )
    return total


def logsumexp(values: Sequence[float]) -> float:
    """Accurate log(sum(exp(v))) over log-domain values; -inf for an empty
    collection, tolerant of -inf entries."""
    vals = [v for v in values if v != -math.inf]
    if not vals:
        return -math.inf
    top = max(vals)
    if math.isinf(top):
        return top
    rest = math.fsum(math.expm1(v - top) for v in vals)
    return top + math.log1p(rest + float(len(vals) - 1))


def _block_position(alpha: MultiIndex, beta: MultiIndex) -> int:
    """1-based largest position where alpha and beta differ (the block an
    order-larger alpha belongs to)."""
    for k in range(len(alpha) - 1, -1, -1):
        if alpha[k] != beta[k]:
            return k + 1
    raise ValueError("identical indices have no block")


def tail_bound(f: AnalyticGerm, beta: Sequence[int], lams: Sequence[float]) -> float:
    """log of an upper bound for the tail sum over all indices after beta.

    Stored tail monomials are summed exactly (in the log domain); with an
    envelope present, each block's unstored remainder contributes its
    closed-form geometric majorant.  Requires every |t_k| < r when the
    envelope is used; conservative in every case, -inf iff the tail is
    empty and no envelope is present.
    """
    beta = check_multi_index(beta, f.n)
    point = check_log_point(lams, n=f.n)

    pieces: list[float] = []
    for alpha, c in f.sorted_terms():
        if compare(alpha, beta) == SUCCEEDS:
            pieces.append(log_abs_coefficient(c) + eval_log_abs_monomial(alpha, point))

    if f.envelope is not None:
        M, r = f.envelope.M, f.envelope.r
        log_r = math.log(r)
        # prod_k 1/(1 - |t_k|/r), the geometric factor shared by all blocks
        log_geom = 0.0
        for k, lam in enumerate(point, start=1):
            ratio_log = lam - log_r
            if ratio_log >= 0.0:
                raise DivergenceError(
                    f"|t_{k}| = exp({lam!r}) >= envelope radius r = {r!r}; "
                    "the majorant series diverges at this point"
                )
            log_geom -= math.log1p(-math.exp(ratio_log))
        for i in range(1, f.n + 1):
            suffix_degree = 1 + sum(beta[i - 1 :])
            shift_log = point[i - 1] + math.fsum(
                beta[k] * point[k] for k in range(i - 1, f.n)
            )
            pieces.append(math.log(M) - suffix_degree * log_r + shift_log + log_geom)

    return logsumexp(pieces)


@dataclass(frozen=True)
class CertificateRow:
    m: int
    log_lead: float
    log_tail: float  # -inf when the tail is empty
    margin: float  # +inf when the tail is empty


@dataclass(frozen=True)
class DominationCertificate:
    """Machine-checkable non-vanishing certificate along a sequence.

    For each m the lead is minimized, and the tail bound maximized, over the
    m-th coordinate box; margin > 0 therefore proves that no point of that
    box is a zero of the germ.  ``m_star`` is the smallest tested m from
    which the margin stays positive through the end of the tested range
    (None when the run is inconclusive -- never a refutation)."""

    beta: MultiIndex
    c_beta_log_abs: float
    rows: tuple[CertificateRow, ...]
    m_star: int | None
    flags: tuple[str, ...]
    config: dict

    def to_json_doc(self) -> dict:
        def _num(v: float) -> float | None:
            return v if math.isfinite(v) else None

        return {
            "beta": list(self.beta),
            "c_beta_log_abs": self.c_beta_log_abs,
            "rows": [
                {
                    "m": r.m,
                    "log_lead": r.log_lead,
                    "log_tail": _num(r.log_tail),
                    "margin": _num(r.margin),
                }
                for r in self.rows
            ],
            "m_star": self.m_star,
            "flags": list(self.flags),
            "config": self.config,
        }


def certify(
    f: AnalyticGerm, envelope_seq: SequenceEnvelope, lead_complete: bool = False
) -> DominationCertificate:
    """Lead-versus-tail domination run over a built sequence envelope.

    With an envelope on the germ, the caller must pass ``lead_complete=True``
    to assert that every order-minimal term of the underlying series is
    stored; without that assertion an unstored term could precede beta and
    the certificate would be unsound, so the configuration is rejected.
    """
    if f.n != envelope_seq.config.n:
        raise ValidationError(
            f"germ arity {f.n} != sequence arity {envelope_seq.config.n} "
            f"(genus {envelope_seq.config.genus})"
        )
    lead = leading_monomial(f)
    flags: list[str] = []
    if f.envelope is not None:
        if not lead_complete:
            raise ValidationError(
                "a coefficient envelope may hide a term preceding the stored "
                "leading monomial; pass the lead-complete assertion to certify"
            )
        flags.append("conditional")

    tail_is_empty = f.envelope is None and len(f.monomials) == 1
    if tail_is_empty:
        flags.append("vacuous-tail")
        if set(lead.beta) == {0}:
            flags.append("vacuous")

    c_beta_log_abs = log_abs_coefficient(lead.coefficient)
    rows: list[CertificateRow] = []
    for m in envelope_seq.complete_ms():
        lam_lo, lam_hi = envelope_seq.lam_box(m)
        log_lead = c_beta_log_abs + eval_log_abs_monomial(lead.beta, lam_lo)
        log_tail = tail_bound(f, lead.beta, lam_hi)
        margin = log_lead - log_tail
        if not tail_is_empty and not math.isfinite(margin):
            raise PrecisionError(f"non-finite margin {margin!r} at m={m}")
        rows.append(
            CertificateRow(m=m, log_lead=log_lead, log_tail=log_tail, margin=margin)
        )

    m_star = None
    for row in reversed(rows):
        if not row.margin > 0.0:
            break
        m_star = row.m
    if m_star is None:
        flags.append("inconclusive")

    return DominationCertificate(
        beta=lead.beta,
        c_beta_log_abs=c_beta_log_abs,
        rows=tuple(rows),
        m_star=m_star,
        flags=tuple(sorted(flags)),
        config={
            **envelope_seq.config.as_dict(),
            "lead_complete": bool(lead_complete),
            "envelope": (
                {"M": f.envelope.M, "r": f.envelope.r} if f.envelope else None
            ),
        },
    )


@dataclass(frozen=True)
class ExactValue:
    """Signed log-domain evaluation result.

    ``cancelled`` marks a result whose positive and negative parts agree to
    better than 1e-12 relative: the sign (reported as 0) is then not
    trustworthy at double precision.
    """

    sign: int
    log_abs: float
    cancelled: bool


def eval_exact(
    f: AnalyticGerm, lams: Sequence[float], signs: Sequence[int] | None = None
) -> ExactValue:
    """Evaluate the stored monomials at t_k = signs_k * exp(lam_k) with
    explicit sign tracking (the brute-force oracle certificates are checked
    against; the envelope, if any, is ignored here)."""
    if not f.monomials:
        raise DegenerateGermError("cannot evaluate a germ with no stored monomials")
    point = check_log_point(lams, n=f.n)
    if signs is None:
        signs = (1,) * f.n
    signs = tuple(signs)
    if len(signs) != f.n or any(s not in (-1, 1) for s in signs):
        raise ValidationError(f"signs must be +-1 of arity {f.n}, got {signs!r}")

    pos: list[float] = []
    neg: list[float] = []
    for alpha, c in f.sorted_terms():
        term_sign = coefficient_sign(c)
        for a, s in zip(alpha, signs):
            if s < 0 and a % 2 == 1:
                term_sign = -term_sign
        magnitude = log_abs_coefficient(c) + math.fsum(
            a * lam for a, lam in zip(alpha, point)
        )
        (pos if term_sign > 0 else neg).append(magnitude)

    log_pos = logsumexp(pos)
    log_neg = logsumexp(neg)
    if log_neg == -math.inf:
        return ExactValue(sign=1, log_abs=log_pos, cancelled=False)
    if log_pos == -math.inf:
        return ExactValue(sign=-1, log_abs=log_neg, cancelled=False)

    hi, lo = max(log_pos, log_neg), min(log_pos, log_neg)
    ratio = math.exp(lo - hi)
    if ratio >= 1.0:
        return ExactValue(sign=0, log_abs=-math.inf, cancelled=True)
    log_diff = hi + math.log1p(-ratio)
    if log_diff - hi < LOG_CANCELLATION_RTOL:
        return ExactValue(sign=0, log_abs=log_diff, cancelled=True)
    return ExactValue(
        sign=1 if log_pos > log_neg else -1, log_abs=log_diff, cancelled=False
    )
