"""Command-line surface.

Four subcommands tie the library into reproducible batch runs:

* ``stratum``  -- coarse-density verdict for a stratum of abelian
  differentials given its zero orders;
* ``sequence`` -- build a pinching-sequence envelope table (JSON or CSV);
* ``certify``  -- parse a germ and run the domination certificate along a
  configured sequence;
* ``hyp``      -- scalar hyperbolic-geometry helpers (collar, pentagon,
  length envelopes, finite-family distance lower bound).

Exit codes: 0 success, 2 validation/parse error, 3 empty output,
4 inconclusive certificate.  Documents are deterministic: rerunning a
command with the same flags produces byte-identical output (floats are
printed with 17 significant digits, no timestamps appear in payloads, and
diagnostics go to stderr only).
"""

from __future__ import annotations

import math
import sys

import click

from . import docio, hypgeom, pinchseq, series, strata
from .errors import (
    OutOfRegimeError,
    ParseError,
    PinchcertError,
    PrecisionError,
    ValidationError,
)
from .parser import parse_envelope, parse_germ

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_EMPTY = 3
EXIT_INCONCLUSIVE = 4


def _fail(message: str, code: int = EXIT_INVALID) -> None:
    click.echo(f"pinchcert: error: {message}", err=True)
    sys.exit(code)


def _note(message: str) -> None:
    click.echo(f"pinchcert: note: {message}", err=True)


def _emit(text: str, output: str | None) -> None:
    if output is None:
        click.echo(text)
    else:
        with open(output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text + "\n")


def _parse_positive_ints(raw: str, what: str) -> tuple[int, ...]:
    parts = [piece.strip() for piece in raw.split(",")]
    try:
        return tuple(int(piece) for piece in parts if piece != "")
    except ValueError:
        raise ValidationError(f"{what} must be comma-separated integers, got {raw!r}")


def _parse_floats(raw: str, what: str) -> tuple[float, ...]:
    try:
        return tuple(float(piece) for piece in raw.split(",") if piece.strip() != "")
    except ValueError:
        raise ValidationError(f"{what} must be comma-separated reals, got {raw!r}")


@click.group()
@click.version_option(package_name="pinchcert", prog_name="pinchcert")
def main():
    """Pinching-sequence envelopes and series-domination certificates."""


# ---------------------------------------------------------------------------
# stratum
# ---------------------------------------------------------------------------


@main.command()
@click.option("--kappa", required=True, help="Comma-separated zero orders, e.g. 2,1,1.")
@click.option("--output", "-o", default=None, help="Write the document here instead of stdout.")
def stratum(kappa: str, output: str | None):
    """Coarse-density verdict for the stratum with the given zero orders."""
    try:
        signature = strata.StratumSignature(_parse_positive_ints(kappa, "--kappa"))
        verdict = strata.coarse_density_verdict(signature)
    except ValidationError as exc:
        _fail(str(exc))
    _emit(docio.dumps(verdict.to_json_doc()), output)
    sys.exit(EXIT_OK)


# ---------------------------------------------------------------------------
# sequence / certify (shared configuration flags)
# ---------------------------------------------------------------------------


def _sequence_options(command):
    options = [
        click.option(
            "--regime",
            type=click.Choice([r.value for r in pinchseq.Regime]),
            required=True,
            help="Pinching regime.",
        ),
        click.option("--genus", type=int, required=True, help="Surface genus (>= 2)."),
        click.option("--m-min", "m_min", type=int, default=2, show_default=True),
        click.option(
            "--m-max",
            "m_max",
            type=int,
            default=None,
            help="Default 50 (teichmuller) or 6 (thurston regimes).",
        ),
        click.option("--K", "big_k", type=float, default=0.0, show_default=True,
                     help="Coarse-density distance constant."),
        click.option("--c", "c_const", type=float, default=None,
                     help="Override the length-envelope constant for the regime."),
        click.option("--cprime", type=float, default=math.e,
                     help="Log-magnitude bound constant (configuration echo)."),
        click.option("--eps", type=float, default=0.1, show_default=True,
                     help="Short-curve threshold for the thurston regimes."),
        click.option("--slack", type=float, default=0.05, show_default=True,
                     help="Relative widening applied to both log-magnitude ends."),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def _build_config(
    regime: str,
    genus: int,
    m_min: int,
    m_max: int | None,
    big_k: float,
    c_const: float | None,
    cprime: float,
    eps: float,
    slack: float,
) -> pinchseq.RegimeConfig:
    regime_enum = pinchseq.Regime(regime)
    if m_max is None:
        m_max = pinchseq.DEFAULT_M_MAX[regime_enum]
    consts = hypgeom.HypConstants(
        genus=genus,
        K=big_k,
        wolpert_c=c_const,
        lemma41_c=c_const,
        lemma41_eps=eps,
        cprime=cprime,
    )
    return pinchseq.RegimeConfig(
        regime=regime_enum,
        genus=genus,
        consts=consts,
        m_min=m_min,
        m_max=m_max,
        slack=slack,
    )


@main.command()
@_sequence_options
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json",
              show_default=True)
@click.option("--output", "-o", default=None, help="Write the document here instead of stdout.")
def sequence(regime, genus, m_min, m_max, big_k, c_const, cprime, eps, slack, fmt, output):
    """Build the pinching-sequence envelope table for one regime."""
    try:
        config = _build_config(
            regime, genus, m_min, m_max, big_k, c_const, cprime, eps, slack
        )
        envelope = pinchseq.build_sequence(config, skip_overflow=True)
    except (ValidationError, PrecisionError) as exc:
        _fail(str(exc))
    for trim in envelope.trimmed:
        _note(f"skipped m={trim.m} i={trim.i}: {trim.reason}")
    if not envelope.rows:
        _fail("no envelope rows are representable for this configuration", EXIT_EMPTY)
    if fmt == "csv":
        _emit(envelope.to_csv().rstrip("\n"), output)
    else:
        _emit(docio.dumps(envelope.to_json_doc()), output)
    sys.exit(EXIT_OK)


@main.command()
@click.option("--f", "expression", required=True, help="Germ expression, e.g. 't1 - t2'.")
@click.option("--envelope", "envelope_text", default=None,
              help="Coefficient envelope 'M=<decimal>,r=<decimal>' for unstored terms.")
@click.option("--lead-complete", is_flag=True, default=False,
              help="Assert that every order-minimal term of the series is stored "
                   "(required when --envelope is given).")
@_sequence_options
@click.option("--output", "-o", default=None, help="Write the document here instead of stdout.")
def certify(expression, envelope_text, lead_complete, regime, genus, m_min, m_max,
            big_k, c_const, cprime, eps, slack, output):
    """Run the domination certificate for a germ along a configured sequence."""
    try:
        config = _build_config(
            regime, genus, m_min, m_max, big_k, c_const, cprime, eps, slack
        )
        germ_envelope = parse_envelope(envelope_text) if envelope_text else None
        germ = parse_germ(expression, n=config.n, envelope=germ_envelope)
        envelope = pinchseq.build_sequence(config, skip_overflow=True)
        certificate = series.certify(germ, envelope, lead_complete=lead_complete)
    except ParseError as exc:
        _fail(str(exc))
    except PinchcertError as exc:
        _fail(str(exc))
    for trim in envelope.trimmed:
        _note(f"skipped m={trim.m} i={trim.i}: {trim.reason}")
    _emit(docio.dumps(certificate.to_json_doc()), output)
    sys.exit(EXIT_OK if certificate.m_star is not None else EXIT_INCONCLUSIVE)


# ---------------------------------------------------------------------------
# hyp
# ---------------------------------------------------------------------------


def _hyp_emit(operation: str, inputs: dict, result, output: str | None) -> None:
    doc = {"operation": operation, "inputs": inputs, "result": result}
    _emit(docio.dumps(doc), output)
    sys.exit(EXIT_OK)


@main.group()
def hyp():
    """Scalar hyperbolic-geometry helpers."""


@hyp.command()
@click.option("--length", type=float, required=True)
@click.option("--output", "-o", default=None)
def collar(length, output):
    """Half-width of the embedded collar around a geodesic of the given length."""
    try:
        result = hypgeom.collar_width(length)
    except ValidationError as exc:
        _fail(str(exc))
    _hyp_emit("collar", {"length": length}, result, output)


@hyp.command()
@click.option("--sinh-a", "sinh_a", type=float, required=True)
@click.option("--sinh-b", "sinh_b", type=float, required=True)
@click.option("--output", "-o", default=None)
def pentagon(sinh_a, sinh_b, output):
    """Fifth side of the right-angled pentagon with the given side sinh values."""
    try:
        if sinh_a <= 0.0 or sinh_b <= 0.0:
            raise ValidationError("sinh values must be positive")
        result = hypgeom.pentagon_side(math.asinh(sinh_a), math.asinh(sinh_b))
    except ValidationError as exc:
        _fail(str(exc))
    _hyp_emit("pentagon", {"sinh_a": sinh_a, "sinh_b": sinh_b}, result, output)


@hyp.command()
@click.option("--K", "big_k", type=float, required=True)
@click.option("--length", type=float, required=True)
@click.option("--c", "c_const", type=float, default=None,
              help="Override the envelope constant (default exp(2K)).")
@click.option("--genus", type=int, default=2, show_default=True)
@click.option("--output", "-o", default=None)
def wolpert(big_k, length, c_const, genus, output):
    """Two-sided length envelope [l/c, c*l] at symmetric distance K."""
    try:
        consts = hypgeom.HypConstants(genus=genus, K=big_k, wolpert_c=c_const)
        lo, hi = hypgeom.wolpert_envelope(length, consts)
    except ValidationError as exc:
        _fail(str(exc))
    _hyp_emit("wolpert", {"K": big_k, "length": length, "c": consts.wolpert_c},
              [lo, hi], output)


@hyp.command()
@click.option("--c", "c_const", type=float, required=True)
@click.option("--eps", type=float, required=True)
@click.option("--length", type=float, required=True)
@click.option("--genus", type=int, default=2, show_default=True)
@click.option("--output", "-o", default=None)
def lemma41(c_const, eps, length, genus, output):
    """Short-curve envelope [l/c, c*l^(1/c)] for the asymmetric metric."""
    try:
        consts = hypgeom.HypConstants(
            genus=genus, lemma41_c=c_const, lemma41_eps=eps
        )
        lo, hi = hypgeom.lemma41_envelope(length, consts)
    except (ValidationError, OutOfRegimeError) as exc:
        _fail(str(exc))
    _hyp_emit("lemma41", {"c": c_const, "eps": eps, "length": length}, [lo, hi], output)


@hyp.command(name="thurston-lb")
@click.option("--x-lengths", "x_lengths", required=True,
              help="Comma-separated curve lengths on the source surface.")
@click.option("--y-lengths", "y_lengths", required=True,
              help="Comma-separated curve lengths on the target surface.")
@click.option("--output", "-o", default=None)
def thurston_lb(x_lengths, y_lengths, output):
    """Finite-family lower bound for the asymmetric distance."""
    try:
        xs = _parse_floats(x_lengths, "--x-lengths")
        ys = _parse_floats(y_lengths, "--y-lengths")
        result = hypgeom.thurston_lower_bound(xs, ys)
    except ValidationError as exc:
        _fail(str(exc))
    _hyp_emit(
        "thurston-lb", {"x_lengths": list(xs), "y_lengths": list(ys)}, result, output
    )


if __name__ == "__main__":
    main()
