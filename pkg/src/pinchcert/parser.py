"""Germ expression grammar.

    expr    := ('-')? term (('+'|'-') term)*
    term    := coeff ('*' factor)* | factor ('*' factor)*
    factor  := 't' NAT ('^' NAT)?
    coeff   := DECIMAL | NAT '/' NAT

Whitespace-insensitive.  Variables are t1, t2, ...; the germ arity is the
largest index that appears unless an override is given.  Rational
coefficients (including bare integers) are kept exact; decimal-point
coefficients become doubles.  Equal multi-indices merge by summing their
coefficients, dropping the monomial if the sum is zero.

The optional leading '-' is a convenience on top of the grammar so that
germs like "-t1 + t2" do not need a zero first term.

Coefficient envelopes are given as ``M=<decimal>,r=<decimal>``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, ValidationError
from .series import AnalyticGerm, CauchyEnvelope, Coefficient

_TOKEN_NAMES = {
    "+": "'+'",
    "-": "'-'",
    "*": "'*'",
    "^": "'^'",
    "/": "'/'",
    "t": "'t'",
}


@dataclass(frozen=True)
class _Token:
    kind: str  # NUMBER, T, PLUS, MINUS, STAR, CARET, SLASH, EOF
    lexeme: str
    line: int
    column: int

    def describe(self) -> str:
        return "end of input" if self.kind == "EOF" else repr(self.lexeme)


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, column = 1, 1
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch == "\n":
            line += 1
            column = 1
            pos += 1
            continue
        if ch.isspace():
            column += 1
            pos += 1
            continue
        if ch.isdigit():
            match = re.match(r"\d+(\.\d+)?", text[pos:])
            lexeme = match.group(0)
            tokens.append(_Token("NUMBER", lexeme, line, column))
            pos += len(lexeme)
            column += len(lexeme)
            continue
        kind = {
            "+": "PLUS",
            "-": "MINUS",
            "*": "STAR",
            "^": "CARET",
            "/": "SLASH",
            "t": "T",
        }.get(ch)
        if kind is None:
            raise ParseError(f"unexpected character {ch!r}", line, column, ch)
        tokens.append(_Token(kind, ch, line, column))
        pos += 1
        column += 1
    tokens.append(_Token("EOF", "", line, column))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.current
        self.pos += 1
        return tok

    def error(self, expected: str) -> ParseError:
        tok = self.current
        return ParseError(expected, tok.line, tok.column, tok.describe())

    def expect_nat(self, what: str) -> int:
        tok = self.current
        if tok.kind != "NUMBER" or "." in tok.lexeme:
            raise self.error(f"expected {what}")
        self.advance()
        return int(tok.lexeme)

    def parse_expr(self) -> list[tuple[Coefficient, dict[int, int]]]:
        terms: list[tuple[Coefficient, dict[int, int]]] = []
        negate = False
        if self.current.kind == "MINUS":
            self.advance()
            negate = True
        terms.append(self.parse_term(negate))
        while self.current.kind in ("PLUS", "MINUS"):
            negate = self.advance().kind == "MINUS"
            terms.append(self.parse_term(negate))
        if self.current.kind != "EOF":
            raise self.error("expected '+', '-' or end of expression")
        return terms

    def parse_term(self, negate: bool) -> tuple[Coefficient, dict[int, int]]:
        exponents: dict[int, int] = {}
        if self.current.kind == "NUMBER":
            # coeff-first alternative: factors only after explicit '*'
            coeff = self.parse_coeff()
        elif self.current.kind == "T":
            coeff = Fraction(1)
            self.parse_factor(exponents)
        else:
            raise self.error("expected a coefficient or a variable")
        while self.current.kind == "STAR":
            self.advance()
            self.parse_factor(exponents)
        if negate:
            coeff = -coeff
        return coeff, exponents

    def parse_coeff(self) -> Coefficient:
        tok = self.advance()
        if "." in tok.lexeme:
            value: Coefficient = float(tok.lexeme)
        else:
            value = Fraction(int(tok.lexeme))
            if self.current.kind == "SLASH":
                self.advance()
                denominator = self.expect_nat("a natural-number denominator after '/'")
                if denominator == 0:
                    raise ParseError(
                        "denominator must be nonzero",
                        tok.line,
                        tok.column,
                        tok.lexeme + "/0",
                    )
                value = Fraction(int(tok.lexeme), denominator)
        return value

    def parse_factor(self, exponents: dict[int, int]) -> None:
        if self.current.kind != "T":
            raise self.error("expected a variable factor 't<index>'")
        self.advance()
        index = self.expect_nat("a variable index after 't'")
        if index < 1:
            tok = self.tokens[self.pos - 1]
            raise ParseError(
                "variable indices start at 1", tok.line, tok.column, f"t{index}"
            )
        exponent = 1
        if self.current.kind == "CARET":
            self.advance()
            exponent = self.expect_nat("a natural-number exponent after '^'")
        exponents[index] = exponents.get(index, 0) + exponent


def parse_germ(
    text: str, n: int | None = None, envelope: CauchyEnvelope | None = None
) -> AnalyticGerm:
    """Parse a germ expression into an :class:`AnalyticGerm`.

    ``n`` overrides the arity (largest variable index by default; 1 for a
    pure constant).  Raises ParseError with 1-based line/column on syntax
    errors, ValidationError when a variable index exceeds the override.
    """
    terms = _Parser(_tokenize(text)).parse_expr()

    max_index = max((i for _, exps in terms for i in exps), default=1)
    if n is None:
        n = max_index
    elif max_index > n:
        raise ValidationError(
            f"germ uses variable t{max_index} but the arity is fixed to {n}"
        )

    monomials: dict[tuple[int, ...], Coefficient] = {}
    for coeff, exps in terms:
        alpha = tuple(exps.get(i, 0) for i in range(1, n + 1))
        if alpha in monomials:
            existing = monomials[alpha]
            if isinstance(existing, Fraction) and isinstance(coeff, Fraction):
                merged: Coefficient = existing + coeff
            else:
                merged = float(existing) + float(coeff)
            if merged == 0:
                del monomials[alpha]
            else:
                monomials[alpha] = merged
        else:
            monomials[alpha] = coeff

    return AnalyticGerm(n=n, monomials=monomials, envelope=envelope)


_ENVELOPE_RE = re.compile(
    r"^\s*M\s*=\s*(\d+(?:\.\d+)?)\s*,\s*r\s*=\s*(\d+(?:\.\d+)?)\s*$"
)


def parse_envelope(text: str) -> CauchyEnvelope:
    """Parse ``M=<decimal>,r=<decimal>`` into a coefficient envelope."""
    match = _ENVELOPE_RE.match(text)
    if match is None:
        raise ValidationError(
            f"envelope must look like 'M=<decimal>,r=<decimal>', got {text!r}"
        )
    return CauchyEnvelope(M=float(match.group(1)), r=float(match.group(2)))
