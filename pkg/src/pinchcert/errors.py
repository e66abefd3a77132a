"""Exception hierarchy shared by all pinchcert modules."""


class PinchcertError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(PinchcertError):
    """Bad input: violated invariant, mismatched arity, malformed flag value.

    The CLI maps these to exit code 2.
    """


class ParseError(ValidationError):
    """Syntax error in a germ expression or envelope string.

    Carries the 1-based position of the offending token so the CLI can
    print a position-annotated diagnostic.
    """

    def __init__(self, message: str, line: int, column: int, token: str):
        self.line = line
        self.column = column
        self.token = token
        super().__init__(
            f"parse error at line {line}, column {column}: {message} (found {token!r})"
        )


class InfeasibleError(ValidationError):
    """The requested geometric object does not exist (e.g. no right-angled
    pentagon with the given side data)."""


class DegenerateGermError(ValidationError):
    """A germ with no stored monomials: the identically-zero series has no
    leading monomial and nothing can be certified about it."""


class OutOfRegimeError(PinchcertError):
    """A short-curve estimate was requested outside its regime of validity.

    ``min_admissible_m`` is the smallest sequence parameter m at which the
    regime hypothesis holds for the requested curve index.
    """

    def __init__(self, message: str, min_admissible_m: int | None = None):
        self.min_admissible_m = min_admissible_m
        super().__init__(message)


class PrecisionError(PinchcertError):
    """A log-magnitude left the representable window.

    Raised instead of silently saturating: a saturated magnitude would make
    downstream domination margins meaningless.
    """


class DivergenceError(PinchcertError):
    """The coefficient-envelope tail sum diverges at the requested point
    (some |t_k| is >= the envelope radius r)."""
