"""pinchcert: pinching-sequence envelopes and domination certificates.

The package turns "this family of curves pinches at wildly separated rates"
into machine-checkable arithmetic: hyperbolic length envelopes, log-domain
node-parameter magnitudes, worst-case separation reports, and certificates
that a given analytic germ in the node parameters cannot vanish along the
sequence.  A separate corner handles coarse-density verdicts for strata of
abelian differentials.
"""

from .errors import (
    DegenerateGermError,
    DivergenceError,
    InfeasibleError,
    OutOfRegimeError,
    ParseError,
    PinchcertError,
    PrecisionError,
    ValidationError,
)
from .hypgeom import (
    HypConstants,
    bers_crossing_bound,
    collar_width,
    crossing_length_lower,
    lemma41_envelope,
    pentagon_side,
    thurston_length_upper,
    thurston_lower_bound,
    wolpert_envelope,
)
from .parser import parse_envelope, parse_germ
from .pinchseq import (
    DEFAULT_M_MAX,
    GapScan,
    Regime,
    RegimeConfig,
    SequenceEnvelope,
    build_sequence,
    gap_scan,
    log_envelope_ends,
    min_admissible_m,
    target_length,
    xm_length_envelope,
)
from .plumbing import (
    GapReport,
    extremal_length_estimate,
    gap_check,
    length_envelope_to_log_envelope,
    length_from_log_t,
    log_t_from_length,
    precision_guard,
)
from .series import (
    AnalyticGerm,
    CauchyEnvelope,
    DominationCertificate,
    ExactValue,
    LeadingTerm,
    MultiIndex,
    certify,
    compare,
    eval_exact,
    eval_log_abs_monomial,
    leading_monomial,
    logsumexp,
    minimal_index,
    tail_bound,
)
from .strata import (
    DensityVerdict,
    StratumSignature,
    coarse_density_verdict,
    dim_projective_stratum,
)

__version__ = "0.1.0"
