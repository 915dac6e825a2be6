"""Term algebra of an arbitrary signature, the hypersubstitution monoid
with its bijective submonoid, the ext/fa/sa/gamma term-map families, and a
bounded equational-reasoning lab for semigroup varieties."""

from .terms import (
    App,
    CapExceeded,
    ParseError,
    Signature,
    Term,
    TermMetrics,
    Var,
    app,
    enumerate_terms,
    metrics,
    parse_signature,
    parse_term,
    render_term,
    superpose,
    var,
    variables,
)
from .hypersubstitutions import (
    Hypersubstitution,
    compose,
    enumerate_hypersubstitutions,
    extend_apply,
    hyp_equal,
    identity_hyp,
    make_hypersubstitution,
    parse_hypersubstitution,
    render_hypersubstitution,
)
from .bijections import (
    BijCertificate,
    BijOracleVerdict,
    bij_certificate,
    enumerate_bijective,
    invert,
    oracle_bijectivity_bounded,
)
from .rho import RhoKind, apply_rho, check_gamma_homomorphism, generate_F
from .varieties import (
    ASSOCIATIVITY,
    Budget,
    CounterModel,
    CriteriaReport,
    DerivationTrace,
    FiniteSemigroup,
    Identity,
    SEMIGROUP_SIGNATURE,
    SolidityReport,
    TriggerScan,
    VarietyPresentation,
    Verdict,
    bracketings,
    check_bij2_fa_criteria,
    check_bij2_sa_criteria,
    check_rho_solidity,
    classify_gamma_solid,
    decide,
    derive,
    enumerate_finite_semigroups,
    parse_identity,
    parse_presentation,
    refute,
    term_to_word,
    word_from_text,
    word_to_text,
)

__version__ = "0.1.0"
