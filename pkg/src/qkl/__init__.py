"""q-series identities for odd zeta values, checked two ways.

Exact: canonical rational functions in q, so a finite identity holds iff the
difference of its sides reduces to zero. Numeric: mpmath summation with a
geometric stopping rule, plus classical q = 1 limits.
"""

from qkl.exact import (
    ExactRational,
    NonExactDivisionError,
    QPolynomial,
    QRationalFunction,
    poly_add,
    poly_exact_div,
    poly_gcd,
    poly_mul,
    poly_sub,
    q_monomial,
    ratfun_add,
    ratfun_div,
    ratfun_is_zero,
    ratfun_mul,
    ratfun_sub,
)
from qkl.identities import (
    FiniteFormSides,
    PoleError,
    ResourceLimitError,
    SeriesSpec,
    VerificationReport,
    build_finite_form,
    series_term,
    verify_finite_form,
    verify_lemma_partial_fraction,
    verify_step_combination,
    verify_step_k_telescope,
    verify_step_n_level,
    verify_step_s_telescope,
)
from qkl.kernels import BACKEND
from qkl.numeric import (
    NonGeometricSeriesError,
    PrecisionReal,
    SummationResult,
    bbb_classical_check,
    eval_exact,
    kl_classical_check,
    markov_parametric_check,
    numeric_identity_check,
    odd_zeta_limit_check,
    remainder_decay_profile,
    sum_series,
    terms_to_tolerance,
    zeta_reference,
)
from qkl.qobjects import (
    harmonic_q,
    harmonic_q_bruteforce,
    interval_product,
    q_binomial,
    q_factorial,
    q_int,
)

__version__ = "0.1.0"
