from fractions import Fraction

import mpmath
import pytest

from qkl.exact import QPolynomial, QRationalFunction
from qkl.identities import PoleError, SeriesSpec, build_finite_form, series_term
from qkl.numeric import (
    NonGeometricSeriesError,
    bbb_classical_check,
    eval_exact,
    kl_classical_check,
    markov_parametric_check,
    numeric_identity_check,
    odd_zeta_limit_check,
    precision_bits,
    remainder_decay_profile,
    sum_series,
    terms_to_tolerance,
    to_exact,
    zeta_reference,
)
from qkl.qobjects import harmonic_q, q_binomial, q_int

TOL30 = Fraction(1, 10**30)


def test_eval_exact_examples():
    assert eval_exact(q_int(3), 1) == 3
    assert eval_exact(q_binomial(4, 2), 1) == 6
    assert eval_exact(harmonic_q(2, 1), Fraction(1, 2)) == Fraction(11, 18)
    assert eval_exact(harmonic_q(2, 1), "1/2") == Fraction(11, 18)


def test_eval_exact_pole():
    with pytest.raises(ZeroDivisionError):
        eval_exact(QRationalFunction(1, QPolynomial([1, 1])), -1)


def test_to_exact_parsing():
    assert to_exact("0.5") == Fraction(1, 2)
    assert to_exact("1/3") == Fraction(1, 3)
    assert to_exact(0.25) == Fraction(1, 4)
    assert to_exact(3) == 3


def test_precision_bits_has_guard_digits():
    assert precision_bits(30) >= (30 + 15) * 3.32


def test_plain_vs_accelerated_r0_at_half():
    plain = sum_series(SeriesSpec("plain-qzeta", r=0), Fraction(1, 2), tol=TOL30)
    acc = sum_series(SeriesSpec("r-family-rhs", r=0), Fraction(1, 2), tol=TOL30)
    assert plain.converged and acc.converged
    with mpmath.workprec(plain.value.prec):
        assert abs(plain.value.value - acc.value.value) < mpmath.mpf(10) ** -28
        # independent oracle: brute-force summation far past the tail
        q = mpmath.mpf(1) / 2
        oracle = mpmath.fsum(q**k * (1 + q**k) / ((1 - q**k) / (1 - q)) ** 3 for k in range(1, 200))
        assert abs(plain.value.value - oracle) < mpmath.mpf(10) ** -29
    assert plain.terms >= 3 * acc.terms


@pytest.mark.parametrize("lhs,rhs,x0", [("q-even-lhs", "q-even-rhs", Fraction(1, 3)), ("main-bivariate-lhs", "main-bivariate-rhs", Fraction(1, 2))])
def test_bivariate_examples(lhs, rhs, x0):
    tol = Fraction(1, 10**25)
    a = sum_series(SeriesSpec(lhs), Fraction(1, 2), x0, tol)
    b = sum_series(SeriesSpec(rhs), Fraction(1, 2), x0, tol)
    with mpmath.workprec(a.value.prec):
        assert abs(a.value.value - b.value.value) < mpmath.mpf(10) ** -23


def test_summation_result_tail_estimate():
    res = sum_series(SeriesSpec("r-family-lhs", r=1), Fraction(1, 2), tol=Fraction(1, 10**20))
    assert res.ratio < 0.9
    assert float(res.tail_bound) < 0.5e-20
    assert res.terms == terms_to_tolerance(SeriesSpec("r-family-lhs", r=1), Fraction(1, 2), tol=Fraction(1, 10**20))


def test_markov_apery_term_budget():
    assert terms_to_tolerance(SeriesSpec("markov-apery-classical"), tol=Fraction(1, 10**12)) <= 40


def test_plain_zeta_is_non_geometric():
    with pytest.raises(NonGeometricSeriesError):
        sum_series(SeriesSpec("zeta-classical", m=3), tol=Fraction(1, 10**12), max_terms=2000)


def test_sum_series_rejects_q_outside_unit_interval():
    for q0 in (1, 0, Fraction(3, 2), "-0.5"):
        with pytest.raises(ValueError):
            sum_series(SeriesSpec("r-family-lhs", r=0), q0, tol=Fraction(1, 10**5))


def test_sum_series_pole_detected_per_term():
    # [1]^2 - x^2 q^2 = 0 at q = 1/4, x = 4
    with pytest.raises(PoleError):
        sum_series(SeriesSpec("q-even-lhs"), Fraction(1, 4), 4, Fraction(1, 10**5))


def test_zeta_reference_values():
    z2 = zeta_reference(2, 10)
    assert mpmath.nstr(z2.value, 10) == "1.644934067"
    with mpmath.workprec(z2.prec):
        assert abs(z2.value - mpmath.pi**2 / 6) < mpmath.mpf(10) ** -10
    for m in (3, 5, 7):
        z = zeta_reference(m, 20)
        with mpmath.workprec(z.prec):
            assert abs(z.value - mpmath.zeta(m)) < mpmath.mpf(10) ** -20
    with pytest.raises(ValueError):
        zeta_reference(1, 10)


def test_zeta3_two_routes():
    acc = sum_series(SeriesSpec("markov-apery-classical"), tol=Fraction(1, 10**12))
    ref = zeta_reference(3, 12)
    assert abs(float(acc.value) - float(ref)) < 1e-12


@pytest.mark.parametrize("a,tol", [(0, 12), (1, 12), (2, 10), (3, 10)])
def test_markov_parametric(a, tol):
    assert markov_parametric_check(a, Fraction(1, 10**tol)).passed


@pytest.mark.parametrize("r", range(0, 4))
def test_odd_zeta_limits(r):
    rep = odd_zeta_limit_check(r, 10 if r else 12)
    assert rep.passed, rep


def test_kl_classical():
    assert kl_classical_check(x0=Fraction(1, 2), tol=Fraction(1, 10**10)).passed
    assert kl_classical_check(x0=0, tol=Fraction(1, 10**10)).passed
    with pytest.raises(ValueError):
        kl_classical_check(x0=1)


def test_bbb_classical():
    assert bbb_classical_check(Fraction(1, 2)).passed


def test_numeric_identity_checks():
    assert numeric_identity_check("q-markov-apery", Fraction(1, 2), digits=30).passed
    assert numeric_identity_check("q-even", "0.5", "0.333", digits=25).passed
    for q0 in ("1/4", "1/2", "3/4"):
        rep = numeric_identity_check("q-even-x0", q0, digits=27)
        assert rep.passed and rep.residual_digits >= 25
    with pytest.raises(ValueError):
        numeric_identity_check("q-even", 1, Fraction(1, 3))
    with pytest.raises(ValueError):
        numeric_identity_check("r-family", Fraction(1, 2), Fraction(1, 3))


@pytest.mark.parametrize("spec", [SeriesSpec("r-family-rhs", r=2), SeriesSpec("main-bivariate-rhs"), SeriesSpec("q-even-rhs")])
def test_exact_and_float_partial_sums_agree(spec):
    q0, x0 = Fraction(1, 2), Fraction(1, 3)
    x = x0 if spec.uses_x else None
    K = 12
    exact = sum(series_term(spec, k, q0, x) for k in range(1, K + 1))
    assert isinstance(exact, Fraction)
    bits = precision_bits(30)
    with mpmath.workprec(bits):
        approx = mpmath.fsum(
            series_term(spec, k, mpmath.mpf(1) / 2, mpmath.mpf(1) / 3 if x is not None else None) for k in range(1, K + 1)
        )
        err = abs(approx - mpmath.mpf(exact.numerator) / exact.denominator)
        assert err < mpmath.ldexp(1, -(bits - 60))


@pytest.mark.parametrize("r", [0, 1, 2])
def test_numeric_and_exact_pipelines_reconcile(r):
    q0 = Fraction(1, 2)
    tol = Fraction(1, 10**40)
    lhs_inf = sum_series(SeriesSpec("r-family-lhs", r=r), q0, tol=tol)
    rhs_inf = sum_series(SeriesSpec("r-family-rhs", r=r), q0, tol=tol)
    with mpmath.workprec(lhs_inf.value.prec):
        for N in range(1, 9):
            sides = build_finite_form(N, r)
            lhs_N, main_N, rem_N = (mpmath.mpf(v.numerator) / v.denominator for v in (sides.lhs(q0), sides.rhs_main(q0), sides.remainder(q0)))
            # rem(N) is what separates the two tails
            recovered = (lhs_inf.value.value - lhs_N) - (rhs_inf.value.value - main_N)
            assert abs(recovered - rem_N) < mpmath.mpf(10) ** -37


def test_remainder_decay_profile_shape():
    prof = remainder_decay_profile(2, Fraction(1, 2), 10)
    assert [N for N, _ in prof] == list(range(1, 11))
    vals = [v for _, v in prof]
    assert all(isinstance(v, Fraction) and v >= 0 for v in vals)
    assert all(b < a for a, b in zip(vals[2:], vals[3:]))
    slow = [v for _, v in remainder_decay_profile(0, Fraction(9, 10), 12)]
    assert slow[-1] < slow[2]
    with pytest.raises(ValueError):
        remainder_decay_profile(0, 1, 5)
