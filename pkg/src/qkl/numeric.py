"""Arbitrary-precision evaluation, convergence profiling and classical-limit checks."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from qkl.exact import QRationalFunction
from qkl.identities import (
    SeriesSpec,
    VerificationReport,
    finite_form_remainder,
    series_term,
)

__all__ = [
    "GUARD_DIGITS",
    "NonGeometricSeriesError",
    "PrecisionReal",
    "SummationResult",
    "bbb_classical_check",
    "eval_exact",
    "kl_classical_check",
    "markov_parametric_check",
    "numeric_identity_check",
    "odd_zeta_limit_check",
    "precision_bits",
    "remainder_decay_profile",
    "sum_series",
    "terms_to_tolerance",
    "to_exact",
    "zeta_reference",
]

GUARD_DIGITS = 15
RATIO_CEILING = 0.9
DEFAULT_MAX_TERMS = 5000


class NonGeometricSeriesError(ArithmeticError):
    """The geometric stopping rule never fired before the term cap."""

    def __init__(self, spec, terms, rho):
        super().__init__(
            f"{spec.label()}: term ratio {rho:.4g} >= {RATIO_CEILING} after {terms} terms (non-geometric decay)"
        )
        self.terms = terms
        self.rho = rho


@dataclass(frozen=True)
class PrecisionReal:
    """An mpmath real together with the working precision (bits) it was computed at."""

    value: mpmath.mpf
    prec: int

    def __float__(self):
        return float(self.value)

    def __abs__(self):
        return PrecisionReal(abs(self.value), self.prec)

    def __sub__(self, other):
        other_v = other.value if isinstance(other, PrecisionReal) else other
        prec = min(self.prec, other.prec) if isinstance(other, PrecisionReal) else self.prec
        with mpmath.workprec(prec):
            return PrecisionReal(self.value - other_v, prec)

    def digits(self, n):
        return mpmath.nstr(self.value, n)

    def __str__(self):
        return mpmath.nstr(self.value, max(1, int(self.prec * math.log10(2)) - 1))


@dataclass(frozen=True)
class SummationResult:
    value: PrecisionReal
    terms: int
    last_term: PrecisionReal
    tail_bound: PrecisionReal
    converged: bool
    ratio: float


def precision_bits(digits):
    """Working precision for a tolerance of 10**-digits, with guard digits."""
    return int(math.ceil((digits + GUARD_DIGITS) * math.log2(10))) + 8


def _tol_digits(tol):
    tol = to_exact(tol) if not isinstance(tol, mpmath.mpf) else tol
    return max(1, math.ceil(-math.log10(tol)))


def to_exact(v):
    """Parse '0.5', '1/3', ints, floats or Fractions into an exact rational."""
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float):
        return Fraction(repr(v))
    return Fraction(str(v).strip())


def _to_mpf(v):
    if isinstance(v, PrecisionReal):
        return v.value
    if isinstance(v, mpmath.mpf):
        return v
    v = to_exact(v)
    return mpmath.mpf(v.numerator) / v.denominator


def eval_exact(f, q0):
    """Exact value of a rational function (or polynomial) at a rational point."""
    q0 = to_exact(q0)
    if not isinstance(f, QRationalFunction):
        f = QRationalFunction(f)
    return f(q0)


def sum_series(spec, q0=None, x0=None, tol=Fraction(1, 10**30), *, prec=None, max_terms=DEFAULT_MAX_TERMS):
    """Sum ``spec`` until the geometric stopping rule fires.

    With rho the larger of the last two term ratios (over the last three
    terms), stop once rho < 0.9 and |t_k| rho/(1-rho) < tol/2. Raises
    :class:`NonGeometricSeriesError` when ``max_terms`` is reached first.
    """
    if spec.classical:
        q0 = 1
    else:
        if q0 is None:
            raise ValueError(f"{spec.identifier} needs q0")
        qe = to_exact(q0) if not isinstance(q0, (PrecisionReal, mpmath.mpf)) else None
        if (qe is not None and not 0 < qe < 1) or (qe is None and not 0 < _to_mpf(q0) < 1):
            raise ValueError(f"q0 must lie in (0, 1), got {q0}")
    digits = _tol_digits(tol)
    bits = prec or precision_bits(digits)
    with mpmath.workprec(bits):
        tol_v = _to_mpf(tol)
        q = _to_mpf(q0)
        x = _to_mpf(x0) if x0 is not None else None
        total = mpmath.mpf(0)
        mags = []
        rho = 1.0
        for k in range(1, max_terms + 1):
            t = series_term(spec, k, q, x)
            total += t
            mags.append(abs(t))
            if len(mags) < 3:
                continue
            a, b, c = mags[-3:]
            if c == 0 and b == 0:
                rho_v = mpmath.mpf(0)
            elif a == 0 or b == 0:
                rho_v = mpmath.mpf(1)
            else:
                rho_v = max(b / a, c / b)
            rho = float(rho_v)
            if rho_v < RATIO_CEILING:
                tail = c * rho_v / (1 - rho_v)
                if tail < tol_v / 2:
                    return SummationResult(
                        value=PrecisionReal(+total, bits),
                        terms=k,
                        last_term=PrecisionReal(c, bits),
                        tail_bound=PrecisionReal(tail, bits),
                        converged=True,
                        ratio=rho,
                    )
        raise NonGeometricSeriesError(spec, max_terms, rho)


def terms_to_tolerance(spec, q0=None, x0=None, tol=Fraction(1, 10**30), **kw):
    return sum_series(spec, q0, x0, tol, **kw).terms


# ---------------------------------------------------------------------------
# direct summation with an integral tail bracket


def _bracketed_sum(term, tail_integral, K, digits):
    """sum_{k=1}^{K} term(k) + midpoint of [I(K+1), I(K)] for a decreasing positive summand.

    ``term(k)`` returns an exact (numerator, denominator) pair; the partial
    sum is accumulated in fixed-point integers. Returns (estimate, half-width).
    """
    scale = 10 ** (digits + 12 + len(str(K)))
    acc = 0
    for k in range(1, K + 1):
        n, d = term(k)
        acc += scale * n // d
    hi = tail_integral(K)
    lo = tail_integral(K + 1)
    return mpmath.mpf(acc) / scale + (hi + lo) / 2, (hi - lo) / 2


def zeta_reference(m, digits):
    """zeta(m) to ``digits`` decimals by direct summation plus an integral tail bound.

    sum_{k>K} k^-m lies in [(K+1)^{1-m}, K^{1-m}]/(m-1); the midpoint is used
    and K is the smallest cutoff making the half-width < 10^-(digits+2).
    Partial sums are accumulated in fixed-point integers.
    """
    if not isinstance(m, int) or m < 2:
        raise ValueError("zeta_reference needs an integer m >= 2")
    if digits < 1:
        raise ValueError("digits must be positive")
    target = Fraction(1, 10 ** (digits + 2))
    # half-width is at most K^-m / 2
    K = max(2, int(math.ceil((1 / (2 * float(target))) ** (1.0 / m))))
    while Fraction(1, 2 * K**m) > target:
        K += 1
    scale_digits = digits + 12 + len(str(K))
    one = 10**scale_digits
    acc = 0
    for k in range(1, K + 1):
        acc += one // k**m
    bits = precision_bits(digits)
    with mpmath.workprec(bits):
        s = mpmath.mpf(acc) / one
        hi = mpmath.mpf(K) ** (1 - m) / (m - 1)
        lo = mpmath.mpf(K + 1) ** (1 - m) / (m - 1)
        return PrecisionReal(s + (hi + lo) / 2, bits)


def _report(check, params, residual, tol, started, terms=None, details=None):
    res = abs(residual)
    ok = res <= tol
    return VerificationReport(
        check=check,
        params=params,
        status="pass" if ok else "fail",
        witness=mpmath.nstr(residual, 6),
        residual_digits=_digits_of(res),
        terms=terms,
        millis=(time.perf_counter() - started) * 1000,
        details=details or {},
    )


def _digits_of(res):
    if res == 0:
        return None
    return round(-float(mpmath.log10(res)), 2)


def _fmt(v):
    return str(v)


def markov_parametric_check(a, tol=Fraction(1, 10**12)):
    """zeta(3) - sum_{k<=a} 1/k^3 against the accelerated Markov series with parameter a."""
    if not isinstance(a, int) or a < 0:
        raise ValueError("a must be a nonnegative integer")
    started = time.perf_counter()
    digits = _tol_digits(tol)
    z3 = zeta_reference(3, digits + 2)
    res = sum_series(SeriesSpec("markov-parametric-rhs", a=a), tol=Fraction(1, 10 ** (digits + 3)))
    with mpmath.workprec(precision_bits(digits)):
        lhs = z3.value - mpmath.fsum(mpmath.mpf(1) / k**3 for k in range(1, a + 1))
        residual = lhs - res.value.value
        return _report(
            "markov-parametric",
            {"a": a, "tol": _fmt(tol)},
            residual,
            _to_mpf(tol),
            started,
            terms=res.terms,
        )


def _check_x(x0):
    x = to_exact(x0)
    if x.denominator == 1 and x != 0:
        raise ValueError(f"x0 = {x} is a pole (integer x)")
    if not abs(x) < 1:
        raise ValueError(f"x0 must satisfy |x0| < 1, got {x}")
    return x


def kl_classical_check(r_max=8, x0=Fraction(1, 2), tol=Fraction(1, 10**10)):
    """Three members of the odd-zeta generating function identity at x0.

    Passes iff sum 1/(k(k^2-x^2)) (direct + integral tail) agrees with the
    accelerated series within tol, and with sum_{r<=r_max} zeta(2r+3) x^2r
    within tol plus the geometric truncation bound x^{2(r_max+1)} zeta(2r_max+5)/(1-x^2).
    """
    x = _check_x(x0)
    started = time.perf_counter()
    digits = _tol_digits(tol)
    bits = precision_bits(digits)
    res = sum_series(SeriesSpec("kl-classical-rhs"), x0=x, tol=Fraction(1, 10 ** (digits + 3)))
    zetas = [zeta_reference(2 * r + 3, digits + 2) for r in range(r_max + 2)]
    with mpmath.workprec(bits):
        xm = _to_mpf(x)
        x2 = xm * xm

        p, d = x.numerator, x.denominator

        def term(k):
            return d * d, k * (k * k * d * d - p * p)

        def tail(K):
            if x2 == 0:
                return 1 / (2 * mpmath.mpf(K) ** 2)
            return -mpmath.log(1 - x2 / mpmath.mpf(K) ** 2) / (2 * x2)

        K = _cutoff(lambda K: 1 / (2 * K**3 * (1 - float(x2))), digits + 2)
        middle, width = _bracketed_sum(term, tail, K, digits)
        gen = mpmath.fsum(zetas[r].value * x2**r for r in range(r_max + 1))
        bound = x2 ** (r_max + 1) * zetas[r_max + 1].value / (1 - x2)
        tol_v = _to_mpf(tol)
        r_acc = middle - res.value.value
        r_gen = middle - gen
        ok = abs(r_acc) <= tol_v and abs(r_gen) <= bound + tol_v
        return VerificationReport(
            check="kl-classical",
            params={"x": str(x), "r_max": r_max, "tol": _fmt(tol)},
            status="pass" if ok else "fail",
            witness=mpmath.nstr(r_acc, 6),
            residual_digits=_digits_of(abs(r_acc)),
            terms=res.terms,
            millis=(time.perf_counter() - started) * 1000,
            details={
                "generating_residual": mpmath.nstr(r_gen, 6),
                "generating_bound": mpmath.nstr(bound, 6),
                "direct_terms": K,
            },
        )


def bbb_classical_check(x0=Fraction(1, 2), tol=Fraction(1, 10**10)):
    """Even-zeta generating function: sum 1/(k^2-x^2) against its central-binomial series."""
    x = _check_x(x0)
    started = time.perf_counter()
    digits = _tol_digits(tol)
    res = sum_series(SeriesSpec("bbb-classical-rhs"), x0=x, tol=Fraction(1, 10 ** (digits + 3)))
    with mpmath.workprec(precision_bits(digits)):
        xm = _to_mpf(x)

        p, d = x.numerator, x.denominator

        def term(k):
            return d * d, k * k * d * d - p * p

        def tail(K):
            if xm == 0:
                return 1 / mpmath.mpf(K)
            return mpmath.log((K + xm) / (K - xm)) / (2 * xm)

        K = _cutoff(lambda K: 1 / (2 * K**2 * (1 - float(xm) ** 2)), digits + 2)
        direct, width = _bracketed_sum(term, tail, K, digits)
        residual = direct - res.value.value
        return _report(
            "bailey-borwein-bradley",
            {"x": str(x), "tol": _fmt(tol)},
            residual,
            _to_mpf(tol),
            started,
            terms=res.terms,
            details={"direct_terms": K},
        )


def _cutoff(half_width, digits):
    """Smallest power-of-two-ish K with half_width(K) < 10^-digits."""
    K = 16
    while half_width(K) >= 10.0 ** (-digits):
        K *= 2
    lo, hi = K // 2, K
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if half_width(mid) < 10.0 ** (-digits):
            hi = mid
        else:
            lo = mid
    return hi


def odd_zeta_limit_check(r, digits=12):
    """zeta(2r+3) from the classical accelerated expansion vs the direct-summation oracle."""
    if not isinstance(r, int) or r < 0:
        raise ValueError("r must be a nonnegative integer")
    started = time.perf_counter()
    tol = Fraction(1, 10**digits)
    ident = "markov-apery-classical" if r == 0 else "odd-zeta-classical"
    spec = SeriesSpec(ident, r=None if r == 0 else r)
    res = sum_series(spec, tol=tol / 10)
    ref = zeta_reference(2 * r + 3, digits + 2)
    with mpmath.workprec(precision_bits(digits)):
        residual = res.value.value - ref.value
        return _report(
            f"zeta({2 * r + 3})",
            {"r": r, "digits": digits, "series": spec.label()},
            residual,
            _to_mpf(tol),
            started,
            terms=res.terms,
            details={"value": mpmath.nstr(res.value.value, digits + 2)},
        )


NUMERIC_IDENTITIES = {
    "q-even": ("q-even-lhs", "q-even-rhs"),
    "q-even-x0": ("q-even-lhs", "q-even-rhs"),
    "main-bivariate": ("main-bivariate-lhs", "main-bivariate-rhs"),
    "r-family": ("r-family-lhs", "r-family-rhs"),
    "q-markov-apery": ("plain-qzeta", "r-family-rhs"),
}


def numeric_identity_check(identity, q0, x0=None, digits=25, r=0):
    """Sum both sides of a q-identity to 10^-digits and require agreement within 10^-(digits-2).

    ``q-even-x0`` compares the x = 0 special case: sum q^k/[k]^2 against the
    accelerated q-even series at x = 0.
    """
    if identity not in NUMERIC_IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}; choose from {sorted(NUMERIC_IDENTITIES)}")
    started = time.perf_counter()
    lhs_id, rhs_id = NUMERIC_IDENTITIES[identity]
    if identity == "q-even-x0":
        x0 = None
    needs_r = identity in ("r-family", "q-markov-apery")
    lhs_spec = SeriesSpec(lhs_id, r=r if needs_r else None)
    rhs_spec = SeriesSpec(rhs_id, r=r if needs_r else None)
    if x0 is not None and not lhs_spec.uses_x:
        raise ValueError(f"identity {identity!r} has no x variable")
    if x0 is not None:
        _check_x(x0)
    tol = Fraction(1, 10**digits)
    lhs = sum_series(lhs_spec, q0, x0, tol)
    rhs = sum_series(rhs_spec, q0, x0, tol)
    with mpmath.workprec(min(lhs.value.prec, rhs.value.prec)):
        residual = lhs.value.value - rhs.value.value
        params = {"identity": identity, "q": str(to_exact(q0)), "digits": digits}
        if x0 is not None:
            params["x"] = str(to_exact(x0))
        if needs_r:
            params["r"] = r
        return _report(
            f"numeric:{identity}",
            params,
            residual,
            mpmath.mpf(10) ** -(digits - 2),
            started,
            terms=lhs.terms + rhs.terms,
            details={
                "terms_lhs": lhs.terms,
                "terms_rhs": rhs.terms,
                "value": mpmath.nstr(lhs.value.value, digits),
            },
        )


def remainder_decay_profile(r, q0, N_max):
    """[(N, |remainder(N, r)| at q0)] for N = 1..N_max, evaluated exactly."""
    q = to_exact(q0)
    if not 0 < q < 1:
        raise ValueError(f"q0 must lie in (0, 1), got {q}")
    return [(N, abs(eval_exact(finite_form_remainder(N, r), q))) for N in range(1, N_max + 1)]
