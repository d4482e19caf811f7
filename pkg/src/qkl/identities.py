"""Exact encodings of every displayed identity and of each step of the telescoping proof.

Exact checks build both sides as canonical :class:`QRationalFunction` values
and pass iff their difference is the zero rational function. Series are
described by :class:`SeriesSpec`; :func:`series_term` evaluates term k in
exact rationals, in mpmath reals, or symbolically in q.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import mpmath

from qkl.exact import QRationalFunction, q_monomial
from qkl.qobjects import harmonic_q, interval_product, q_binomial, q_factorial, q_int

__all__ = [
    "FiniteFormSides",
    "PoleError",
    "ResourceLimitError",
    "SERIES_IDENTIFIERS",
    "SYMBOLIC_Q",
    "SeriesSpec",
    "VerificationReport",
    "build_finite_form",
    "finite_form_remainder",
    "series_term",
    "verify_finite_form",
    "verify_lemma_partial_fraction",
    "verify_step_combination",
    "verify_step_k_telescope",
    "verify_step_n_level",
    "verify_step_s_telescope",
]


class ResourceLimitError(RuntimeError):
    """An exact computation exceeded the configured polynomial degree cap."""


class PoleError(ZeroDivisionError):
    """A series term hit a zero denominator."""

    def __init__(self, k, what):
        super().__init__(f"pole at k={k}: {what}")
        self.k = k


@dataclass
class VerificationReport:
    check: str
    params: dict
    status: str
    witness: str = "0"
    residual_digits: float | None = None
    terms: int | None = None
    max_degree: int | None = None
    millis: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.status == "pass"

    def to_dict(self):
        """JSON-ready dict; timing lives under ``metadata`` so reports diff cleanly."""
        out = {
            "check": self.check,
            "params": self.params,
            "status": self.status,
            "witness": self.witness,
            "residual_digits": self.residual_digits,
            "terms": self.terms,
            "max_degree": self.max_degree,
        }
        if self.details:
            out["details"] = self.details
        out["metadata"] = {"millis": round(self.millis, 3)}
        return out


def _exact_report(check, params, diff, started, max_degree=None):
    status = "pass" if diff.is_zero() else "fail"
    return VerificationReport(
        check=check,
        params=params,
        status=status,
        witness=str(diff),
        max_degree=max_degree if max_degree is not None else diff.max_degree,
        millis=(time.perf_counter() - started) * 1000,
    )


# ---------------------------------------------------------------------------
# exact building blocks as rational functions

Q = q_monomial(1)


def _R(p):
    return QRationalFunction(p)


def _qi(n):
    return _R(q_int(n))


def _binom2(n):
    return n * (n - 1) // 2


def _sign(e):
    return -1 if e % 2 else 1


# ---------------------------------------------------------------------------
# finite form


@dataclass(frozen=True)
class FiniteFormSides:
    lhs: QRationalFunction
    rhs_main: QRationalFunction
    remainder: QRationalFunction
    N: int
    r: int

    def difference(self):
        """lhs - (rhs_main - remainder); zero iff the finite form holds."""
        return self.lhs - self.rhs_main + self.remainder

    @property
    def max_degree(self):
        return max(self.lhs.max_degree, self.rhs_main.max_degree, self.remainder.max_degree)


def _check_cap(value, cap):
    if cap is not None and value.max_degree > cap:
        raise ResourceLimitError(f"degree {value.max_degree} exceeds cap {cap}")
    return value


def _main_weight(k, r):
    """(1+3q^k+q^2k) H_{k-1}(r) + (1+q^k)^2 sum_j (-1)^j q^{kj}/[k]^{2j} H_{k-1}(r-j)."""
    qk = Q ** k
    w = (1 + 3 * qk + qk * qk) * harmonic_q(k - 1, r)
    if r:
        inner = QRationalFunction(0)
        ratio = qk / _qi(k) ** 2
        for j in range(1, r + 1):
            inner = inner + _sign(j) * ratio ** j * harmonic_q(k - 1, r - j)
        w = w + (1 + qk) ** 2 * inner
    return w


def finite_form_lhs(N, r, *, max_degree=None):
    total = QRationalFunction(0)
    for k in range(1, N + 1):
        total = _check_cap(
            total + (Q ** ((r + 1) * k) + Q ** ((r + 2) * k)) / _qi(k) ** (2 * r + 3), max_degree
        )
    return total


def finite_form_main(N, r, *, max_degree=None):
    total = QRationalFunction(0)
    for k in range(1, N + 1):
        head = _sign(k - 1 + r) * Q ** (k * (k + 1) // 2) / (_qi(k) ** 3 * _R(q_binomial(2 * k, k)))
        total = _check_cap(total + head * _main_weight(k, r), max_degree)
    return total


def finite_form_remainder(N, r, *, max_degree=None):
    """sum_{k=1}^{N} (-1)^{k-1+r} q^{-C(k,2)+Nk+k} H_{k-1}(r) / ([k]^3 qbin(N,k) qbin(N+k,k))."""
    total = QRationalFunction(0)
    for k in range(1, N + 1):
        h = harmonic_q(k - 1, r)
        if h.is_zero():
            continue
        den = _R(q_int(k) ** 3 * q_binomial(N, k) * q_binomial(N + k, k))
        term = _sign(k - 1 + r) * q_monomial(-_binom2(k) + N * k + k) / den * h
        total = _check_cap(total + term, max_degree)
    return total


def build_finite_form(N, r, *, max_degree=None):
    """Partial sums of both sides of the r-family plus the explicit remainder, for fixed (N, r)."""
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"N must be an integer >= 1, got {N!r}")
    if not isinstance(r, int) or r < 0:
        raise ValueError(f"r must be an integer >= 0, got {r!r}")
    return FiniteFormSides(
        lhs=finite_form_lhs(N, r, max_degree=max_degree),
        rhs_main=finite_form_main(N, r, max_degree=max_degree),
        remainder=finite_form_remainder(N, r, max_degree=max_degree),
        N=N,
        r=r,
    )


def verify_finite_form(N, r, *, max_degree=None, sabotage=None):
    """Exact check of lhs == rhs_main - remainder.

    ``sabotage="remainder-sign"`` flips the remainder (negative control).
    """
    started = time.perf_counter()
    sides = build_finite_form(N, r, max_degree=max_degree)
    remainder = -sides.remainder if sabotage == "remainder-sign" else sides.remainder
    diff = sides.lhs - sides.rhs_main + remainder
    params = {"N": N, "r": r}
    if sabotage:
        params["sabotage"] = sabotage
    return _exact_report("finite-form", params, diff, started, sides.max_degree)


# ---------------------------------------------------------------------------
# proof steps


def _H(k, s, minus_one):
    if s == -1:
        return QRationalFunction(minus_one)
    return harmonic_q(k, s)


def _deg(*values):
    return max(v.max_degree for v in values)


def _require(cond, msg):
    if not cond:
        raise ValueError(msg)


def _combination_sides(n, k, s, *, minus_one=0, drop_lower=False):
    qi_k2 = _qi(k) ** 2
    lhs = Q ** (n - k) * _H(k, s, minus_one) + _qi(n + k) * _qi(n - k) / qi_k2 * _H(k - 1, s, minus_one)
    rhs = _qi(n) ** 2 / qi_k2 * _H(k - 1, s, minus_one)
    if not drop_lower:
        rhs = rhs + Q ** n / qi_k2 * _H(k - 1, s - 1, minus_one)
    return lhs, rhs


def verify_step_combination(n, k, s, *, drop_lower=False):
    """q^{n-k}H_k + [n+k][n-k]/[k]^2 H_{k-1} == [n]^2/[k]^2 H_{k-1} + q^n/[k]^2 H_{k-1}(s-1)."""
    _require(n >= 2 and 1 <= k <= n - 1 and s >= 1, f"need n >= 2, 1 <= k <= n-1, s >= 1; got {(n, k, s)}")
    started = time.perf_counter()
    lhs, rhs = _combination_sides(n, k, s, drop_lower=drop_lower)
    params = {"n": n, "k": k, "s": s}
    if drop_lower:
        params["sabotage"] = "drop-lower-depth"
    return _exact_report("step-combination", params, lhs - rhs, started, _deg(lhs, rhs))


def _k_multiplier(n, k):
    """(-1)^k q^{-C(n-k+1,2)} ([k]!)^2 / prod_{j=n-k}^{n+k} [j]."""
    return _sign(k) * q_monomial(-_binom2(n - k + 1)) * _R(q_factorial(k) ** 2) / _R(interval_product(n - k, n + k))


def verify_step_k_telescope(n, s):
    """Sum over k=1..n-1 of the multiplied combination identity collapses to its boundary terms.

    Checks both that every multiplied summand equals the displayed difference
    T(k) - T(k-1), and that the full sum equals the closed boundary
    expression (-1)^{n-1}(1+q^n)/([n] qbin(2n,n)) H_{n-1}(s) - q^{-C(n,2)}/[n] H_0(s).
    """
    _require(n >= 2 and s >= 0, f"need n >= 2, s >= 0; got {(n, s)}")
    started = time.perf_counter()
    total = QRationalFunction(0)
    mismatch = None
    for k in range(1, n):
        mult = _k_multiplier(n, k)
        comb_lhs = Q ** (n - k) * _H(k, s, 0) + _qi(n + k) * _qi(n - k) / _qi(k) ** 2 * _H(k - 1, s, 0)
        summand = mult * comb_lhs
        total = total + summand
        prev = (
            _sign(k - 1)
            * q_monomial(-_binom2(n - k + 1))
            * _R(q_factorial(k - 1) ** 2)
            / _R(interval_product(n - k + 1, n + k - 1))
            * _H(k - 1, s, 0)
        )
        cur = _sign(k) * q_monomial(-_binom2(n - k)) * _R(q_factorial(k) ** 2) / _R(interval_product(n - k, n + k)) * _H(k, s, 0)
        if mismatch is None and summand != cur - prev:
            mismatch = k
    boundary = (
        _sign(n - 1) * (1 + Q ** n) / (_qi(n) * _R(q_binomial(2 * n, n))) * _H(n - 1, s, 0)
        - q_monomial(-_binom2(n)) / _qi(n) * _H(0, s, 0)
    )
    diff = total - boundary
    report = _exact_report("step-k-telescope", {"n": n, "s": s}, diff, started, _deg(total, boundary))
    if mismatch is not None:
        report.status = "fail"
        report.witness = f"summand k={mismatch} differs from its displayed difference form"
    return report


def verify_lemma_partial_fraction(n, k):
    """(1+q^n) q^{nk} / prod_{n-k}^{n+k}[j] == (q^{nk}/prod_{n-k}^{n+k-1}[j] - q^{(n+1)k}/prod_{n-k+1}^{n+k}[j]) / [k]."""
    _require(1 <= k <= n - 1, f"need 1 <= k <= n-1 (k = n would bring in [0]_q); got n={n}, k={k}")
    started = time.perf_counter()
    lhs = (1 + Q ** n) * Q ** (n * k) / _R(interval_product(n - k, n + k))
    rhs = (
        Q ** (n * k) / _R(interval_product(n - k, n + k - 1))
        - Q ** ((n + 1) * k) / _R(interval_product(n - k + 1, n + k))
    ) / _qi(k)
    return _exact_report("lemma-partial-fraction", {"n": n, "k": k}, lhs - rhs, started, _deg(lhs, rhs))


def verify_step_s_telescope(n, k, r, *, minus_one=0):
    """sum_{s=0}^{r-1} of the s-weighted bracket collapses to (-1)^{r-1} q^n H_{k-1}(r-1).

    ``minus_one`` is the value used for H_{k-1}({2}^{-1}); anything other than
    0 breaks the collapse, which is what the negative control shows.
    """
    _require(n >= 2 and 1 <= k <= n - 1 and r >= 1, f"need n >= 2, 1 <= k <= n-1, r >= 1; got {(n, k, r)}")
    started = time.perf_counter()
    qn = _qi(n)
    total = QRationalFunction(0)
    for s in range(r):
        total = total + (
            _sign(s) * Q ** ((r - s) * n) / qn ** (2 * r - 2 * s - 2) * _H(k - 1, s, minus_one)
            - _sign(s - 1) * Q ** ((r - s + 1) * n) / qn ** (2 * r - 2 * s) * _H(k - 1, s - 1, minus_one)
        )
    expected = _sign(r - 1) * Q ** n * _H(k - 1, r - 1, minus_one)
    params = {"n": n, "k": k, "r": r}
    if minus_one != 0:
        params["sabotage"] = f"depth-minus-one={minus_one}"
    return _exact_report("step-s-telescope", params, total - expected, started, _deg(total, expected))


def verify_step_n_level(n, r):
    """Both telescoping stages assembled for one n (r >= 1):

    sum_{s<r} (-1)^{n-1+s} q^{C(n,2)+(r-s)n}(1+q^n)^2/([n]^{2r-2s+1} qbin(2n,n)) H_{n-1}(s)
        - (q^{rn}+q^{(r+1)n})/[n]^{2r+1}
    == (-1)^{r-1}(1+q^n) sum_{k=1}^{n-1} (-1)^k q^{-C(k,2)+nk} ([k-1]!)^2/prod_{n-k}^{n+k}[j] H_{k-1}(r-1)
    """
    _require(n >= 1 and r >= 1, f"need n >= 1, r >= 1; got {(n, r)}")
    started = time.perf_counter()
    qn = _qi(n)
    cbin = _R(q_binomial(2 * n, n))
    lhs = QRationalFunction(0)
    for s in range(r):
        lhs = lhs + (
            _sign(n - 1 + s) * Q ** (_binom2(n) + (r - s) * n) * (1 + Q ** n) ** 2
            / (qn ** (2 * r - 2 * s + 1) * cbin) * harmonic_q(n - 1, s)
        )
    lhs = lhs - (Q ** (r * n) + Q ** ((r + 1) * n)) / qn ** (2 * r + 1)
    rhs = QRationalFunction(0)
    for k in range(1, n):
        rhs = rhs + (
            _sign(k) * q_monomial(-_binom2(k) + n * k) * _R(q_factorial(k - 1) ** 2)
            / _R(interval_product(n - k, n + k)) * harmonic_q(k - 1, r - 1)
        )
    rhs = _sign(r - 1) * (1 + Q ** n) * rhs
    return _exact_report("step-n-level", {"n": n, "r": r}, lhs - rhs, started, _deg(lhs, rhs))


# ---------------------------------------------------------------------------
# series


SYMBOLIC_Q = "q"

Q_SERIES = {
    "main-bivariate-lhs",
    "main-bivariate-rhs",
    "r-family-lhs",
    "r-family-rhs",
    "plain-qzeta",
    "q-even-lhs",
    "q-even-rhs",
}
CLASSICAL_SERIES = {
    "markov-apery-classical",
    "markov-parametric-lhs",
    "markov-parametric-rhs",
    "kl-classical-lhs",
    "kl-classical-rhs",
    "bbb-classical-lhs",
    "bbb-classical-rhs",
    "odd-zeta-classical",
    "zeta-classical",
}
SERIES_IDENTIFIERS = frozenset(Q_SERIES | CLASSICAL_SERIES)


@dataclass(frozen=True)
class SeriesSpec:
    """One displayed infinite series, as term(k) for k >= 1.

    ``r`` indexes the r-family / odd-zeta expansions, ``a`` the Markov
    parameter and ``m`` the exponent of the plain classical zeta series.
    """

    identifier: str
    r: int | None = None
    a: int | None = None
    m: int | None = None

    def __post_init__(self):
        if self.identifier not in SERIES_IDENTIFIERS:
            raise ValueError(f"unknown series {self.identifier!r}")

    @property
    def classical(self):
        return self.identifier in CLASSICAL_SERIES

    @property
    def uses_x(self):
        return self.identifier.startswith(("main-bivariate", "q-even", "kl-classical", "bbb-classical"))

    def label(self):
        extra = [f"{n}={v}" for n, v in (("r", self.r), ("a", self.a), ("m", self.m)) if v is not None]
        return self.identifier + (f"[{','.join(extra)}]" if extra else "")


class _Arith:
    """Arithmetic for one evaluation domain: exact rationals, mpmath reals or symbolic q."""

    def __init__(self, q):
        self.symbolic = isinstance(q, str) or isinstance(q, QRationalFunction)
        if self.symbolic:
            self.q = Q
            self.exact = True
        elif isinstance(q, mpmath.mpf):
            self.q = q
            self.exact = False
        else:
            self.q = Fraction(q)
            self.exact = True
        self.one = Fraction(1) if self.exact and not self.symbolic else (1 if self.exact else mpmath.mpf(1))

    def num(self, v):
        if self.exact:
            return Fraction(v) if isinstance(v, int) and not self.symbolic else v
        if isinstance(v, mpmath.mpf):
            return v
        if isinstance(v, Fraction):
            return mpmath.mpf(v.numerator) / v.denominator
        return mpmath.mpf(v)

    def qpow(self, e):
        if self.symbolic:
            return q_monomial(e)
        return self.q ** e if e >= 0 else self.one / self.q ** (-e)

    def qint(self, n):
        if self.symbolic:
            return _qi(n)
        q = self.q
        if q == 1:
            return Fraction(n) if self.exact else mpmath.mpf(n)
        return (self.one - q ** n) / (self.one - q)

    def qbinom(self, n, k):
        if self.symbolic:
            return _R(q_binomial(n, k))
        out = self.one
        for i in range(1, k + 1):
            out = out * self.qint(n - k + i) / self.qint(i)
        return out

    def harmonic(self, k, smax):
        """[H_{q,k}({2}^s) for s = 0..smax] (classical harmonic sums at q = 1)."""
        if self.symbolic:
            return [harmonic_q(k, s) for s in range(smax + 1)]
        h = [self.one] + [self.one * 0] * smax
        for m in range(1, k + 1):
            step = self.qpow(m) / self.qint(m) ** 2
            for s in range(smax, 0, -1):
                h[s] = h[s] + step * h[s - 1]
        return h

    def nonzero(self, v, k, what):
        if self.exact:
            zero = v.is_zero() if isinstance(v, QRationalFunction) else v == 0
        else:
            prec = mpmath.mp.prec
            zero = abs(v) < mpmath.ldexp(1, -(prec // 2))
        if zero:
            raise PoleError(k, what)
        return v


def _classical_binom(n, k, A):
    return A.num(comb(n, k))


def series_term(spec, k, q=None, x=None):
    """Term k (k >= 1) of the series ``spec``.

    ``q`` is a Fraction/int (exact result), an ``mpmath.mpf`` (result at the
    current mpmath precision) or ``SYMBOLIC_Q`` (a QRationalFunction in q).
    Classical series are the q = 1 members and take q = 1 (default) or
    ``mpmath.mpf(1)``; the type still selects the arithmetic. ``x`` defaults
    to 0 and must match the arithmetic of q.
    """
    if k < 1:
        raise ValueError("series terms are indexed from k = 1")
    if spec.classical:
        q = 1 if q is None else q
        if q != 1:
            raise ValueError(f"{spec.identifier} is a classical (q = 1) series")
    elif q is None:
        raise ValueError(f"{spec.identifier} needs a value of q")
    A = _Arith(q)
    x2 = A.num(0 if x is None else x) ** 2
    if A.symbolic and not isinstance(x2, QRationalFunction):
        x2 = QRationalFunction(Fraction(x2))
    return _TERMS[spec.identifier](spec, k, A, x2)


def _t_main_lhs(spec, k, A, x2):
    qk = A.qpow(k)
    ik = A.qint(k)
    den = A.nonzero(ik * ik - x2 * qk, k, "[k]^2 - x^2 q^k")
    return (qk + qk * qk) / (ik * den)


def _t_main_rhs(spec, k, A, x2):
    qk = A.qpow(k)
    ik = A.qint(k)
    ik2 = ik * ik
    den = A.nonzero(ik2 - x2 * qk, k, "[k]^2 - x^2 q^k")
    head = _sign(k - 1) * A.qpow(k * (k + 1) // 2) / (ik2 * ik * A.qbinom(2 * k, k))
    ratio = ((1 + 3 * qk + qk * qk) * ik2 - x2 * qk * qk) / den
    prod = A.one
    for m in range(1, k):
        im = A.qint(m)
        prod = prod * (1 - x2 * A.qpow(m) / (im * im))
    return head * ratio * prod


def _t_rfam_lhs(spec, k, A, x2):
    r = spec.r or 0
    return (A.qpow((r + 1) * k) + A.qpow((r + 2) * k)) / A.qint(k) ** (2 * r + 3)


def _t_plain_qzeta(spec, k, A, x2):
    r = spec.r or 0
    return A.qpow((r + 1) * k) * (1 + A.qpow(k)) / A.qint(k) ** (2 * r + 3)


def _t_rfam_rhs(spec, k, A, x2):
    r = spec.r or 0
    qk = A.qpow(k)
    ik = A.qint(k)
    h = A.harmonic(k - 1, r)
    w = (1 + 3 * qk + qk * qk) * h[r]
    if r:
        inner = A.one * 0
        for j in range(1, r + 1):
            inner = inner + _sign(j) * qk ** j / ik ** (2 * j) * h[r - j]
        w = w + (1 + qk) ** 2 * inner
    return _sign(k - 1 + r) * A.qpow(k * (k + 1) // 2) / (ik ** 3 * A.qbinom(2 * k, k)) * w


def _t_qeven_lhs(spec, k, A, x2):
    ik = A.qint(k)
    return A.qpow(k) / A.nonzero(ik * ik - x2 * A.qpow(2 * k), k, "[k]^2 - x^2 q^2k")


def _t_qeven_rhs(spec, k, A, x2):
    ik = A.qint(k)
    head = A.qpow(k * k) * (1 + 2 * A.qpow(k)) / (ik * ik * A.qbinom(2 * k, k))
    num = A.one
    for m in range(1, k):
        im = A.qint(m)
        num = num * (1 - x2 * (1 + A.qpow(m)) ** 2 / (im * im))
    den = A.one
    for m in range(1, k + 1):
        im = A.qint(m)
        den = den * (1 - x2 * A.qpow(2 * m) / (im * im))
    return head * num / A.nonzero(den, k, "prod (1 - x^2 q^2m/[m]^2)")


def _t_markov_apery(spec, k, A, x2):
    return A.num(Fraction(5, 2)) * _sign(k - 1) / (A.num(k) ** 3 * _classical_binom(2 * k, k, A))


def _t_markov_param_lhs(spec, k, A, x2):
    return A.one / A.num(k + (spec.a or 0)) ** 3


def _t_markov_param_rhs(spec, k, A, x2):
    a = spec.a or 0
    kk = A.num(k)
    num = A.num(Fraction(5, 2)) * kk * kk + 3 * a * kk + a * a
    return _sign(k - 1) * num / (kk ** 5 * _classical_binom(2 * k, k, A) * _classical_binom(a + k, a, A) ** 4)


def _t_kl_lhs(spec, k, A, x2):
    kk = A.num(k)
    return A.one / (kk * A.nonzero(kk * kk - x2, k, "k^2 - x^2"))


def _t_kl_rhs(spec, k, A, x2):
    kk = A.num(k)
    k2 = kk * kk
    prod = A.one
    for m in range(1, k):
        prod = prod * (1 - x2 / A.num(m * m))
    head = A.num(Fraction(1, 2)) * _sign(k - 1) / (k2 * kk * _classical_binom(2 * k, k, A))
    return head * (5 * k2 - x2) / A.nonzero(k2 - x2, k, "k^2 - x^2") * prod


def _t_bbb_lhs(spec, k, A, x2):
    return A.one / A.nonzero(A.num(k * k) - x2, k, "k^2 - x^2")


def _t_bbb_rhs(spec, k, A, x2):
    num = A.one
    for m in range(1, k):
        num = num * (1 - 4 * x2 / A.num(m * m))
    den = A.one
    for m in range(1, k + 1):
        den = den * (1 - x2 / A.num(m * m))
    return 3 * num / (A.num(k * k) * _classical_binom(2 * k, k, A) * A.nonzero(den, k, "prod (1 - x^2/m^2)"))


def _t_odd_zeta(spec, k, A, x2):
    r = spec.r or 0
    kk = A.num(k)
    h = A.harmonic(k - 1, r)
    w = A.num(Fraction(5, 2)) * h[r]
    for j in range(1, r + 1):
        w = w + 2 * _sign(j) / kk ** (2 * j) * h[r - j]
    return _sign(k - 1 - r) / (kk ** 3 * _classical_binom(2 * k, k, A)) * w


def _t_zeta(spec, k, A, x2):
    return A.one / A.num(k) ** (spec.m or 3)


_TERMS = {
    "main-bivariate-lhs": _t_main_lhs,
    "main-bivariate-rhs": _t_main_rhs,
    "r-family-lhs": _t_rfam_lhs,
    "r-family-rhs": _t_rfam_rhs,
    "plain-qzeta": _t_plain_qzeta,
    "q-even-lhs": _t_qeven_lhs,
    "q-even-rhs": _t_qeven_rhs,
    "markov-apery-classical": _t_markov_apery,
    "markov-parametric-lhs": _t_markov_param_lhs,
    "markov-parametric-rhs": _t_markov_param_rhs,
    "kl-classical-lhs": _t_kl_lhs,
    "kl-classical-rhs": _t_kl_rhs,
    "bbb-classical-lhs": _t_bbb_lhs,
    "bbb-classical-rhs": _t_bbb_rhs,
    "odd-zeta-classical": _t_odd_zeta,
    "zeta-classical": _t_zeta,
}
