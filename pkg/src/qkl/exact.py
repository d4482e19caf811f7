"""Exact arithmetic in one variable q.

``QPolynomial`` is a dense polynomial with rational coefficients and
``QRationalFunction`` a reduced quotient of two of them. Internally both
work on integer coefficient lists (see :mod:`qkl.kernels`) with a single
scalar denominator, so no per-coefficient fraction arithmetic happens in the
inner loops.

Canonical form of a rational function: numerator and denominator coprime,
denominator with integer coefficients, content 1 and positive leading
coefficient. Two rational functions are equal iff their canonical forms are
identical.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from numbers import Rational

from qkl import kernels as K

ExactRational = Fraction

__all__ = [
    "ExactRational",
    "NonExactDivisionError",
    "QPolynomial",
    "QRationalFunction",
    "poly_add",
    "poly_exact_div",
    "poly_gcd",
    "poly_mul",
    "poly_sub",
    "q_monomial",
    "ratfun_add",
    "ratfun_div",
    "ratfun_is_zero",
    "ratfun_mul",
    "ratfun_sub",
]


class NonExactDivisionError(ArithmeticError):
    """A division that was required to be exact left a remainder."""


# ---------------------------------------------------------------------------
# integer polynomial helpers


def _primitive(a):
    """Split a nonzero integer polynomial into (content, primitive part), sign in content."""
    c = K.content(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return 1, a
    return c, [x // c for x in a]


def _maxnorm(a):
    return max(abs(c) for c in a)


def _heu_gcd(f, g):
    """Heuristic gcd of primitive integer polynomials (GCDHEU); None on failure."""
    nf, ng = _maxnorm(f), _maxnorm(g)
    b = 2 * min(nf, ng) + 29
    x = max(min(b, 99 * isqrt(b)), 2 * min(nf // abs(f[-1]), ng // abs(g[-1])) + 2)
    for _ in range(6):
        ff = K.eval_int(f, x)
        gg = K.eval_int(g, x)
        if ff and gg:
            h = gcd(ff, gg)
            coeffs = []
            half = x // 2
            while h:
                c = h % x
                if c > half:
                    c -= x
                coeffs.append(c)
                h = (h - c) // x
            K.strip(coeffs)
            if coeffs:
                _, cand = _primitive(coeffs)
                if K.exact_quo(f, cand) is not None and K.exact_quo(g, cand) is not None:
                    return cand
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


def _prs_gcd(f, g):
    """Primitive polynomial remainder sequence gcd of primitive integer polynomials."""
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = K.prem(f, g)
        f = g
        g = _primitive(r)[1] if r else []
    return _primitive(f)[1]


def _int_gcd(f, g, *, method="auto"):
    """Primitive gcd with positive leading coefficient of two integer polynomials."""
    if not f:
        return _primitive(g)[1] if g else []
    if not g:
        return _primitive(f)[1]
    if len(f) == 1 or len(g) == 1:
        return [1]
    f = _primitive(f)[1]
    g = _primitive(g)[1]
    if f == g:
        return f
    if method != "prs":
        h = _heu_gcd(f, g)
        if h is not None or method == "heu":
            return h
    return _prs_gcd(f, g)


def _exact_quo_int(a, b):
    q = K.exact_quo(a, b)
    if q is None:
        raise NonExactDivisionError("divisor does not divide dividend exactly")
    return q


def _monomial_ints(e):
    return [0] * e + [1]


# ---------------------------------------------------------------------------
# QPolynomial


class QPolynomial:
    """Dense polynomial in q with exact rational coefficients (immutable).

    Stored as integer coefficients ``_num`` over a positive integer ``_den``
    with gcd(content(_num), _den) == 1.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, coefficients=()):
        coefficients = [Fraction(c) for c in coefficients]
        den = 1
        for c in coefficients:
            den = den * c.denominator // gcd(den, c.denominator)
        num = [int(c * den) for c in coefficients]
        self._set(K.strip(num), den)

    def _set(self, num, den):
        if not num:
            den = 1
        elif den != 1:
            g = gcd(K.content(num), den)
            if g != 1:
                num = [c // g for c in num]
                den //= g
        self._num = num
        self._den = den

    @classmethod
    def _raw(cls, num, den=1):
        self = object.__new__(cls)
        self._set(num, den)
        return self

    @classmethod
    def monomial(cls, e, c=1):
        if e < 0:
            raise ValueError("negative exponent; use q_monomial for Laurent monomials")
        c = Fraction(c)
        return cls._raw([0] * e + [c.numerator] if c else [], c.denominator)

    @classmethod
    def constant(cls, c):
        c = Fraction(c)
        return cls._raw([c.numerator] if c else [], c.denominator)

    # -- inspection ---------------------------------------------------------

    @property
    def coefficients(self):
        d = self._den
        return tuple(Fraction(c, d) for c in self._num)

    @property
    def degree(self):
        """Exponent of the leading term; -1 for the zero polynomial."""
        return len(self._num) - 1

    def is_zero(self):
        return not self._num

    def is_integral(self):
        return self._den == 1

    def leading_coefficient(self):
        return Fraction(self._num[-1], self._den) if self._num else Fraction(0)

    def __getitem__(self, i):
        if 0 <= i < len(self._num):
            return Fraction(self._num[i], self._den)
        return Fraction(0)

    def __len__(self):
        return len(self._num)

    def __bool__(self):
        return bool(self._num)

    def __call__(self, q0):
        """Evaluate at q0 (Fraction/int exactly, anything else by Horner)."""
        if isinstance(q0, Rational):
            q0 = Fraction(q0)
            v = K.eval_homogeneous(self._num, q0.numerator, q0.denominator)
            return Fraction(v, self._den * q0.denominator ** max(self.degree, 0))
        acc = 0
        for c in reversed(self._num):
            acc = acc * q0 + c
        return acc / self._den

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return QPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        da, db = self._den, other._den
        if da == db:
            return QPolynomial._raw(K.add(self._num, other._num), da)
        g = gcd(da, db)
        return QPolynomial._raw(
            K.add(K.scale(self._num, db // g), K.scale(other._num, da // g)), da // g * db
        )

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial._raw([-c for c in self._num], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QPolynomial._raw(K.mul(self._num, other._num), self._den * other._den)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = QPolynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def exact_div(self, other):
        """Quotient when ``other`` divides ``self`` exactly; NonExactDivisionError otherwise."""
        if not other._num:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._num:
            return self
        ca, pa = _primitive(self._num)
        cb, pb = _primitive(other._num)
        quo = _exact_quo_int(pa, pb)
        scalar = Fraction(ca * other._den, cb * self._den)
        return QPolynomial._raw(K.scale(quo, scalar.numerator), scalar.denominator)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash((tuple(self._num), self._den))

    def __repr__(self):
        return f"QPolynomial({_format_poly(self._num, self._den)!r})"

    def __str__(self):
        return _format_poly(self._num, self._den)


def _format_poly(num, den=1):
    if not num:
        return "0"
    parts = []
    for e, c in enumerate(num):
        if not c:
            continue
        c = Fraction(c, den)
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = "q" if e == 1 else f"q^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def poly_add(a, b):
    return a + b


def poly_sub(a, b):
    return a - b


def poly_mul(a, b):
    return a * b


def poly_exact_div(a, b):
    return a.exact_div(b)


def poly_gcd(a, b):
    """Primitive gcd with integer coefficients and positive leading coefficient.

    Rational inputs are first cleared to integer polynomials; the result is
    therefore unique up to nothing (primitive + sign fixed).
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    return QPolynomial._raw(_int_gcd(a._num, b._num))


# ---------------------------------------------------------------------------
# QRationalFunction


class QRationalFunction:
    """Exact quotient of two polynomials in q, always held in canonical form.

    The value is ``_p / (_s * _d)`` with ``_p`` and ``_d`` integer coefficient
    lists, ``_s`` a positive integer, ``_d`` primitive with positive leading
    coefficient and gcd(_p, _d) = 1.
    """

    __slots__ = ("_p", "_s", "_d")

    def __init__(self, numerator=0, denominator=1):
        num = _as_poly(numerator)
        den = _as_poly(denominator)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        # num/den = (P/a) / (D/b) = (P*b) / (a*D)
        self._canon(K.scale(num._num, den._den), num._den, den._num)

    def _canon(self, p, s, d, *, reduced=False):
        if not p:
            self._p, self._s, self._d = [], 1, [1]
            return
        if not reduced and len(d) > 1:
            g = _int_gcd(p, d)
            if len(g) > 1:
                p = _exact_quo_int(p, g)
                d = _exact_quo_int(d, g)
        c, d = _primitive(d)
        # p / (s*c*d): move c into the scalar, keep s positive
        if c < 0:
            p = [-x for x in p]
            c = -c
        s *= c
        cp = K.content(p)
        g = gcd(cp, s)
        if g != 1:
            p = [x // g for x in p]
            s //= g
        self._p, self._s, self._d = p, s, d

    @classmethod
    def _make(cls, p, s, d, *, reduced=False):
        self = object.__new__(cls)
        self._canon(p, s, d, reduced=reduced)
        return self

    # -- inspection ---------------------------------------------------------

    @property
    def numerator(self):
        return QPolynomial._raw(self._p, self._s)

    @property
    def denominator(self):
        return QPolynomial._raw(self._d)

    def is_zero(self):
        return not self._p

    def is_polynomial(self):
        return len(self._d) == 1

    @property
    def max_degree(self):
        return max(len(self._p), len(self._d)) - 1

    def __call__(self, q0):
        """Evaluate at q0; exact for rationals. ZeroDivisionError at a pole."""
        if isinstance(q0, Rational):
            q0 = Fraction(q0)
            a, b = q0.numerator, q0.denominator
            dp = K.eval_homogeneous(self._p, a, b)
            dd = K.eval_homogeneous(self._d, a, b)
            if not dd:
                raise ZeroDivisionError(f"pole at q = {q0}")
            # shift for differing degrees of the homogeneous forms
            shift = (len(self._d) - 1) - (len(self._p) - 1) if self._p else 0
            num = dp * (b ** shift if shift > 0 else 1)
            den = dd * (b ** -shift if shift < 0 else 1) * self._s
            return Fraction(num, den)
        accp = 0
        for c in reversed(self._p):
            accp = accp * q0 + c
        accd = 0
        for c in reversed(self._d):
            accd = accd * q0 + c
        if not accd:
            raise ZeroDivisionError(f"pole at q = {q0}")
        return accp / (accd * self._s)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, QRationalFunction):
            return other
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return QRationalFunction._make(
                [other.numerator] if other else [], other.denominator, [1], reduced=True
            )
        if isinstance(other, QPolynomial):
            return QRationalFunction._make(other._num, other._den, [1], reduced=True)
        return NotImplemented

    def _addsub(self, other, sign):
        p1, s1, d1 = self._p, self._s, self._d
        p2, s2, d2 = other._p, other._s, other._d
        if sign < 0:
            p2 = [-x for x in p2]
        if not p1:
            return QRationalFunction._make(p2, s2, d2, reduced=True)
        if not p2:
            return self
        gs = gcd(s1, s2)
        m1, m2 = s2 // gs, s1 // gs
        s = s1 // gs * s2
        if d1 == d2:
            p = K.add(K.scale(p1, m1), K.scale(p2, m2))
            if not p:
                return QRationalFunction()
            g = _int_gcd(p, d1) if len(d1) > 1 else [1]
            if len(g) > 1:
                p = _exact_quo_int(p, g)
                d = _exact_quo_int(d1, g)
            else:
                d = d1
            return QRationalFunction._make(p, s, d, reduced=True)
        g = _int_gcd(d1, d2) if len(d1) > 1 and len(d2) > 1 else [1]
        if len(g) > 1:
            e1 = _exact_quo_int(d1, g)
            e2 = _exact_quo_int(d2, g)
        else:
            e1, e2 = d1, d2
        p = K.add(K.mul(K.scale(p1, m1), e2), K.mul(K.scale(p2, m2), e1))
        if not p:
            return QRationalFunction()
        d = K.mul(e1, d2)
        # p is coprime to e1 and e2, so only g can share factors with it
        if len(g) > 1:
            h = _int_gcd(p, g)
            if len(h) > 1:
                p = _exact_quo_int(p, h)
                d = _exact_quo_int(d, h)
        return QRationalFunction._make(p, s, d, reduced=True)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._addsub(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._addsub(other, -1)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other._addsub(self, -1)

    def __neg__(self):
        return QRationalFunction._make([-x for x in self._p], self._s, self._d, reduced=True)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p1, s1, d1 = self._p, self._s, self._d
        p2, s2, d2 = other._p, other._s, other._d
        if not p1 or not p2:
            return QRationalFunction()
        # cross-cancel: gcd(p1, d2) and gcd(p2, d1)
        g = _int_gcd(p1, d2) if len(d2) > 1 else [1]
        if len(g) > 1:
            p1 = _exact_quo_int(p1, g)
            d2 = _exact_quo_int(d2, g)
        g = _int_gcd(p2, d1) if len(d1) > 1 else [1]
        if len(g) > 1:
            p2 = _exact_quo_int(p2, g)
            d1 = _exact_quo_int(d1, g)
        return QRationalFunction._make(K.mul(p1, p2), s1 * s2, K.mul(d1, d2), reduced=True)

    __rmul__ = __mul__

    def reciprocal(self):
        if not self._p:
            raise ZeroDivisionError("division by the zero rational function")
        # 1 / (p/(s*d)) = s*d / p
        return QRationalFunction._make(K.scale(self._d, self._s), 1, self._p, reduced=True)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.reciprocal()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.reciprocal() ** (-e)
        # powers of a reduced fraction stay reduced
        p, s, d = [1], 1, [1]
        bp, bs, bd = self._p, self._s, self._d
        while e:
            if e & 1:
                p, s, d = K.mul(p, bp), s * bs, K.mul(d, bd)
            e >>= 1
            if e:
                bp, bs, bd = K.mul(bp, bp), bs * bs, K.mul(bd, bd)
        return QRationalFunction._make(p, s, d, reduced=True)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._p == other._p and self._s == other._s and self._d == other._d

    def __hash__(self):
        return hash((tuple(self._p), self._s, tuple(self._d)))

    def __repr__(self):
        return f"QRationalFunction({str(self)!r})"

    def __str__(self):
        num = _format_poly(self._p, self._s)
        if len(self._d) == 1:
            return num
        if sum(1 for c in self._p if c) > 1:
            num = f"({num})"
        return f"{num}/({_format_poly(self._d)})"


def _as_poly(x):
    if isinstance(x, QPolynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return QPolynomial.constant(x)
    if isinstance(x, (list, tuple)):
        return QPolynomial(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a polynomial in q")


def ratfun_add(a, b):
    return a + b


def ratfun_sub(a, b):
    return a - b


def ratfun_mul(a, b):
    return a * b


def ratfun_div(a, b):
    return a / b


def ratfun_is_zero(a):
    return a.is_zero()


def q_monomial(e):
    """q**e as a rational function; negative e lands in the denominator."""
    if e >= 0:
        return QRationalFunction._make(_monomial_ints(e), 1, [1], reduced=True)
    return QRationalFunction._make([1], 1, _monomial_ints(-e), reduced=True)
