"""q-integers, q-factorials, Gaussian binomials and the harmonic q-sums H_{q,k}({2}^s)."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from qkl.exact import QPolynomial, QRationalFunction, q_monomial

__all__ = [
    "harmonic_q",
    "harmonic_q_bruteforce",
    "interval_product",
    "q_binomial",
    "q_binomial_product_formula",
    "q_factorial",
    "q_int",
]

ONE = QRationalFunction(1)
ZERO = QRationalFunction(0)


def _check_nonnegative(n, name="n"):
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got {n!r}")


@lru_cache(maxsize=None)
def q_int(n):
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    _check_nonnegative(n)
    return QPolynomial._raw([1] * n)


@lru_cache(maxsize=None)
def q_factorial(n):
    _check_nonnegative(n)
    if n == 0:
        return QPolynomial.constant(1)
    return q_factorial(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def q_binomial(n, k):
    """Gaussian binomial [n]!/([k]![n-k]!), certified a polynomial by exact division."""
    _check_nonnegative(n)
    if k < 0 or k > n:
        return QPolynomial.constant(0)
    return q_factorial(n).exact_div(q_factorial(k) * q_factorial(n - k))


def q_binomial_product_formula(n, k):
    """Oracle for q_binomial: prod_{i=1..k} (1 - q^(n-k+i)) / (1 - q^i), divided step by step."""
    _check_nonnegative(n)
    if k < 0 or k > n:
        return QPolynomial.constant(0)
    num = QPolynomial.constant(1)
    den = QPolynomial.constant(1)
    for i in range(1, k + 1):
        num = num * (1 - QPolynomial.monomial(n - k + i))
        den = den * (1 - QPolynomial.monomial(i))
    return num.exact_div(den)


def interval_product(a, b):
    """prod_{j=a}^{b} [j]_q; 1 when b < a."""
    if not isinstance(a, int) or a < 1:
        raise ValueError(f"interval_product needs a >= 1 (a zero factor [0]_q is never meant), got a={a!r}")
    out = QPolynomial.constant(1)
    for j in range(a, b + 1):
        out = out * q_int(j)
    return out


@lru_cache(maxsize=None)
def _step(k):
    """q^k / [k]_q^2."""
    return q_monomial(k) / QRationalFunction(q_int(k) ** 2)


@lru_cache(maxsize=None)
def harmonic_q(k, s):
    """Multiple harmonic q-sum H_{q,k}({2}^s) by the recurrence

        H_{q,k}(s) = H_{q,k-1}(s) + q^k/[k]_q^2 * H_{q,k-1}(s-1),

    with H_{q,k}(0) = 1, H_{q,0}(s) = 0 for s >= 1 and H_{q,k}(-1) = 0.
    """
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"k must be a nonnegative integer, got {k!r}")
    if s < -1:
        raise ValueError(f"harmonic depth must be >= -1, got {s!r}")
    if s == -1:
        return ZERO
    if s == 0:
        return ONE
    if k == 0 or s > k:
        return ZERO
    return harmonic_q(k - 1, s) + _step(k) * harmonic_q(k - 1, s - 1)


def harmonic_q_bruteforce(k, s):
    """Direct enumeration over strictly increasing s-tuples in [1, k].

    Meant as an oracle for small arguments (k <= 12, s <= 5).
    """
    _check_nonnegative(k, "k")
    _check_nonnegative(s, "s")
    total = ZERO
    for tup in combinations(range(1, k + 1), s):
        den = QPolynomial.constant(1)
        for j in tup:
            den = den * q_int(j) * q_int(j)
        total = total + QRationalFunction(QPolynomial.monomial(sum(tup)), den)
    return total
