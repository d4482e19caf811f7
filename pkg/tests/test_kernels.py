from hypothesis import given, settings
from hypothesis import strategies as st

from qkl import _kernels_py
from conftest import BACKENDS

small = st.lists(st.integers(-50, 50), max_size=9).map(_kernels_py.strip)
big = st.lists(st.integers(-(10**30), 10**30), max_size=9).map(_kernels_py.strip)
nonzero = small.filter(bool)


def naive_mul(a, b):
    out = {}
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out.get(i + j, 0) + x * y
    return _kernels_py.strip([out.get(i, 0) for i in range(max(out, default=-1) + 1)])


def test_mul_small(kernels):
    assert kernels.mul([1, 1], [1, 1, 1]) == [1, 2, 2, 1]
    assert kernels.mul([], [1, 2]) == []


def test_mul_word_overflow_boundary(kernels):
    # coefficients near 2**31 push the product past the machine-word fast path
    a = [2**40, -(2**40), 3]
    assert kernels.mul(a, a) == naive_mul(a, a)


@settings(max_examples=150, deadline=None)
@given(a=st.one_of(small, big), b=st.one_of(small, big))
def test_backends_agree_on_mul(a, b):
    expected = naive_mul(a, b)
    for k in BACKENDS:
        assert k.mul(list(a), list(b)) == expected


@settings(max_examples=150, deadline=None)
@given(a=small, b=nonzero)
def test_exact_quo_roundtrip(a, b):
    prod = naive_mul(a, b)
    for k in BACKENDS:
        assert k.exact_quo(prod, list(b)) == (a if a else [])


def test_exact_quo_rejects_remainder(kernels):
    assert kernels.exact_quo([1, 0, 1], [1, 1]) is None
    # divisible over Q but not over Z
    assert kernels.exact_quo([1, 1], [2, 2]) is None


@settings(max_examples=100, deadline=None)
@given(a=small, b=nonzero)
def test_prem_matches_definition(a, b):
    # lc(b)^(da-db+1) a = quo*b + prem with deg prem < deg b
    for k in BACKENDS:
        r = k.prem(list(a), list(b))
        assert len(r) < len(b) or len(a) < len(b)
        if len(a) >= len(b):
            scaled = [c * b[-1] ** (len(a) - len(b) + 1) for c in a]
            quo = k.exact_quo(k.sub(scaled, r), list(b))
            assert quo is not None


@settings(max_examples=100, deadline=None)
@given(a=big, p=st.integers(-20, 20), d=st.integers(1, 20))
def test_eval_homogeneous(a, p, d):
    from fractions import Fraction

    n = max(len(a) - 1, 0)
    direct = sum(Fraction(c) * Fraction(p, d) ** i for i, c in enumerate(a)) * d**n
    for k in BACKENDS:
        assert k.eval_homogeneous(list(a), p, d) == direct
        assert k.eval_int(list(a), p) == sum(c * p**i for i, c in enumerate(a))


def test_content_and_add_sub(kernels):
    assert kernels.content([4, -6, 8]) == 2
    assert kernels.content([]) == 0
    assert kernels.add([1, 1], [1, -1]) == [2]
    assert kernels.sub([1, 2], [1, 2]) == []
