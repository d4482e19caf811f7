"""Pure-Python dense integer polynomial kernels.

Polynomials are lists of Python ints, index = exponent of q, no trailing
zeros; the zero polynomial is ``[]``. Every function here has a twin of the
same name and signature in the compiled ``_kernels`` extension.
"""

from math import gcd


def strip(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    del a[n:]
    return a


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return strip(out)


def sub(a, b):
    out = list(a)
    if len(out) < len(b):
        out.extend([0] * (len(b) - len(out)))
    for i, c in enumerate(b):
        out[i] -= c
    return strip(out)


def mul(a, b):
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                out[i + j] += ai * bj
    return out


def scale(a, c):
    if not c:
        return []
    return [x * c for x in a]


def content(a):
    """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def exact_quo(a, b):
    """Quotient of a by b over Z, or None if b does not divide a in Z[q]."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    da = len(a) - 1
    if da < db:
        return [] if not a else None
    rem = list(a)
    lc = b[db]
    quo = [0] * (da - db + 1)
    for i in range(da - db, -1, -1):
        c = rem[i + db]
        if c:
            t, r = divmod(c, lc)
            if r:
                return None
            quo[i] = t
            for j in range(db + 1):
                rem[i + j] -= t * b[j]
    for c in rem[:db]:
        if c:
            return None
    return quo


def prem(a, b):
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    rem = list(a)
    if len(rem) - 1 < db:
        return rem
    lc = b[db]
    steps = len(rem) - 1 - db + 1
    dr = len(rem) - 1
    while dr >= db and rem:
        c = rem[dr]
        shift = dr - db
        for i in range(dr):
            rem[i] *= lc
        for j in range(db):
            rem[shift + j] -= c * b[j]
        rem[dr] = 0
        strip(rem)
        dr = len(rem) - 1
        steps -= 1
    if steps > 0:
        f = lc ** steps
        rem = [x * f for x in rem]
    return rem


def eval_int(a, x):
    """Horner evaluation at an integer point."""
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def eval_homogeneous(a, p, d):
    """Return d**deg(a) * a(p/d) as an integer (d > 0)."""
    acc = 0
    dpow = 1
    for c in reversed(a):
        acc = acc * p + c * dpow
        dpow *= d
    return acc
