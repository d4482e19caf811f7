# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled dense integer polynomial kernels.

Same contract as ``qkl._kernels_py``: lists of Python ints, index = exponent,
no trailing zeros. ``mul`` runs in C machine words when the coefficient
bound proves no overflow can happen and falls back to Python integers
otherwise; the rest are typed loops over Python integers.
"""

from libc.stdint cimport int64_t
from cpython.mem cimport PyMem_Malloc, PyMem_Free

from math import gcd

cdef int64_t _WORD_LIMIT = (<int64_t>1) << 62


cpdef list strip(list a):
    cdef Py_ssize_t n = len(a)
    while n and not a[n - 1]:
        n -= 1
    del a[n:]
    return a


cpdef list add(list a, list b):
    cdef Py_ssize_t i
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return strip(out)


cpdef list sub(list a, list b):
    cdef Py_ssize_t i
    cdef list out = list(a)
    if len(out) < len(b):
        out.extend([0] * (len(b) - len(out)))
    for i in range(len(b)):
        out[i] = out[i] - b[i]
    return strip(out)


cdef object _maxabs(list a):
    cdef object m = 0
    cdef object c
    for c in a:
        if c < 0:
            c = -c
        if c > m:
            m = c
    return m


cdef list _mul_words(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef Py_ssize_t n = na + nb - 1
    cdef int64_t *wa
    cdef int64_t *wb
    cdef int64_t *wo
    cdef int64_t bj
    wa = <int64_t *> PyMem_Malloc(na * sizeof(int64_t))
    wb = <int64_t *> PyMem_Malloc(nb * sizeof(int64_t))
    wo = <int64_t *> PyMem_Malloc(n * sizeof(int64_t))
    if not wa or not wb or not wo:
        PyMem_Free(wa)
        PyMem_Free(wb)
        PyMem_Free(wo)
        raise MemoryError()
    try:
        for i in range(na):
            wa[i] = a[i]
        for j in range(nb):
            wb[j] = b[j]
        for i in range(n):
            wo[i] = 0
        for j in range(nb):
            bj = wb[j]
            if bj:
                for i in range(na):
                    wo[i + j] += wa[i] * bj
        return [wo[i] for i in range(n)]
    finally:
        PyMem_Free(wa)
        PyMem_Free(wb)
        PyMem_Free(wo)


cpdef list mul(list a, list b):
    cdef Py_ssize_t na, nb, i, j
    cdef object bj
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    na = len(a)
    nb = len(b)
    # |sum| <= min(na, nb) * max|a| * max|b| must stay below 2**62
    if _maxabs(a) * _maxabs(b) * nb < _WORD_LIMIT:
        return _mul_words(a, b)
    cdef list out = [0] * (na + nb - 1)
    for j in range(nb):
        bj = b[j]
        if bj:
            for i in range(na):
                out[i + j] = out[i + j] + a[i] * bj
    return out


cpdef list scale(list a, object c):
    if not c:
        return []
    return [x * c for x in a]


cpdef object content(list a):
    cdef object g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


cpdef object exact_quo(list a, list b):
    cdef Py_ssize_t da, db, i, j
    cdef object c, t, r, lc
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    da = len(a) - 1
    if da < db:
        return [] if not a else None
    cdef list rem = list(a)
    lc = b[db]
    cdef list quo = [0] * (da - db + 1)
    for i in range(da - db, -1, -1):
        c = rem[i + db]
        if c:
            t, r = divmod(c, lc)
            if r:
                return None
            quo[i] = t
            for j in range(db + 1):
                rem[i + j] = rem[i + j] - t * b[j]
    for i in range(db):
        if rem[i]:
            return None
    return quo


cpdef list prem(list a, list b):
    cdef Py_ssize_t db, dr, shift, i, j, steps
    cdef object lc, c, f
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    cdef list rem = list(a)
    if len(rem) - 1 < db:
        return rem
    lc = b[db]
    steps = len(rem) - db
    dr = len(rem) - 1
    while dr >= db and rem:
        c = rem[dr]
        shift = dr - db
        for i in range(dr):
            rem[i] = rem[i] * lc
        for j in range(db):
            rem[shift + j] = rem[shift + j] - c * b[j]
        rem[dr] = 0
        strip(rem)
        dr = len(rem) - 1
        steps -= 1
    if steps > 0:
        f = lc ** steps
        rem = [x * f for x in rem]
    return rem


cpdef object eval_int(list a, object x):
    cdef object acc = 0
    cdef Py_ssize_t i
    for i in range(len(a) - 1, -1, -1):
        acc = acc * x + a[i]
    return acc


cpdef object eval_homogeneous(list a, object p, object d):
    cdef object acc = 0
    cdef object dpow = 1
    cdef Py_ssize_t i
    for i in range(len(a) - 1, -1, -1):
        acc = acc * p + a[i] * dpow
        dpow = dpow * d
    return acc
