# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: dense polynomial arithmetic over GF(p) and Morita products.

Every function mirrors one in ``_pykernels`` and must return identical values.
Primes are limited to p < 2**31 so a product of two residues fits in 64 bits.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

ctypedef unsigned long long u64


cdef inline u64 _powmod(u64 a, u64 e, u64 p) nogil:
    cdef u64 r = 1
    a %= p
    while e:
        if e & 1:
            r = r * a % p
        a = a * a % p
        e >>= 1
    return r


cdef inline u64 _inv(u64 a, u64 p) nogil:
    return _powmod(a, p - 2, p)


cdef Py_ssize_t _rem_inplace(u64 *a, Py_ssize_t da, u64 *b, Py_ssize_t db, u64 p) nogil:
    """Replace a (degree da) by a mod b (degree db, monic). Return new degree."""
    cdef Py_ssize_t i, j, shift
    cdef u64 f
    i = da
    while i >= db:
        f = a[i]
        if f:
            shift = i - db
            for j in range(db):
                a[shift + j] = (a[shift + j] + (p - f) * b[j]) % p
            a[i] = 0
        i -= 1
    i = db - 1
    while i >= 0 and a[i] == 0:
        i -= 1
    return i


cdef void _make_monic(u64 *a, Py_ssize_t da, u64 p) nogil:
    cdef u64 c = _inv(a[da], p)
    cdef Py_ssize_t j
    for j in range(da + 1):
        a[j] = a[j] * c % p


cdef u64 *_to_buffer(list a, u64 p) except NULL:
    cdef Py_ssize_t n = len(a), i
    cdef u64 *buf = <u64 *> malloc((n if n > 0 else 1) * sizeof(u64))
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = <u64> (a[i] % p)
    return buf


def gcd_mod(list a, list b, u64 p):
    """Monic gcd of two coefficient lists (low degree first) over GF(p)."""
    cdef Py_ssize_t da = len(a) - 1, db = len(b) - 1, dt, i
    cdef u64 *A
    cdef u64 *B
    cdef u64 *T
    A = _to_buffer(a, p)
    try:
        B = _to_buffer(b, p)
    except MemoryError:
        free(A)
        raise
    with nogil:
        while da >= 0 and A[da] == 0:
            da -= 1
        while db >= 0 and B[db] == 0:
            db -= 1
        if da < db:
            T = A; A = B; B = T
            dt = da; da = db; db = dt
        while db >= 0:
            _make_monic(B, db, p)
            da = _rem_inplace(A, da, B, db, p)
            T = A; A = B; B = T
            dt = da; da = db; db = dt
        if da >= 0:
            _make_monic(A, da, p)
    try:
        return [A[i] for i in range(da + 1)]
    finally:
        free(A)
        free(B)


def rem_mod(list a, list b, u64 p):
    """Remainder of a modulo b over GF(p); b must be nonzero mod p."""
    cdef Py_ssize_t da = len(a) - 1, db = len(b) - 1, i
    cdef u64 c
    cdef u64 *A = _to_buffer(a, p)
    cdef u64 *B
    try:
        B = _to_buffer(b, p)
    except MemoryError:
        free(A)
        raise
    with nogil:
        while db >= 0 and B[db] == 0:
            db -= 1
    if db < 0:
        free(A)
        free(B)
        raise ZeroDivisionError("division by the zero polynomial mod p")
    with nogil:
        while da >= 0 and A[da] == 0:
            da -= 1
        # scale b to monic, remainder is unaffected up to nothing (monic divisor)
        c = _inv(B[db], p)
        for i in range(db + 1):
            B[i] = B[i] * c % p
        if da >= db:
            da = _rem_inplace(A, da, B, db, p)
    try:
        return [A[i] for i in range(da + 1)]
    finally:
        free(A)
        free(B)


def morita_product(u64 m, u64 p, u64 pk):
    """(-1)**m times the product of 0 < j < m with p not dividing j, reduced mod pk."""
    cdef u64 r = 1 % pk, j
    if pk >= (<u64> 1) << 32:
        raise OverflowError("modulus too large for the compiled kernel")
    with nogil:
        for j in range(1, m):
            if j % p:
                r = r * (j % pk) % pk
    if m & 1:
        r = (pk - r) % pk
    return r
