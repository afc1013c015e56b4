"""Python fallback for the compiled kernels.

Same signatures and results as ``_ckernels``.  The inner reduction loop is
vectorized with numpy; residues stay below 2**31 so int64 products are exact.
"""

import numpy as np


def _trim(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


def _monic(a, p):
    c = pow(int(a[-1]), p - 2, p)
    return (a * c) % p


def _rem(a, b, p):
    # b monic, both trimmed int64 arrays
    a = a.copy()
    db = len(b) - 1
    lower = b[:-1]
    for i in range(len(a) - 1, db - 1, -1):
        f = int(a[i])
        if f:
            s = i - db
            a[s:i] = (a[s:i] - f * lower) % p
            a[i] = 0
    return _trim(a[:db])


def gcd_mod(a, b, p):
    """Monic gcd of two coefficient lists (low degree first) over GF(p)."""
    A = _trim(np.array([x % p for x in a], dtype=np.int64))
    B = _trim(np.array([x % p for x in b], dtype=np.int64))
    if len(A) < len(B):
        A, B = B, A
    while len(B):
        B = _monic(B, p)
        A, B = B, _rem(A, B, p)
    if len(A):
        A = _monic(A, p)
    return [int(x) for x in A]


def rem_mod(a, b, p):
    """Remainder of a modulo b over GF(p); b must be nonzero mod p."""
    B = _trim(np.array([x % p for x in b], dtype=np.int64))
    if not len(B):
        raise ZeroDivisionError("division by the zero polynomial mod p")
    A = _trim(np.array([x % p for x in a], dtype=np.int64))
    B = _monic(B, p)
    if len(A) >= len(B):
        A = _rem(A, B, p)
    return [int(x) for x in A]


def morita_product(m, p, pk):
    """(-1)**m times the product of 0 < j < m with p not dividing j, reduced mod pk."""
    r = 1 % pk
    for j in range(1, m):
        if j % p:
            r = r * j % pk
    return (-r) % pk if m & 1 else r
