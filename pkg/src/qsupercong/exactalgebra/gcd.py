"""Polynomial gcd over the rationals.

Small inputs use the primitive polynomial remainder sequence.  Large inputs use
a dense modular algorithm: monic gcds modulo word-size primes (computed by the
kernel backend), Chinese remaindering of the images, and trial division to
certify the candidate.
"""

from functools import lru_cache

import gmpy2

from .. import _kernels
from . import _intpoly as ip
from .poly import Poly

# below this degree the remainder sequence is cheaper than the modular route
_MODULAR_THRESHOLD = 48


@lru_cache(maxsize=None)
def _prime(i):
    """i-th prime below 2**31 counting downwards."""
    if i == 0:
        p = (1 << 31) - 1
    else:
        p = _prime(i - 1) - 2
    while not gmpy2.is_prime(p):
        p -= 2
    return p


def _prs_gcd(a, b):
    """gcd of primitive integer lists via the primitive remainder sequence."""
    while b:
        r = ip.pseudo_rem(a, b)
        a = b
        b = ip.primitive(r)[1] if r else []
    return ip.primitive(a)[1]


def _modular_gcd(a, b):
    lc_a, lc_b = a[-1], b[-1]
    gamma = gmpy2.gcd(lc_a, lc_b)
    best_deg = min(len(a), len(b))  # one more than the largest possible gcd degree
    acc = None
    modulus = 1
    prev = None
    i = 0
    while True:
        p = _prime(i)
        i += 1
        if lc_a % p == 0 or lc_b % p == 0:
            continue
        g = _kernels.gcd_mod(a, b, p)
        deg = len(g) - 1
        if deg == 0:
            return [1]
        if deg > best_deg:
            continue  # unlucky prime
        g = [c * int(gamma) % p for c in g]
        if deg < best_deg:
            best_deg, acc, modulus, prev = deg, g, p, None
        else:
            inv = int(gmpy2.invert(modulus % p, p))
            acc = [x + modulus * (((y - x) * inv) % p) for x, y in zip(acc, g)]
            modulus *= p
        half = modulus // 2
        cand = [x - modulus if x > half else x for x in acc]
        if cand == prev:
            h = ip.primitive(cand)[1]
            if ip.exact_div(a, h) is not None and ip.exact_div(b, h) is not None:
                return h
        prev = cand


def int_gcd(a, b):
    """Primitive gcd (positive leading coefficient) of two integer lists."""
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    if not a:
        return ip.primitive(b)[1]
    if not b:
        return ip.primitive(a)[1]
    a = ip.primitive(a)[1]
    b = ip.primitive(b)[1]
    if len(a) == 1 or len(b) == 1:
        return [1]
    if min(len(a), len(b)) - 1 <= _MODULAR_THRESHOLD and max(len(a), len(b)) - 1 <= 4 * _MODULAR_THRESHOLD:
        return _prs_gcd(a, b) if len(a) >= len(b) else _prs_gcd(b, a)
    return _modular_gcd(a, b)


def poly_gcd(a, b):
    """Monic greatest common divisor of two rational polynomials."""
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    g = int_gcd(list(a.int_coefficients), list(b.int_coefficients))
    return Poly._make(g, g[-1])
