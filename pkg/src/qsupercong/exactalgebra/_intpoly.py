"""Dense integer polynomial primitives on plain lists (low degree first).

Lists are assumed trimmed (no trailing zeros) unless stated otherwise; the
empty list is the zero polynomial.  Large products and exact quotients go
through Kronecker substitution so the heavy lifting happens inside gmpy2.
"""

from math import gcd

import gmpy2

# below this length on either side schoolbook multiplication wins
_SCHOOLBOOK = 24


def trim(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    if n != len(a):
        del a[n:]
    return a


def content(a):
    """gcd of the coefficients (0 for the zero list)."""
    g = 0
    for c in a:
        if c:
            g = gcd(g, c)
            if g == 1:
                return 1
    return g


def primitive(a):
    """Return (c, b) with a == c*b, b primitive with positive leading coefficient."""
    if not a:
        return 0, []
    c = content(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return 1, list(a)
    return c, [x // c for x in a]


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return trim(out)


def sub(a, b):
    out = list(a)
    if len(b) > len(out):
        out.extend([0] * (len(b) - len(out)))
    for i, x in enumerate(b):
        out[i] -= x
    return trim(out)


def scale(a, c):
    if not c:
        return []
    return [x * c for x in a]


def shift(a, k):
    """Multiply by q**k, k >= 0."""
    if not a or not k:
        return list(a)
    return [0] * k + list(a)


def _bits(a):
    m = 0
    for x in a:
        b = x.bit_length() if x >= 0 else (-x).bit_length()
        if b > m:
            m = b
    return m


def _pack(a, nb):
    pos = b"".join((x if x > 0 else 0).to_bytes(nb, "little") for x in a)
    neg = b"".join((-x if x < 0 else 0).to_bytes(nb, "little") for x in a)
    return gmpy2.mpz(int.from_bytes(pos, "little") - int.from_bytes(neg, "little"))


def _unpack(x, nb, length):
    """Inverse of _pack for signed slot values below 2**(8*nb - 1) in magnitude."""
    x = int(x)
    negative = x < 0
    if negative:
        x = -x
    raw = x.to_bytes(nb * length, "little")
    w = 8 * nb
    half = 1 << (w - 1)
    full = 1 << w
    out = []
    carry = 0
    frm = int.from_bytes
    for i in range(0, nb * length, nb):
        u = frm(raw[i:i + nb], "little") + carry
        if u >= half:
            out.append(u - full)
            carry = 1
        else:
            out.append(u)
            carry = 0
    if carry:
        raise ValueError("Kronecker slot overflow")
    if negative:
        out = [-c for c in out]
    return out


def _schoolbook(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, y in enumerate(b):
        if y:
            for i, x in enumerate(a):
                out[i + j] += x * y
    return out


def mul(a, b):
    if not a or not b:
        return []
    if len(a) <= _SCHOOLBOOK or len(b) <= _SCHOOLBOOK:
        return trim(_schoolbook(a, b))
    bits = _bits(a) + _bits(b) + min(len(a), len(b)).bit_length() + 1
    nb = bits // 8 + 1
    prod = _pack(a, nb) * _pack(b, nb)
    return trim(_unpack(prod, nb, len(a) + len(b) - 1))


def product(polys):
    """Product of many integer polynomials via a balanced product tree."""
    polys = [p for p in polys]
    if not polys:
        return [1]
    while len(polys) > 1:
        nxt = [mul(polys[i], polys[i + 1]) for i in range(0, len(polys) - 1, 2)]
        if len(polys) % 2:
            nxt.append(polys[-1])
        polys = nxt
    return polys[0]


def mul_binomial(a, u, v, e):
    """(v - u*q**e) * a for integers u, v and e >= 0."""
    if not a:
        return []
    if e == 0:
        return scale(a, v - u)
    n = len(a)
    out = [x * v for x in a] + [0] * e
    for i in range(n):
        x = a[i]
        if x:
            out[i + e] -= u * x
    return trim(out)


def mul_qint(a, m):
    """Multiply by 1 + q + ... + q**(m-1) using running window sums."""
    if not a or m <= 0:
        return []
    n = len(a)
    out = []
    s = 0
    for i in range(n + m - 1):
        if i < n:
            s += a[i]
        if i >= m:
            s -= a[i - m]
        out.append(s)
    return trim(out)


def divmod_unit(a, b):
    """Quotient and remainder for a divisor with leading coefficient +-1."""
    db = len(b) - 1
    lc = b[-1]
    if len(a) <= db:
        return [], list(a)
    r = list(a)
    quo = [0] * (len(a) - db)
    nz = [(j, y) for j, y in enumerate(b[:-1]) if y]
    for i in range(len(a) - 1, db - 1, -1):
        c = r[i]
        if c:
            if lc == -1:
                c = -c
            s = i - db
            quo[s] = c
            for j, y in nz:
                r[s + j] -= c * y
    del r[db:]
    return trim(quo), trim(r)


def exact_div(a, b):
    """Exact quotient a / b over Z, or None when b does not divide a in Z[q].

    Candidate quotients come from one big-integer division of the Kronecker
    images and are always verified by multiplying back.
    """
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return []
    if len(a) < len(b):
        return None
    if len(b) == 1:
        c = b[0]
        out = []
        for x in a:
            qq, rr = divmod(x, c)
            if rr:
                return None
            out.append(qq)
        return out
    if b[-1] in (1, -1):
        quo, rem = divmod_unit(a, b)
        return quo if not rem else None
    if a[-1] % b[-1] or (b[0] and a[0] % b[0]):
        return None
    dq = len(a) - len(b)
    nq = dq + 1
    ba = _bits(a)
    # Mignotte-type ceiling on quotient coefficient size
    norm2 = sum(x * x for x in a)
    cap = (norm2.bit_length() + 1) // 2 + dq + 2
    bits = ba + nq.bit_length() + 8
    while True:
        nb = bits // 8 + 1
        big_a = _pack(a, nb)
        big_b = _pack(b, nb)
        qq, rr = gmpy2.f_divmod(big_a, big_b)
        if rr:
            return None
        try:
            cand = _unpack(qq, nb, nq)
        except ValueError:
            cand = None
        if cand is not None and trim(cand) and mul(cand, b) == a:
            return cand
        if bits > cap:
            return None
        bits *= 2


def evaluate(a, x):
    """Horner evaluation at an int or Fraction."""
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def derivative(a):
    return trim([i * a[i] for i in range(1, len(a))])


def pseudo_rem(a, b):
    """lc(b)**(deg a - deg b + 1) * a mod b, all in Z[q]."""
    db = len(b) - 1
    lc = b[-1]
    r = list(a)
    k = len(a) - len(b) + 1
    nz = [(j, y) for j, y in enumerate(b[:-1]) if y]
    for i in range(len(a) - 1, db - 1, -1):
        c = r[i]
        r = [x * lc for x in r]
        if c:
            s = i - db
            for j, y in nz:
                r[s + j] -= c * y
        r[i] = 0
        k -= 1
    if k > 0:
        r = [x * lc ** k for x in r]
    return trim(r[:db] if db < len(r) else r)
