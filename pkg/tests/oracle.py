"""Brute-force reference implementations used as test oracles.

Nothing here imports the package.  Polynomials are plain lists of Fractions
(index = exponent) and q-series are evaluated pointwise at a rational q, term
by term, straight from their defining products.
"""

from fractions import Fraction as F


# -- list polynomials ---------------------------------------------------------

def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def padd(a, b):
    out = [F(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def pneg(a):
    return [-c for c in a]


def pmul(a, b):
    if not a or not b:
        return []
    out = [F(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def pdivmod(a, b):
    a, b = trim(map(F, a)), trim(map(F, b))
    if not b:
        raise ZeroDivisionError
    quo = [F(0)] * max(len(a) - len(b) + 1, 0)
    rem = list(a)
    while len(rem) >= len(b):
        c = rem[-1] / b[-1]
        s = len(rem) - len(b)
        quo[s] = c
        for i, y in enumerate(b):
            rem[s + i] -= c * y
        rem = trim(rem)
    return trim(quo), rem


def peval(a, x):
    return sum((c * x ** i for i, c in enumerate(a)), F(0))


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def cyclotomic(n, _cache={}):
    if n not in _cache:
        p = [F(-1)] + [F(0)] * (n - 1) + [F(1)]
        for d in divisors(n)[:-1]:
            p, r = pdivmod(p, cyclotomic(d))
            assert not r
        _cache[n] = p
    return _cache[n]


def multiplicity(num, f):
    v = 0
    while num:
        quo, rem = pdivmod(num, f)
        if rem:
            break
        num, v = quo, v + 1
    return v


# -- pointwise q-series -------------------------------------------------------

def poch(x, qv, k, step=1):
    """(x; q^step)_k at q = qv, x a number."""
    out = F(1)
    for j in range(k):
        out *= 1 - x * qv ** (step * j)
    return out


def qint(m, qv):
    return sum((qv ** j for j in range(m)), F(0)) if m >= 0 else -qv ** m * qint(-m, qv)


def W(n, qv):
    b = qint(n, qv)
    return b * qv ** ((1 - n) // 2) * (1 + b * b * F(n * n - 1, 24) * (1 - qv) ** 2)


def _four(k, qv):
    return qint(4 * k + 1, qv)


def _s(fn, M):
    return sum((fn(k) for k in range(M + 1)), F(0))


def thm_lhs(n, M, c, d, qv):
    return _s(lambda k: _four(k, qv) * poch(qv, qv, k, 2) ** 4 * poch(c * qv, qv, k, 2)
              * poch(d * qv, qv, k, 2) / (poch(qv ** 2, qv, k, 2) ** 4 * poch(qv ** 2 / c, qv, k, 2)
                                          * poch(qv ** 2 / d, qv, k, 2)) * (qv / (c * d)) ** k, M)


def thm_rhs(n, M, c, d, qv):
    m = (n - 1) // 2
    inner = _s(lambda k: poch(qv, qv, k, 2) ** 3 * poch(qv / (c * d), qv, k, 2)
               / (poch(qv ** 2, qv, k, 2) ** 2 * poch(qv ** 2 / c, qv, k, 2)
                  * poch(qv ** 2 / d, qv, k, 2)) * qv ** (2 * k), m)
    return W(n, qv) * inner


def alt_lhs(n, M, qv):
    """sum (-1)^k [4k+1] (q;q^2)^4 (q^2;q^4)/((q^2;q^2)^4 (q^4;q^4)) q^k."""
    return _s(lambda k: (-1) ** k * _four(k, qv) * poch(qv, qv, k, 2) ** 4 * poch(qv ** 2, qv, k, 4)
              / (poch(qv ** 2, qv, k, 2) ** 4 * poch(qv ** 4, qv, k, 4)) * qv ** k, M)


def ratio_34(n, qv):
    m = (n - 1) // 2
    return poch(qv ** 3, qv, m, 4) / poch(qv ** 5, qv, m, 4)


def s4_lhs(n, M, a, b, c, d, qv):
    up = (a * qv, qv / a, qv / b, c * qv, d * qv, qv)
    lo = (qv ** 2 / a, a * qv ** 2, b * qv ** 2, qv ** 2 / c, qv ** 2 / d, qv ** 2)

    def t(k):
        v = _four(k, qv) * (b * qv / (c * d)) ** k
        for x in up:
            v *= poch(x, qv, k, 2)
        for x in lo:
            v /= poch(x, qv, k, 2)
        return v
    return _s(t, M)


def s4_inner(n, a, b, c, d, qv):
    m = (n - 1) // 2

    def t(k):
        v = qv ** (2 * k)
        for x in (a * qv, qv / a, qv / b, qv / (c * d)):
            v *= poch(x, qv, k, 2)
        for x in (qv ** 2, qv ** 2 / b, qv ** 2 / c, qv ** 2 / d):
            v /= poch(x, qv, k, 2)
        return v
    return _s(t, m)


def three_lhs(n, M, a, c, d, qv):
    def t(k):
        v = _four(k, qv) * poch(qv, qv, k, 2) ** 2 * (qv / (c * d)) ** k
        for x in (a * qv, qv / a, c * qv, d * qv):
            v *= poch(x, qv, k, 2)
        for x in (qv ** 2 / a, a * qv ** 2, qv ** 2 / c, qv ** 2 / d):
            v /= poch(x, qv, k, 2)
        return v / poch(qv ** 2, qv, k, 2) ** 2
    return _s(t, M)


def omega(a, n, qv):
    m = (n - 1) // 2
    brace = 1 - n * (1 - a) * a ** m / (1 - a ** n)
    return qv ** ((1 - n) // 2) * (1 + (1 - a * qv ** n) * (a - qv ** n) / (1 - a) ** 2 * brace)


def three_rhs(n, M, a, c, d, qv):
    m = (n - 1) // 2

    def t(k):
        v = qv ** (2 * k)
        for x in (a * qv, qv / a, qv / (c * d), qv):
            v *= poch(x, qv, k, 2)
        for x in (qv ** 2 / c, qv ** 2 / d):
            v /= poch(x, qv, k, 2)
        return v / poch(qv ** 2, qv, k, 2) ** 2
    return qint(n, qv) * omega(a, n, qv) * _s(t, m)


def _corollary_sides(qv):
    p2 = lambda x, k: poch(x, qv, k, 2)  # noqa: E731
    p4 = lambda x, k: poch(x, qv, k, 4)  # noqa: E731
    Q = qv
    return {
        "cor_2_2": (lambda k: p2(Q, k) ** 6 / p2(Q * Q, k) ** 6 * Q ** k,
                    lambda k: p2(Q, k) ** 4 / p2(Q * Q, k) ** 4 * Q ** (2 * k)),
        "cor_2_3": (lambda k: p2(Q, k) ** 2 * p4(Q ** 2, k) ** 2 / (p2(Q * Q, k) ** 2 * p4(Q ** 4, k) ** 2) * Q ** k,
                    lambda k: p2(Q, k) ** 4 / p4(Q ** 4, k) ** 2 * Q ** (2 * k)),
        "cor_2_4": (lambda k: p2(Q, k) ** 3 * p4(Q ** 2, k) / (p2(Q * Q, k) ** 3 * p4(Q ** 4, k)) * Q ** (k * k + k),
                    lambda k: p2(Q, k) ** 3 / (p2(Q * Q, k) * p4(Q ** 4, k)) * Q ** (2 * k)),
        "cor_2_5": (lambda k: p2(Q, k) ** 3 * p4(Q ** 2, k) / (p2(Q * Q, k) ** 3 * p4(Q ** 4, k)) * Q ** (-k * k),
                    lambda k: p2(Q, k) ** 3 / (p2(Q * Q, k) * p4(Q ** 4, k)) * (-Q) ** k),
        "cor_2_6": (lambda k: p2(Q, k) ** 4 / p2(Q * Q, k) ** 4 * Q ** (2 * k * k + k),
                    lambda k: p2(Q, k) ** 3 / p2(Q * Q, k) ** 2 * Q ** (2 * k)),
        "cor_2_7": (lambda k: p2(Q, k) ** 4 / p2(Q * Q, k) ** 4 * Q ** (-2 * k * k - k),
                    lambda k: p2(Q, k) ** 3 / p2(Q * Q, k) ** 2 * (-Q) ** (-k * k)),
        "cor_2_8": (lambda k: p2(Q, k) ** 4 * p2(1 / Q, k) ** 2 / (p2(Q * Q, k) ** 4 * p2(Q ** 4, k) ** 2) * Q ** (5 * k),
                    lambda k: p2(Q, k) ** 3 * p2(Q ** 5, k) / (p2(Q * Q, k) ** 2 * p2(Q ** 4, k) ** 2) * Q ** (2 * k)),
        "cor_2_9": (lambda k: p2(Q, k) ** 5 * p2(1 / Q, k) / (p2(Q * Q, k) ** 5 * p2(Q ** 4, k)) * Q ** (3 * k),
                    lambda k: p2(Q, k) ** 3 * p2(Q ** 3, k) / (p2(Q * Q, k) ** 3 * p2(Q ** 4, k)) * Q ** (2 * k)),
    }


def corollary_sides(sid, n, M, qv):
    lt, rt = _corollary_sides(qv)[sid]
    m = (n - 1) // 2
    return (_s(lambda k: _four(k, qv) * lt(k), M), W(n, qv) * _s(rt, m))


def six_lhs(n, M, qv):
    return _s(lambda k: _four(k, qv) * poch(qv, qv, k, 2) ** 4 / poch(qv ** 2, qv, k, 2) ** 4, M)


# -- classical ----------------------------------------------------------------

def rising(x, k):
    out = F(1)
    for j in range(k):
        out *= x + j
    return out


def eta_product(N):
    """Coefficients a_1..a_N of q prod (1-q^{2n})^4 (1-q^{4n})^4 by direct multiplication."""
    series = [F(1)] + [F(0)] * N
    for step in (2, 4):
        for j in range(step, N + 1, step):
            factor = [F(1)] + [F(0)] * (j - 1) + [F(-1)]
            for _ in range(4):
                series = pmul(series, factor)[:N + 1]
                series += [F(0)] * (N + 1 - len(series))
    return [int(c) for c in series[:N]]


def vp(x, p):
    x = F(x)
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def morita(m, p):
    out = (-1) ** m
    for j in range(1, m):
        if j % p:
            out *= j
    return out


# -- exact unreduced rational functions -----------------------------------------
# A value is (num, den, off) meaning q**off * num / den with list polynomials.

def rf_one():
    return [F(1)], [F(1)], 0


def rf_binomial(c, e):
    """1 - c q^e for any integer e."""
    if e >= 0:
        return padd([F(1)], [F(0)] * e + [F(-c)]), [F(1)], 0
    return padd([F(-c)], [F(0)] * (-e) + [F(1)]), [F(1)], e


def rf_mul(x, y):
    return pmul(x[0], y[0]), pmul(x[1], y[1]), x[2] + y[2]


def rf_inv(x):
    return x[1], x[0], -x[2]


def rf_scale(x, c, e=0):
    return [c * v for v in x[0]], x[1], x[2] + e


def rf_add(x, y):
    lo = min(x[2], y[2])
    a = pmul([F(0)] * (x[2] - lo) + [F(1)], pmul(x[0], y[1]))
    b = pmul([F(0)] * (y[2] - lo) + [F(1)], pmul(y[0], x[1]))
    return padd(a, b), pmul(x[1], y[1]), lo


def rf_poch(c, e, step, k, power=1):
    out = rf_one()
    for j in range(k):
        f = rf_binomial(c, e + step * j)
        out = rf_mul(out, f if power > 0 else rf_inv(f))
    if abs(power) > 1:
        base = out
        for _ in range(abs(power) - 1):
            out = rf_mul(out, base)
    return out


def rf_qint(m):
    return [F(1)] * m, [F(1)], 0


def net_multiplicity(x, f):
    return multiplicity(x[0], f) - multiplicity(x[1], f)


def cor_2_8_difference(n, M):
    """LHS - RHS of the c = d = q^-2 row, built without any cancellation."""
    def lterm(k):
        t = rf_qint(4 * k + 1)
        for c, e, pw in ((1, 1, 4), (1, -1, 2), (1, 2, -4), (1, 4, -2)):
            t = rf_mul(t, rf_poch(F(c), e, 2, k, pw))
        return rf_scale(t, F(1), 5 * k)

    def rterm(k):
        t = rf_one()
        for c, e, pw in ((1, 1, 3), (1, 5, 1), (1, 2, -2), (1, 4, -2)):
            t = rf_mul(t, rf_poch(F(c), e, 2, k, pw))
        return rf_scale(t, F(1), 2 * k)

    lhs = [F(0)], [F(1)], 0
    for k in range(M + 1):
        lhs = rf_add(lhs, lterm(k))
    inner = [F(0)], [F(1)], 0
    for k in range((n - 1) // 2 + 1):
        inner = rf_add(inner, rterm(k))
    b = [F(1)] * n
    corr = padd([F(1)], [c * F(n * n - 1, 24) for c in pmul(pmul(b, b), [F(1), F(-2), F(1)])])
    w = (pmul(b, corr), [F(1)], (1 - n) // 2)
    return rf_add(lhs, rf_scale(rf_mul(w, inner), F(-1)))
