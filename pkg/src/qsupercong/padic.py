"""Classical (q = 1) supercongruences: exact truncated sums checked p-adically.

A congruence between rationals with p-free denominators is read as
v_p(lhs - rhs) >= k.  The p-adic Gamma function is Morita's, evaluated at the
integer representative of x modulo p**k.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import gmpy2

from ._kernels import morita_product
from .errors import ApplicabilityError, UnknownStatementError
from .exactalgebra import as_rational


def rising_factorial(x, k):
    """(x)_k = x (x+1) ... (x+k-1)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    x = as_rational(x)
    out = Fraction(1)
    for j in range(k):
        out *= x + j
    return out


def is_odd_prime(p):
    return isinstance(p, int) and p > 2 and gmpy2.is_prime(p)


def vp(x, p):
    """p-adic valuation of a nonzero rational (None for zero)."""
    x = as_rational(x)
    if not x:
        return None
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def padic_valuation_check(lhs, rhs, p, k):
    """True iff v_p(lhs - rhs) >= k; a denominator divisible by p is an error."""
    diff = as_rational(lhs) - as_rational(rhs)
    if diff.denominator % p == 0:
        raise ValueError(f"{p} divides the denominator of the difference")
    return not diff or vp(diff, p) >= k


@dataclass(frozen=True)
class PadicResidue:
    """A p-adic integer known modulo p**k, stored as its representative in [0, p**k)."""

    p: int
    k: int
    value: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("precision k must be positive")
        object.__setattr__(self, "value", self.value % self.modulus)

    @property
    def modulus(self):
        return self.p ** self.k

    @classmethod
    def from_rational(cls, x, p, k):
        x = as_rational(x)
        if x.denominator % p == 0:
            raise ValueError(f"{p} divides the denominator of {x}")
        pk = p ** k
        return cls(p, k, x.numerator * pow(x.denominator, -1, pk))

    def _other(self, other):
        if isinstance(other, PadicResidue):
            if other.p != self.p:
                raise ValueError("residues for different primes")
            return other.value, min(self.k, other.k)
        return PadicResidue.from_rational(other, self.p, self.k).value, self.k

    def __add__(self, other):
        v, k = self._other(other)
        return PadicResidue(self.p, k, self.value + v)

    __radd__ = __add__

    def __neg__(self):
        return PadicResidue(self.p, self.k, -self.value)

    def __sub__(self, other):
        v, k = self._other(other)
        return PadicResidue(self.p, k, self.value - v)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        v, k = self._other(other)
        return PadicResidue(self.p, k, self.value * v)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return PadicResidue(self.p, self.k, pow(self.value, e, self.modulus))

    def inverse(self):
        if self.value % self.p == 0:
            raise ZeroDivisionError("not a p-adic unit")
        return PadicResidue(self.p, self.k, pow(self.value, -1, self.modulus))

    def reduce(self, k):
        if not 1 <= k <= self.k:
            raise ValueError("can only lower the precision")
        return PadicResidue(self.p, k, self.value)

    def signed(self):
        """Representative in (-p**k/2, p**k/2]."""
        v = self.value
        return v - self.modulus if v > self.modulus // 2 else v


def padic_gamma(x, p, k):
    """Morita's Gamma_p(x) modulo p**k, for rational x with p-free denominator."""
    if not is_odd_prime(p):
        raise ValueError("p must be an odd prime")
    pk = p ** k
    m = PadicResidue.from_rational(x, p, k).value
    return PadicResidue(p, k, morita_product(m, p, pk))


@lru_cache(maxsize=32)
def _eta(N):
    # prod (1 - q^{2n})^4 (1 - q^{4n})^4 truncated at degree N - 1, then shifted by one
    deg = N - 1
    c = [0] * (deg + 1)
    c[0] = 1
    for step in (2, 4):
        for j in range(step, deg + 1, step):
            for _ in range(4):
                for i in range(deg, j - 1, -1):
                    c[i] -= c[i - j]
    return tuple([0] + c)


def eta_coefficients(N):
    """[a_1, ..., a_N] for q * prod_{n>=1} (1 - q^{2n})^4 (1 - q^{4n})^4."""
    if N < 1:
        raise ValueError("N must be positive")
    return list(_eta(N)[1:])


# -- classical statements ------------------------------------------------------

HALF = Fraction(1, 2)


def _half_ratio(k, top, bottom):
    """(1/2)_k^top / k!^bottom."""
    return rising_factorial(HALF, k) ** top / Fraction(rising_factorial(1, k)) ** bottom


def _alt5(k):
    return (-1) ** k * (4 * k + 1) * _half_ratio(k, 5, 5)


def _plain4(k):
    return _half_ratio(k, 4, 4)


def _long_a(k):
    return (4 * k + 1) * _half_ratio(k, 4, 4)


def _long_c(k):
    return (4 * k + 1) * _half_ratio(k, 6, 6)


def _cor8_lhs(k):
    return ((4 * k + 1) * rising_factorial(HALF, k) ** 4 * rising_factorial(-HALF, k) ** 2
            / (rising_factorial(1, k) ** 4 * rising_factorial(1, k + 1) ** 2))


def _cor8_rhs(k):
    return (rising_factorial(HALF, k) ** 3 * rising_factorial(Fraction(5, 2), k)
            / (rising_factorial(1, k) ** 2 * rising_factorial(1, k + 1) ** 2))


def _cor9_lhs(k):
    return ((4 * k + 1) * rising_factorial(HALF, k) ** 5 * rising_factorial(-HALF, k)
            / (rising_factorial(1, k) ** 5 * rising_factorial(1, k + 1)))


def _cor9_rhs(k):
    return (rising_factorial(HALF, k) ** 3 * rising_factorial(Fraction(3, 2), k)
            / (rising_factorial(1, k) ** 3 * rising_factorial(1, k + 1)))


def partial_sum(term, M):
    return sum((term(k) for k in range(M + 1)), Fraction(0))


@dataclass(frozen=True)
class ClassicalStatement:
    id: str
    summary: str
    term: object
    admissible: object  # (p, r) -> error text or None
    exponent: object  # r -> modulus exponent
    rhs: object  # (p, r, k) -> Fraction or PadicResidue


def _need(cond, text):
    return None if cond else text


def _rhs_hamme(p, r, k):
    if p % 4 == 3:
        return Fraction(0)
    g = padic_gamma(Fraction(3, 4), p, k)
    return (g ** 4).inverse() * (-p)


def _rhs_liu(p, r, k):
    g = padic_gamma(Fraction(1, 4), p, k)
    return g ** 4 * Fraction(-p ** 3, 16)


def _rhs_kilbourn(p, r, k):
    return Fraction(eta_coefficients(p)[p - 1])


def _trunc(p, r):
    return (p ** r - 1) // 2


CLASSICAL = {
    s.id: s for s in (
        ClassicalStatement(
            "hamme_b", "sum (-1)^k (4k+1) (1/2)_k^5/k!^5 == -p/Gamma_p(3/4)^4 (p = 1 mod 4), 0 (p = 3 mod 4) mod p^3",
            _alt5, lambda p, r: _need(r == 1, "r must be 1"), lambda r: 3, _rhs_hamme),
        ClassicalStatement(
            "swisher", "the p = 1 mod 4 branch of hamme_b, mod p^5",
            _alt5, lambda p, r: _need(p % 4 == 1 and p > 5 and r == 1, "needs p = 1 mod 4, p > 5, r = 1"),
            lambda r: 5, _rhs_hamme),
        ClassicalStatement(
            "liu", "sum (-1)^k (4k+1) (1/2)_k^5/k!^5 == -(p^3/16) Gamma_p(1/4)^4 mod p^4",
            _alt5, lambda p, r: _need(p % 4 == 3 and p > 3 and r == 1, "needs p = 3 mod 4, p > 3, r = 1"),
            lambda r: 4, _rhs_liu),
        ClassicalStatement(
            "kilbourn", "sum (1/2)_k^4/k!^4 == a_p mod p^3",
            _plain4, lambda p, r: _need(r == 1, "r must be 1"), lambda r: 3, _rhs_kilbourn),
        ClassicalStatement(
            "long_a", "sum (4k+1) (1/2)_k^4/k!^4 == p^r mod p^4",
            _long_a, lambda p, r: _need(p > 3, "needs p > 3"), lambda r: 4,
            lambda p, r, k: Fraction(p ** r)),
        ClassicalStatement(
            "long_c", "sum (4k+1) (1/2)_k^6/k!^6 == p^r sum (1/2)_k^4/k!^4 mod p^4",
            _long_c, lambda p, r: _need(p > 3, "needs p > 3"), lambda r: 4,
            lambda p, r, k: p ** r * partial_sum(_plain4, _trunc(p, r))),
        ClassicalStatement(
            "cor_2_8_classical",
            "sum (4k+1) (1/2)_k^4 (-1/2)_k^2/(k!^4 (k+1)!^2) == p^r sum (1/2)_k^3 (5/2)_k/(k!^2 (k+1)!^2)"
            " mod p^(r+3)",
            _cor8_lhs, lambda p, r: _need(p > 3, "needs p > 3"), lambda r: r + 3,
            lambda p, r, k: p ** r * partial_sum(_cor8_rhs, _trunc(p, r))),
        ClassicalStatement(
            "cor_2_9_classical",
            "sum (4k+1) (1/2)_k^5 (-1/2)_k/(k!^5 (k+1)!) == p^r sum (1/2)_k^3 (3/2)_k/(k!^3 (k+1)!)"
            " mod p^(r+3)",
            _cor9_lhs, lambda p, r: _need(p > 3, "needs p > 3"), lambda r: r + 3,
            lambda p, r, k: p ** r * partial_sum(_cor9_rhs, _trunc(p, r))),
        ClassicalStatement(
            "conj_4_1_classical",
            "sum (-1)^k (4k+1) (1/2)_k^5/k!^5 == p^(2r) (3/4)_m/(5/4)_m, m = (p^r-1)/2, mod p^(r+4)",
            _alt5, lambda p, r: _need(p % 4 == 3, "needs p = 3 mod 4"), lambda r: r + 4,
            lambda p, r, k: p ** (2 * r) * rising_factorial(Fraction(3, 4), _trunc(p, r))
            / rising_factorial(Fraction(5, 4), _trunc(p, r))),
    )
}


def classical_ids():
    return sorted(CLASSICAL)


def _get(sid):
    try:
        return CLASSICAL[sid]
    except KeyError:
        raise UnknownStatementError(sid) from None


def _admit(st, p, r):
    if not is_odd_prime(p):
        raise ApplicabilityError(f"{st.id}: p must be an odd prime, got {p}")
    if r < 1:
        raise ApplicabilityError(f"{st.id}: r must be positive")
    why = st.admissible(p, r)
    if why:
        raise ApplicabilityError(f"{st.id}: {why}, got p = {p}, r = {r}")


def classical_applicable(sid, p, r=1):
    try:
        _admit(_get(sid), p, r)
    except ApplicabilityError:
        return False
    return True


def classical_partial_sum(sid, M):
    """Left-hand sum truncated at k = M, without any prime attached."""
    return partial_sum(_get(sid).term, M)


def classical_sum(sid, p, r=1):
    st = _get(sid)
    _admit(st, p, r)
    return partial_sum(st.term, _trunc(p, r))


@dataclass(frozen=True)
class ClassicalResult:
    statement: str
    p: int
    r: int
    exponent: int
    achieved: int | None  # v_p(lhs - rhs) (capped at the working precision for p-adic sides)
    passed: bool

    def to_dict(self):
        return {"statement": self.statement, "p": self.p, "r": self.r, "required": self.exponent,
                "achieved": self.achieved, "pass": self.passed}


def classical_report(sid, p, r=1):
    st = _get(sid)
    _admit(st, p, r)
    k = st.exponent(r)
    lhs = partial_sum(st.term, _trunc(p, r))
    rhs = st.rhs(p, r, k)
    if isinstance(rhs, PadicResidue):
        diff = PadicResidue.from_rational(lhs, p, k) - rhs
        achieved = k if diff.value == 0 else vp(diff.value, p)
        passed = diff.value == 0
    else:
        diff = lhs - rhs
        if diff.denominator % p == 0:
            raise ValueError(f"{p} divides the denominator of the difference")
        achieved = vp(diff, p)
        passed = padic_valuation_check(lhs, rhs, p, k)
    return ClassicalResult(sid, p, r, k, achieved, passed)


def check_classical(sid, p, r=1):
    return classical_report(sid, p, r).passed


__all__ = [
    "rising_factorial", "vp", "padic_valuation_check", "PadicResidue", "padic_gamma",
    "eta_coefficients", "is_odd_prime", "CLASSICAL", "classical_ids", "classical_applicable",
    "classical_sum", "classical_partial_sum", "classical_report", "check_classical", "ClassicalResult",
]
