"""Factored term algebra and the truncated-sum engine.

Every summand in this package is a rational multiple of a power of q times a
product of binomials 1 - alpha*q**e.  Binomials with alpha = +-1 are split into
cyclotomic polynomials, so a factor "bag" maps keys to integer multiplicities:

* ``0``            -- the monomial q
* ``d`` (int >= 1) -- the cyclotomic polynomial Phi_d
* ``(alpha, e)``   -- the binomial 1 - alpha*q**e, alpha not in {0, 1, -1}, e >= 1

Truncated sums are evaluated by Horner's rule over consecutive term ratios,
cancelling bag keys as they meet so that only the running numerator is ever
expanded.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import DegeneracyError
from ..exactalgebra import Poly, RatFunc, as_rational, poly_product
from ..qobjects import QMonomial, cyclotomic, divisors


class Bag:
    """scalar * prod(key**exp); a zero factor is tracked separately in ``zeros``."""

    __slots__ = ("scalar", "exps", "zeros")

    def __init__(self, scalar=1):
        self.scalar = as_rational(scalar)
        self.exps = defaultdict(int)
        self.zeros = 0

    def copy(self):
        b = Bag(self.scalar)
        b.exps.update(self.exps)
        b.zeros = self.zeros
        return b

    def add_key(self, key, m):
        if m:
            self.exps[key] += m
            if not self.exps[key]:
                del self.exps[key]

    def add_qpow(self, e):
        self.add_key(0, e)

    def add_qint(self, m, power=1):
        """Multiply by [m]**power."""
        if m < 1:
            raise ValueError("q-integer [m] needs m >= 1")
        for d in divisors(m):
            if d > 1:
                self.add_key(d, power)

    def add_binomial(self, alpha, e, m=1):
        """Multiply by (1 - alpha*q**e)**m for any integer e."""
        if not m:
            return
        alpha = as_rational(alpha)
        if not alpha:
            return
        if e == 0:
            val = 1 - alpha
            if not val:
                self.zeros += m
            else:
                self.scalar *= val ** m
            return
        if e < 0:
            # 1 - a q^e = -a q^e (1 - q^{-e}/a)
            self.scalar *= (-alpha) ** m
            self.add_key(0, e * m)
            alpha, e = 1 / alpha, -e
        if alpha == 1:
            # 1 - q^e = -prod_{d | e} Phi_d
            self.scalar *= (-1) ** (m % 2)
            for d in divisors(e):
                self.add_key(d, m)
        elif alpha == -1:
            for d in divisors(2 * e):
                if e % d:
                    self.add_key(d, m)
        else:
            self.add_key((alpha, e), m)

    def add_pochhammer_factor(self, x, m=1):
        """Multiply by (1 - x)**m for a QMonomial x."""
        self.add_binomial(x.coef, x.qexp, m)

    def mul(self, other):
        out = self.copy()
        out.scalar *= other.scalar
        out.zeros += other.zeros
        for k, v in other.exps.items():
            out.add_key(k, v)
        return out

    def inverse(self):
        if not self.scalar:
            raise ZeroDivisionError("inverse of a zero bag")
        out = Bag(1 / self.scalar)
        for k, v in self.exps.items():
            out.exps[k] = -v
        out.zeros = -self.zeros
        return out

    def split(self):
        """(numerator keys, denominator keys) as dicts with positive exponents."""
        pos = {k: v for k, v in self.exps.items() if v > 0}
        neg = {k: -v for k, v in self.exps.items() if v < 0}
        return pos, neg


def key_poly(key):
    if key == 0:
        return Poly._make([0, 1])
    if isinstance(key, int):
        return cyclotomic(key)
    alpha, e = key
    return Poly.binomial(alpha, e)


def expand(keys):
    """Expand a dict key -> positive exponent into a Poly."""
    factors = []
    for k, v in keys.items():
        if k == 0:
            continue
        factors.extend([key_poly(k)] * v)
    p = poly_product(factors) if factors else Poly._make([1])
    qe = keys.get(0, 0)
    return p.shift(qe) if qe else p


def bag_to_ratfunc(bag):
    if bag.zeros > 0:
        return RatFunc._reduced(Poly(), Poly([1]))
    if bag.zeros < 0:
        raise DegeneracyError("a denominator factor vanishes")
    pos, neg = bag.split()
    # keys are coprime across the split apart from reducible binomials; reduce anyway
    return RatFunc(expand(pos) * bag.scalar, expand(neg))


@dataclass(frozen=True)
class Pochhammer:
    """(x; q**step)_k raised to ``power`` (negative for denominator factors)."""

    x: QMonomial
    step: int = 1
    power: int = 1

    def __post_init__(self):
        object.__setattr__(self, "x", QMonomial.of(self.x))


@dataclass(frozen=True)
class HyperSum:
    """Sum over k of prod (x_i; q^s_i)_k^m_i * [a k + b]^p * z^k * q^(quad * C(k, 2)).

    ``base`` is z, a QMonomial; ``quad`` multiplies binomial(k, 2) in the
    exponent of q, so q^(k^2) is quad=2 with an extra q^k in ``base``.
    """

    pochhammers: tuple = ()
    base: QMonomial = QMonomial(Fraction(1), 0)
    quad: int = 0
    qints: tuple = ()  # (a, b, power) for [a*k + b]**power
    label: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "base", QMonomial.of(self.base))
        object.__setattr__(self, "pochhammers", tuple(self.pochhammers))
        object.__setattr__(self, "qints", tuple(self.qints))

    def first_term(self):
        bag = Bag()
        for a, b, p in self.qints:
            bag.add_qint(b, p)
        return bag

    def ratio(self, k):
        """Bag for T_k / T_(k-1), k >= 1."""
        bag = Bag(self.base.coef ** 1)
        if not self.base.coef:
            bag.zeros += 1
        bag.add_qpow(self.base.qexp + self.quad * (k - 1))
        for p in self.pochhammers:
            x = p.x
            bag.add_binomial(x.coef, x.qexp + p.step * (k - 1), p.power)
        for a, b, pw in self.qints:
            bag.add_qint(a * k + b, pw)
            bag.add_qint(a * (k - 1) + b, -pw)
        return bag

    def term_bag(self, k):
        bag = self.first_term()
        for j in range(1, k + 1):
            bag = bag.mul(self.ratio(j))
        return bag


def hyper_sum(spec, M):
    """Exact value of sum_{k=0}^{M} of the summand described by ``spec``."""
    if M < 0:
        return RatFunc._reduced(Poly(), Poly([1]))
    ratios = []
    for k in range(1, M + 1):
        r = spec.ratio(k)
        if r.zeros > 0:
            break  # this and all later terms vanish
        if r.zeros < 0:
            raise DegeneracyError(f"vanishing denominator factor at k = {k}")
        ratios.append(r)
    t0 = spec.first_term()
    if t0.zeros > 0:
        return RatFunc._reduced(Poly(), Poly([1]))
    if t0.zeros < 0:
        raise DegeneracyError("vanishing denominator factor at k = 0")
    num = Poly._make([1])
    den_keys = {}
    den = Poly._make([1])
    for r in reversed(ratios):
        pos, neg = r.split()
        # cancel the ratio's numerator against the running denominator
        removed = {}
        for key, v in pos.items():
            have = den_keys.get(key, 0)
            c = min(v, have)
            if c:
                removed[key] = c
                pos[key] = v - c
        new_keys = dict(den_keys)
        for key, c in removed.items():
            new_keys[key] -= c
            if not new_keys[key]:
                del new_keys[key]
        for key, v in neg.items():
            new_keys[key] = new_keys.get(key, 0) + v
        if removed:
            den = den.exact_div(expand(removed))
        if neg:
            den = den * expand(neg)
        num = den + num * expand({k: v for k, v in pos.items() if v}) * r.scalar
        den_keys = new_keys
    pos0, neg0 = t0.split()
    total_num = num * expand(pos0) * t0.scalar
    total_den = den * expand(neg0) if neg0 else den
    return RatFunc(total_num, total_den)


def qproduct(factors, scalar=1, qexp=0):
    """scalar * q**qexp * prod (x; q^step)_k^power over (x, step, k, power) tuples."""
    bag = Bag(scalar)
    bag.add_qpow(qexp)
    for x, step, k, power in factors:
        x = QMonomial.of(x)
        for j in range(k):
            bag.add_binomial(x.coef, x.qexp + step * j, power)
    return bag_to_ratfunc(bag)


def qpow(e):
    """q**e as a RatFunc for any integer e."""
    if e >= 0:
        return RatFunc._reduced(Poly.monomial(1, e), Poly([1]))
    return RatFunc._reduced(Poly([1]), Poly.monomial(1, -e))
