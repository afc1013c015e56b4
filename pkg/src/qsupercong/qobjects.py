"""q-integers, q-shifted factorials, q-binomials, cyclotomic polynomials, moduli."""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import DegeneracyError
from .exactalgebra import LaurentPoly, Poly, as_rational, poly_gcd, poly_product


@dataclass(frozen=True)
class QMonomial:
    """coef * q**qexp.  A zero coefficient encodes a parameter sent to 0."""

    coef: Fraction
    qexp: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coef", as_rational(self.coef))
        object.__setattr__(self, "qexp", int(self.qexp))

    @classmethod
    def of(cls, x):
        """Accept a QMonomial, a rational, or a (coef, qexp) pair."""
        if isinstance(x, QMonomial):
            return x
        if isinstance(x, tuple):
            return cls(*x)
        return cls(as_rational(x), 0)

    def __mul__(self, other):
        other = QMonomial.of(other)
        return QMonomial(self.coef * other.coef, self.qexp + other.qexp)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = QMonomial.of(other)
        if not other.coef:
            raise ZeroDivisionError("division by a vanished parameter")
        return QMonomial(self.coef / other.coef, self.qexp - other.qexp)

    def __rtruediv__(self, other):
        return QMonomial.of(other) / self

    def __pow__(self, e):
        return QMonomial(self.coef ** e, self.qexp * e)

    def to_laurent(self):
        return LaurentPoly.monomial(self.coef, self.qexp)

    def __str__(self):
        if self.qexp == 0:
            return str(self.coef)
        mono = f"q^{self.qexp}" if self.qexp != 1 else "q"
        return mono if self.coef == 1 else f"{self.coef}*{mono}"


def q(e=1, coef=1):
    """Shorthand for the monomial coef * q**e."""
    return QMonomial(as_rational(coef), e)


def q_integer(n):
    """[n] = 1 + q + ... + q**(n-1)."""
    if n < 1:
        raise ValueError("q-integer [n] needs n >= 1")
    return Poly._make([1] * n)


def mobius(n):
    if n < 1:
        raise ValueError("Mobius function needs n >= 1")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def divisors(n):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def cyclotomic(n):
    """n-th cyclotomic polynomial via Mobius inversion of q**n - 1."""
    if n < 1:
        raise ValueError("cyclotomic polynomial needs n >= 1")
    up, down = [], []
    for d in divisors(n):
        mu = mobius(d)
        if mu:
            factor = Poly._make([-1] + [0] * (n // d - 1) + [1])
            (up if mu > 0 else down).append(factor)
    return poly_product(up).exact_div(poly_product(down))


def q_shifted_factorial(x, step, k):
    """(x; q**step)_k as a Laurent polynomial in q."""
    x = QMonomial.of(x)
    if k < 0:
        raise ValueError("q-shifted factorial needs k >= 0")
    if step < 1:
        raise ValueError("step must be a positive integer")
    body = Poly._make([1])
    offset = 0
    c = x.coef
    for j in range(k):
        e = x.qexp + step * j
        if not c:
            continue
        if e >= 0:
            body = body.mul_binomial(c, e)
        else:
            # 1 - c q^e = q^e (q^{-e} - c) = -c q^e (1 - q^{-e}/c)
            offset += e
            body = body.mul_binomial(1 / c, -e) * (-c)
    return LaurentPoly(body, offset)


def q_binomial(t, s):
    """Gaussian binomial coefficient [t choose s] in q."""
    if s < 0 or t < 0:
        raise ValueError("q-binomial needs nonnegative arguments")
    if s > t:
        raise ValueError("q-binomial [t choose s] needs s <= t")
    s = min(s, t - s)
    num = Poly._make([1])
    den = Poly._make([1])
    for j in range(1, s + 1):
        num = num.mul_binomial(1, t - s + j)
        den = den.mul_binomial(1, j)
    return num.exact_div(den)


@dataclass(frozen=True)
class FactoredModulus:
    """Product of cyclotomic powers and extra (exponent-one) polynomial factors."""

    cyclotomic_factors: tuple = ()
    extra_factors: tuple = ()
    extra_labels: tuple = field(default=(), compare=False)

    def __post_init__(self):
        cyc = tuple((int(d), int(e)) for d, e in self.cyclotomic_factors)
        extras = tuple(self.extra_factors)
        labels = tuple(self.extra_labels) or tuple(str(f) for f in extras)
        object.__setattr__(self, "cyclotomic_factors", tuple(sorted(cyc)))
        object.__setattr__(self, "extra_factors", extras)
        object.__setattr__(self, "extra_labels", labels)
        indices = [d for d, _ in cyc]
        if len(set(indices)) != len(indices):
            raise ValueError("cyclotomic indices must be distinct")
        if any(e < 1 for _, e in cyc) or any(d < 1 for d in indices):
            raise ValueError("cyclotomic indices and exponents must be positive")
        for f in extras:
            if not isinstance(f, Poly) or f.is_constant():
                raise DegeneracyError("extra modulus factors must be nonconstant polynomials")
        for i, f in enumerate(extras):
            for d in indices:
                if not poly_gcd(f, cyclotomic(d)).is_constant():
                    raise DegeneracyError(f"extra factor {labels[i]} shares a root with Phi_{d}")
            for j in range(i):
                if not poly_gcd(f, extras[j]).is_constant():
                    raise DegeneracyError(f"extra factors {labels[j]} and {labels[i]} are not coprime")

    def factors(self):
        """Yield (description, polynomial, exponent) for every factor."""
        for d, e in self.cyclotomic_factors:
            yield f"Phi_{d}", cyclotomic(d), e
        for label, f in zip(self.extra_labels, self.extra_factors):
            yield label, f, 1

    def product(self):
        return poly_product(p ** e for _, p, e in self.factors())

    def raise_phi(self, d, extra):
        """Copy with the exponent of Phi_d increased by ``extra``."""
        cyc = dict(self.cyclotomic_factors)
        cyc[d] = cyc.get(d, 0) + extra
        return FactoredModulus(tuple(cyc.items()), self.extra_factors, self.extra_labels)

    def describe(self):
        parts = [f"Phi_{d}^{e}" if e > 1 else f"Phi_{d}" for d, e in self.cyclotomic_factors]
        parts += [f"({label})" for label in self.extra_labels]
        return " * ".join(parts) if parts else "1"

    def __str__(self):
        return self.describe()


def binomial_label(alpha, e, reverse=False):
    """Readable label for 1 - alpha q^e (or alpha - q^e with reverse=True)."""
    mono = "q" if e == 1 else f"q^{e}"
    if reverse:
        return f"{alpha} - {mono}"
    return f"1 - {alpha}*{mono}"


def assemble_modulus(n, phi_n_exponent, extras=()):
    """Modulus [n] * Phi_n(q)**phi_n_exponent times optional extra factors.

    [n] is the product of Phi_d over divisors 1 < d of n, so Phi_n ends up with
    exponent phi_n_exponent + 1 and every other nontrivial divisor with 1.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("assemble_modulus needs an odd positive n")
    if phi_n_exponent < 0:
        raise ValueError("exponent of Phi_n must be nonnegative")
    cyc = []
    for d in divisors(n):
        if d == 1:
            continue
        cyc.append((d, phi_n_exponent + 1 if d == n else 1))
    labels = []
    polys = []
    for f in extras:
        if isinstance(f, tuple):
            label, f = f
        else:
            label = str(f)
        labels.append(label)
        polys.append(f)
    return FactoredModulus(tuple(cyc), tuple(polys), tuple(labels))
