"""Dense univariate polynomials over the rationals, plus a Laurent variant.

A :class:`Poly` is stored as a tuple of integers and one positive common
denominator, so the hot paths run on machine-friendly ``int`` arithmetic
while the public surface speaks :class:`fractions.Fraction`.
"""

from fractions import Fraction
from math import gcd
from numbers import Rational as _RationalABC

from . import _intpoly as ip


def as_rational(x):
    """Coerce an int, Fraction or numeric string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _lcm(a, b):
    return a // gcd(a, b) * b


class Poly:
    """Polynomial in q with rational coefficients, immutable.

    ``Poly([1, 0, -1])`` is 1 - q**2.  Coefficients are indexed by exponent.
    The zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("_c", "_d", "_hash")

    def __init__(self, coeffs=()):
        if isinstance(coeffs, Poly):
            self._c, self._d = coeffs._c, coeffs._d
            self._hash = None
            return
        if isinstance(coeffs, (int, Fraction)):
            coeffs = (coeffs,)
        vals = [as_rational(c) for c in coeffs]
        den = 1
        for v in vals:
            if v.denominator != 1:
                den = _lcm(den, v.denominator)
        ints = [v.numerator * (den // v.denominator) for v in vals]
        self._set(ip.trim(ints), den)

    def _set(self, ints, den):
        if not ints:
            self._c, self._d = (), 1
        elif den == 1:
            self._c, self._d = tuple(ints), 1
        else:
            if den < 0:
                ints = [-x for x in ints]
                den = -den
            g = den
            for x in ints:
                if x:
                    g = gcd(g, x)
                    if g == 1:
                        break
            if g != 1:
                ints = [x // g for x in ints]
                den //= g
            self._c, self._d = tuple(ints), den
        self._hash = None

    @classmethod
    def _make(cls, ints, den=1):
        """Build from an integer list (trimmed) over a common denominator."""
        obj = cls.__new__(cls)
        obj._set(ints, den)
        return obj

    @classmethod
    def gen(cls):
        """The variable q."""
        return cls._make([0, 1])

    @classmethod
    def constant(cls, c):
        c = as_rational(c)
        return cls._make([c.numerator] if c else [], c.denominator)

    @classmethod
    def monomial(cls, c, k):
        """c * q**k for k >= 0."""
        c = as_rational(c)
        if not c:
            return cls._make([])
        return cls._make([0] * k + [c.numerator], c.denominator)

    @classmethod
    def binomial(cls, alpha, e):
        """1 - alpha * q**e for e >= 0."""
        alpha = as_rational(alpha)
        if e == 0:
            return cls.constant(1 - alpha)
        return cls._make(ip.trim([alpha.denominator] + [0] * (e - 1)
                                 + [-alpha.numerator]), alpha.denominator)

    # -- inspection -----------------------------------------------------

    @property
    def coefficients(self):
        d = self._d
        return tuple(Fraction(c, d) for c in self._c)

    @property
    def int_coefficients(self):
        """Integer numerator coefficients; the polynomial is these over ``denominator``."""
        return self._c

    @property
    def denominator(self):
        return self._d

    @property
    def degree(self):
        return len(self._c) - 1

    def __len__(self):
        return len(self._c)

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __getitem__(self, k):
        if 0 <= k < len(self._c):
            return Fraction(self._c[k], self._d)
        return Fraction(0)

    def leading_coefficient(self):
        if not self._c:
            return Fraction(0)
        return Fraction(self._c[-1], self._d)

    def is_constant(self):
        return len(self._c) <= 1

    def is_integral(self):
        return self._d == 1

    def primitive(self):
        """Return (content, ints) with self == content * ints, ints primitive, positive lc."""
        c, prim = ip.primitive(list(self._c))
        return Fraction(c, self._d), prim

    def monic(self):
        if not self._c:
            return self
        c, prim = ip.primitive(list(self._c))
        return Poly._make(prim, prim[-1])

    def low_order(self):
        """Exponent of the lowest nonzero term (0 for the zero polynomial)."""
        for i, c in enumerate(self._c):
            if c:
                return i
        return 0

    # -- arithmetic -----------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other)
        return NotImplemented

    def __neg__(self):
        return Poly._make([-x for x in self._c], self._d)

    def __pos__(self):
        return self

    def _addsub(self, other, sign):
        if self._d == other._d:
            b = other._c if sign > 0 else [-x for x in other._c]
            return Poly._make(ip.add(list(self._c), list(b)), self._d)
        d = _lcm(self._d, other._d)
        fa, fb = d // self._d, d // other._d
        a = [x * fa for x in self._c]
        b = [x * fb * sign for x in other._c]
        return Poly._make(ip.add(a, b), d)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._addsub(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._addsub(other, -1)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other._addsub(self, -1)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = as_rational(other)
            return Poly._make(ip.scale(list(self._c), other.numerator),
                              self._d * other.denominator)
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly._make(ip.mul(list(self._c), list(other._c)), self._d * other._d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = as_rational(other)
            if not other:
                raise ZeroDivisionError("division of a polynomial by zero")
            return self * (1 / other)
        return NotImplemented

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly._make([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_divrem(self, other)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        """Quotient self / other, raising ValueError if other does not divide self."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return self
        ca, a = self.primitive()
        cb, b = other.primitive()
        quo = ip.exact_div(a, b)
        if quo is None:
            raise ValueError("polynomial division is not exact")
        c = ca / cb
        return Poly._make(ip.scale(quo, c.numerator), c.denominator)

    def divides(self, other):
        """True when self divides other exactly."""
        if not self:
            return not other
        if not other:
            return True
        return ip.exact_div(other.primitive()[1], self.primitive()[1]) is not None

    def shift(self, k):
        """Multiply by q**k (k >= 0)."""
        if k < 0:
            raise ValueError("use LaurentPoly for negative shifts")
        return Poly._make(ip.shift(self._c, k), self._d)

    def mul_binomial(self, alpha, e):
        """Return self * (1 - alpha*q**e)."""
        alpha = as_rational(alpha)
        return Poly._make(ip.mul_binomial(list(self._c), alpha.numerator, alpha.denominator, e),
                          self._d * alpha.denominator)

    def mul_qint(self, m):
        """Return self * [m] where [m] = 1 + q + ... + q**(m-1)."""
        return Poly._make(ip.mul_qint(self._c, m), self._d)

    def derivative(self):
        return Poly._make(ip.derivative(self._c), self._d)

    def __call__(self, x):
        x = as_rational(x)
        return Fraction(ip.evaluate(self._c, x)) / self._d

    # -- comparison -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._d == other._d and self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._c, self._d))
        return self._hash

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for i, c in enumerate(self._c):
            if not c:
                continue
            v = Fraction(c, self._d)
            mag = abs(v)
            if i == 0:
                term = str(mag)
            else:
                mono = "q" if i == 1 else f"q^{i}"
                term = mono if mag == 1 else f"{mag}*{mono}"
            parts.append(("-" if v < 0 else "+", term))
        sign, first = parts[0]
        out = ("-" if sign == "-" else "") + first
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out


ZERO = Poly()
ONE = Poly([1])
Q = Poly.gen()


def poly_product(polys):
    """Product of an iterable of Polys using a balanced tree."""
    polys = list(polys)
    if not polys:
        return ONE
    den = 1
    ints = []
    for p in polys:
        if not p:
            return ZERO
        den *= p._d
        ints.append(list(p._c))
    return Poly._make(ip.product(ints), den)


def poly_arith(a, b, op):
    """Apply ``op`` in {'add', 'sub', 'mul'} to two polynomials."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_divrem(a, b):
    """Division with remainder over the rationals: a == quo*b + rem, deg rem < deg b."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if a.degree < b.degree:
        return ZERO, a
    bc = b._c
    if bc[-1] in (1, -1):
        # a = A/da, b = B/db with B unit-leading: A = Qi*B + Ri
        quo, rem = ip.divmod_unit(list(a._c), list(bc))
        return Poly._make(ip.scale(quo, b._d), a._d), Poly._make(rem, a._d)
    return _divrem_rational(a, b)


def _divrem_rational(a, b):
    # sparse-aware schoolbook over Fractions
    r = list(a.coefficients)
    bco = b.coefficients
    db = len(bco) - 1
    inv_lc = 1 / bco[-1]
    nz = [(j, y) for j, y in enumerate(bco[:-1]) if y]
    quo = [Fraction(0)] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            c *= inv_lc
            s = i - db
            quo[s] = c
            for j, y in nz:
                r[s + j] -= c * y
    return Poly(quo), Poly(r[:db])


class LaurentPoly:
    """q**offset * body, with body's constant term nonzero (unless zero)."""

    __slots__ = ("offset", "body")

    def __init__(self, body=ZERO, offset=0):
        if not isinstance(body, Poly):
            body = Poly(body)
        if not body:
            offset = 0
        else:
            low = body.low_order()
            if low:
                body = Poly._make(list(body._c[low:]), body._d)
                offset += low
        self.offset = int(offset)
        self.body = body

    @classmethod
    def from_poly(cls, p):
        return cls(p, 0)

    @classmethod
    def monomial(cls, c, k):
        return cls(Poly.constant(c), k)

    def is_zero(self):
        return not self.body

    def __bool__(self):
        return bool(self.body)

    @property
    def max_exponent(self):
        return self.offset + self.body.degree

    def to_poly(self):
        """Return a Poly when offset >= 0, else raise ValueError."""
        if self.offset < 0:
            raise ValueError("Laurent polynomial has negative powers of q")
        return self.body.shift(self.offset)

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, Poly):
            return LaurentPoly(other)
        if isinstance(other, (int, Fraction)):
            return LaurentPoly(Poly.constant(other))
        return NotImplemented

    def _align(self, other):
        lo = min(self.offset, other.offset)
        return (self.body.shift(self.offset - lo),
                other.body.shift(other.offset - lo), lo)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self:
            return other
        if not other:
            return self
        a, b, lo = self._align(other)
        return LaurentPoly(a + b, lo)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(-self.body, self.offset)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(self.body * other.body, self.offset + other.offset)

    __rmul__ = __mul__

    def __pow__(self, e):
        return LaurentPoly(self.body ** e, self.offset * e)

    def __call__(self, x):
        x = as_rational(x)
        if not self.body:
            return Fraction(0)
        if not x and self.offset < 0:
            raise ZeroDivisionError("negative power of q evaluated at 0")
        return self.body(x) * x ** self.offset

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.offset == other.offset and self.body == other.body

    def __hash__(self):
        return hash((self.offset, self.body))

    def __repr__(self):
        if self.offset:
            return f"LaurentPoly(q^{self.offset} * ({self.body}))"
        return f"LaurentPoly({self.body})"
