"""Reduced rational functions in q."""

from fractions import Fraction

from . import _intpoly as ip
from .gcd import int_gcd
from .poly import LaurentPoly, Poly, as_rational


def _normalize(num, den):
    """Move the content of den into num; den becomes primitive with lc > 0."""
    c, prim = den.primitive()
    if c != 1:
        num = num * (1 / c)
    return num, Poly._make(prim)


class RatFunc:
    """num/den in lowest terms; den primitive over Z with positive leading coefficient.

    Equality is structural because the representation is canonical.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = Poly([1]) if den is None else _as_poly(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.num, self.den = num, Poly([1])
            return
        if not den.is_constant():
            g = int_gcd(list(num.int_coefficients), list(den.int_coefficients))
            if len(g) > 1:
                gp = Poly._make(g)
                num = num.exact_div(gp)
                den = den.exact_div(gp)
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _reduced(cls, num, den):
        """Wrap a pair already known to be coprime; only normalizes den."""
        obj = cls.__new__(cls)
        if not num:
            obj.num, obj.den = num, Poly([1])
        else:
            obj.num, obj.den = _normalize(num, den)
        return obj

    @classmethod
    def from_laurent(cls, num, den=None):
        return ratfunc_reduce(num, den if den is not None else LaurentPoly(Poly([1])))

    # -- inspection -----------------------------------------------------

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self):
        return self.den.is_constant()

    # -- arithmetic -----------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (Poly, int, Fraction)):
            return RatFunc._reduced(_as_poly(other), Poly([1]))
        if isinstance(other, LaurentPoly):
            return ratfunc_reduce(other, LaurentPoly(Poly([1])))
        return NotImplemented

    def __neg__(self):
        return RatFunc._reduced(-self.num, self.den)

    def _addsub(self, other, sign):
        other_num = other.num if sign > 0 else -other.num
        if self.den == other.den:
            num = self.num + other_num
            if self.den.is_constant():
                return RatFunc._reduced(num, self.den)
            return RatFunc(num, self.den)
        a_den = list(self.den.int_coefficients)
        b_den = list(other.den.int_coefficients)
        g = int_gcd(a_den, b_den)
        if len(g) == 1:
            num = self.num * other.den + other_num * self.den
            return RatFunc._reduced(num, self.den * other.den)
        # Henrici: only the shared part g can cancel
        a_cof = Poly._make(ip.exact_div(a_den, g))
        b_cof = Poly._make(ip.exact_div(b_den, g))
        num = self.num * b_cof + other_num * a_cof
        den = self.den * b_cof
        if not num:
            return RatFunc._reduced(num, Poly([1]))
        h = int_gcd(list(num.int_coefficients), g)
        if len(h) > 1:
            hp = Poly._make(h)
            num = num.exact_div(hp)
            den = den.exact_div(hp)
        return RatFunc._reduced(num, den)

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
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return RatFunc._reduced(Poly(), Poly([1]))
        a_num, a_den = self.num, self.den
        b_num, b_den = other.num, other.den
        # cross-cancel so the product stays reduced
        if not b_den.is_constant():
            g = int_gcd(list(a_num.int_coefficients), list(b_den.int_coefficients))
            if len(g) > 1:
                gp = Poly._make(g)
                a_num, b_den = a_num.exact_div(gp), b_den.exact_div(gp)
        if not a_den.is_constant():
            g = int_gcd(list(b_num.int_coefficients), list(a_den.int_coefficients))
            if len(g) > 1:
                gp = Poly._make(g)
                b_num, a_den = b_num.exact_div(gp), a_den.exact_div(gp)
        return RatFunc._reduced(a_num * b_num, a_den * b_den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc._reduced(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            raise TypeError("integer exponent required")
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc._reduced(self.num ** e, self.den ** e)

    def shift(self, k):
        """Multiply by q**k for any integer k."""
        if k >= 0:
            return self * Poly.monomial(1, k)
        return self * RatFunc._reduced(Poly([1]), Poly.monomial(1, -k))

    def __call__(self, x):
        return ratfunc_eval(self, x)

    # -- comparison -----------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den.is_constant():
            return f"RatFunc({self.num})"
        return f"RatFunc(({self.num}) / ({self.den}))"


def _as_poly(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.constant(x)
    if isinstance(x, LaurentPoly):
        return x.to_poly()
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


def ratfunc_reduce(num, den):
    """Reduce a quotient of Laurent polynomials to a canonical RatFunc.

    Offsets are cleared by multiplying through by a power of q; q is a unit
    modulo every cyclotomic polynomial so this never changes a verdict.
    """
    num = LaurentPoly._coerce(num)
    den = LaurentPoly._coerce(den)
    if not den:
        raise ZeroDivisionError("rational function with zero denominator")
    if not num:
        return RatFunc._reduced(Poly(), Poly([1]))
    e = num.offset - den.offset
    n_poly, d_poly = num.body, den.body
    if e > 0:
        n_poly = n_poly.shift(e)
    elif e < 0:
        d_poly = d_poly.shift(-e)
    return RatFunc(n_poly, d_poly)


def ratfunc_combine(a, b, op):
    """Apply ``op`` in {'add', 'sub', 'mul', 'div'} to two rational functions."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise ZeroDivisionError("division by the zero rational function")
        return a / b
    raise ValueError(f"unknown rational function operation {op!r}")


def ratfunc_eval(f, x):
    """Exact value of f at the rational x, taking limits at removable singularities."""
    x = as_rational(x)
    num, den = f.num, f.den
    lin = Poly([-x, 1])
    while not den(x):
        if num(x):
            raise ZeroDivisionError(f"pole at q = {x}")
        num = num.exact_div(lin)
        den = den.exact_div(lin)
    return num(x) / den(x)
