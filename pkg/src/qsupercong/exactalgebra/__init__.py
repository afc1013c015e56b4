"""Exact arithmetic kernel: rationals, polynomials, Laurent polynomials, rational functions.

Rationals are :class:`fractions.Fraction` throughout.
"""

from fractions import Fraction as Rational

from .gcd import poly_gcd
from .poly import (
    ONE,
    Q,
    ZERO,
    LaurentPoly,
    Poly,
    as_rational,
    poly_arith,
    poly_divrem,
    poly_product,
)
from .ratfunc import RatFunc, ratfunc_combine, ratfunc_eval, ratfunc_reduce

__all__ = [
    "Rational", "as_rational",
    "Poly", "LaurentPoly", "RatFunc",
    "ZERO", "ONE", "Q",
    "poly_arith", "poly_divrem", "poly_gcd", "poly_product",
    "ratfunc_reduce", "ratfunc_combine", "ratfunc_eval",
]
