"""Parameter-dependent weight factors and the a -> 1 limit check."""

from fractions import Fraction

from ..congruence import crt_weights
from ..errors import DegeneracyError
from ..exactalgebra import Poly, RatFunc, as_rational, ratfunc_eval
from ..qobjects import q
from .terms import qpow, qproduct


def _check_odd(n):
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be an odd positive integer")


def _check_param(a, name="a"):
    a = as_rational(a)
    if a in (0, 1, -1):
        raise DegeneracyError(f"{name} must avoid 0 and +-1")
    return a


def _rf(p):
    return RatFunc._reduced(p, Poly([1]))


def _split_pair(a, n):
    """(1 - a q^n)(a - q^n) as a Poly."""
    return Poly.binomial(a, n) * (a - Poly.monomial(1, n))


def bracket_weight(n):
    """[n] q^((1-n)/2) (1 + [n]^2 (n^2 - 1)(1 - q)^2 / 24)."""
    _check_odd(n)
    qi = Poly._make([1] * n)
    inner = 1 + qi * qi * Poly._make([1, -2, 1]) * Fraction(n * n - 1, 24)
    return _rf(qi * inner) * qpow((1 - n) // 2)


def dual_ratio(a, n):
    """(q; q^2)_m^2 / (a q^2, q^2/a; q^2)_m with m = (n-1)/2."""
    m = (n - 1) // 2
    return qproduct([(q(1), 2, m, 2), (q(2, a), 2, m, -1), (q(2, 1 / a), 2, m, -1)])


def b_ratio(b, n):
    """(b/q)^m (q^2/b; q^2)_m / (b q^2; q^2)_m."""
    m = (n - 1) // 2
    return qproduct([(q(2, 1 / b), 2, m, 1), (q(2, b), 2, m, -1)], scalar=b ** m, qexp=-m)


def omega_factor(a, n):
    _check_odd(n)
    a = _check_param(a)
    if a ** n == 1:
        raise DegeneracyError("a^n = 1")
    m = (n - 1) // 2
    brace = 1 - n * (1 - a) * a ** m / (1 - a ** n)
    body = 1 + _split_pair(a, n) * (brace / (1 - a) ** 2)
    return _rf(body) * qpow((1 - n) // 2)


def s_factor(a, n):
    _check_odd(n)
    a = _check_param(a)
    qn = Poly.monomial(1, n)
    first = _rf((1 - qn) * (1 + a * a - a - a * qn) * (1 / (1 - a) ** 2)) * qpow((1 - n) // 2)
    second = _rf(_split_pair(a, n) * (1 / (1 - a) ** 2)) * dual_ratio(a, n)
    return first - second


def r_factor(a, b, n):
    _check_odd(n)
    a = _check_param(a)
    b = _check_param(b, "b")
    e1, e2 = crt_weights(a, b, n)
    return e1 * b_ratio(b, n) + e2 * dual_ratio(a, n)


def lhopital_check(n, q_val):
    """Compare the a -> 1 limit of the Omega correction with [n]^2 (n^2-1)(1-q)^2/24 at q = q_val."""
    _check_odd(n)
    x = as_rational(q_val)
    if x in (0, 1, -1) or x ** n == 1:
        raise DegeneracyError("q_val must avoid 0, +-1 and n-th roots of unity")
    m = (n - 1) // 2
    xn = x ** n
    a = Poly([0, 1])  # the variable is a here
    one = Poly([1])
    brace = one - a ** n - (one - a) * a ** m * n
    num = (one - a * xn) * (a - xn) * brace
    den = (one - a) ** 2 * (one - a ** n)
    limit = ratfunc_eval(RatFunc(num, den), 1)
    qint = sum(x ** j for j in range(n))
    target = qint * qint * Fraction(n * n - 1, 24) * (1 - x) ** 2
    return limit == target
