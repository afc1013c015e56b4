"""Divisibility verdicts for rational-function congruences, and polynomial CRT.

A congruence A == B (mod M) with rational-function sides is read as: the
reduced denominator of A - B is coprime to every factor of M, and every factor
f**e of M divides the reduced numerator.
"""

from dataclasses import dataclass, field

from .errors import DegeneracyError
from .exactalgebra import Poly, RatFunc, as_rational, poly_divrem, poly_gcd
from .exactalgebra.gcd import int_gcd
from .qobjects import FactoredModulus, binomial_label


@dataclass(frozen=True)
class FactorValuation:
    factor: str
    required: int
    achieved: int | None  # None: the difference is zero, valuation is infinite

    @property
    def ok(self):
        return self.achieved is None or self.achieved >= self.required


@dataclass
class CongruenceReport:
    passed: bool
    per_factor: list = field(default_factory=list)
    denominator_coprime: bool = True
    notes: str = ""

    def to_dict(self):
        return {
            "pass": self.passed,
            "denominator_coprime": self.denominator_coprime,
            "per_factor": [
                {"factor": v.factor, "required": v.required, "achieved": v.achieved}
                for v in self.per_factor
            ],
            "notes": self.notes,
        }


def valuation(num, f, limit=None):
    """Largest v with f**v | num by repeated division (None for num == 0)."""
    if not num:
        return None
    v = 0
    while limit is None or v < limit:
        quo, rem = poly_divrem(num, f)
        if rem:
            break
        num = quo
        v += 1
    return v


def _coprime(den, f):
    if den.is_constant():
        return True
    return len(int_gcd(list(den.int_coefficients), list(f.int_coefficients))) == 1


def check_congruence(diff, modulus):
    """Decide diff == 0 modulo a FactoredModulus; failures are reported, never raised."""
    if not isinstance(diff, RatFunc):
        diff = RatFunc._coerce(diff)
    rows = []
    coprime = True
    bad = []
    for label, f, e in modulus.factors():
        if not _coprime(diff.den, f):
            coprime = False
            bad.append(label)
        rows.append(FactorValuation(label, e, valuation(diff.num, f)))
    passed = coprime and all(r.ok for r in rows)
    notes = ""
    if not coprime:
        notes = "denominator shares a factor with " + ", ".join(bad)
    elif not diff:
        notes = "difference is identically zero"
    return CongruenceReport(passed, rows, coprime, notes)


def check_identity(diff):
    """Verdict for an exact identity: the difference must vanish."""
    if not isinstance(diff, RatFunc):
        diff = RatFunc._coerce(diff)
    ok = diff.is_zero()
    return CongruenceReport(ok, [], True, "exact identity" if ok else "identity fails: nonzero difference")


def poly_gcdex(a, b):
    """Extended Euclid over Q: (g, s, t) with s*a + t*b == g, g monic."""
    r0, r1 = a, b
    s0, s1 = Poly([1]), Poly()
    t0, t1 = Poly(), Poly([1])
    while r1:
        quo, rem = poly_divrem(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    lc = r0.leading_coefficient()
    if not lc:
        raise ValueError("gcd(0, 0) is undefined")
    inv = 1 / lc
    return r0 * inv, s0 * inv, t0 * inv


def poly_invmod(a, m):
    """Inverse of a modulo m; raises DegeneracyError when they are not coprime."""
    g, s, _ = poly_gcdex(a % m if a.degree >= m.degree else a, m)
    if not g.is_constant():
        raise DegeneracyError("polynomial is not invertible modulo the given modulus")
    return s % m


def ratfunc_mod(f, m):
    """Polynomial residue of a rational function modulo m (denominator must be a unit)."""
    return (f.num * poly_invmod(f.den, m)) % m


def poly_crt(pairs):
    """Unique r with deg r < sum of modulus degrees and r == r_i (mod m_i)."""
    pairs = [(r if isinstance(r, Poly) else Poly.constant(r), m) for r, m in pairs]
    if not pairs:
        raise ValueError("poly_crt needs at least one congruence")
    for _, m in pairs:
        if m.is_constant():
            raise ValueError("CRT moduli must be nonconstant")
    for i in range(len(pairs)):
        for j in range(i):
            if not poly_gcd(pairs[i][1], pairs[j][1]).is_constant():
                raise DegeneracyError("CRT moduli are not pairwise coprime")
    r, m = pairs[0][0] % pairs[0][1], pairs[0][1]
    for ri, mi in pairs[1:]:
        t = ((ri - r) * poly_invmod(m, mi)) % mi
        r = r + m * t
        m = m * mi
    return r % m


def _qpow(n):
    return Poly.monomial(1, n)


def crt_weights(a, b, n):
    """The two CRT idempotent-like weights of the three-parameter step, as RatFuncs."""
    a, b = as_rational(a), as_rational(b)
    if a in (0, 1, -1) or b in (0, 1, -1):
        raise DegeneracyError("a and b must avoid 0 and +-1")
    denom = (a - b) * (1 - a * b)
    if not denom:
        raise DegeneracyError("(a - b)(1 - ab) vanishes")
    qn = _qpow(n)
    first = (b - qn) * (a * b - 1 - a * a + a * qn) * (1 / denom)
    second = Poly.binomial(a, n) * (a - qn) * (1 / denom)
    return RatFunc._reduced(first, Poly([1])), RatFunc._reduced(second, Poly([1]))


def check_crt_weights(a, b, n):
    """Check both weight congruences of the CRT step; returns a pair of reports."""
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be an odd positive integer")
    a, b = as_rational(a), as_rational(b)
    first, second = crt_weights(a, b, n)
    mod_a = FactoredModulus((), (Poly.binomial(a, n), a - _qpow(n)),
                            (binomial_label(a, n), binomial_label(a, n, reverse=True)))
    mod_b = FactoredModulus((), (b - _qpow(n),), (binomial_label(b, n, reverse=True),))
    return check_congruence(first - 1, mod_a), check_congruence(second - 1, mod_b)


__all__ = [
    "CongruenceReport", "FactorValuation", "check_congruence", "check_identity",
    "valuation", "poly_crt", "poly_gcdex", "poly_invmod", "ratfunc_mod",
    "crt_weights", "check_crt_weights",
]
