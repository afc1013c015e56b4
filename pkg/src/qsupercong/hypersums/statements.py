"""Registry of checkable statements: both sides, parameter slots, moduli.

Each statement is ``lhs == rhs (mod modulus)`` for odd n.  The truncation M of
the main sum is (n-1)/2 in mode "half" and n-1 in mode "full"; statements
whose sides do not depend on M are registered for mode "half" only.

Moduli have one of three shapes, selected by ``shape``:

* ``"bracket"`` -- [n] * Phi_n**e * extras (so Phi_n appears to the power e+1)
* ``"phi"``     -- Phi_n**e * extras
* ``"extra"``   -- extras only

``phi_exponent`` is the stated e; scan mode substitutes another value.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..errors import ApplicabilityError, DegeneracyError, UnknownStatementError
from ..exactalgebra import Poly, RatFunc, as_rational
from ..qobjects import FactoredModulus, QMonomial, assemble_modulus, binomial_label, q
from .series import SeriesSpec, phi_series
from .terms import HyperSum, Pochhammer as P, hyper_sum, qpow, qproduct
from .weights import b_ratio, bracket_weight, dual_ratio, omega_factor, r_factor, s_factor

ZERO_RF = RatFunc._reduced(Poly(), Poly([1]))


def admissible(v):
    """Sampled rational parameters avoid 0 and the unit circle."""
    try:
        v = as_rational(v)
    except TypeError:
        return isinstance(v, QMonomial) and v.coef != 0
    return v not in (0, 1, -1)


@dataclass(frozen=True)
class ParamSlot:
    name: str
    kind: str = "rational"  # or "index": an integer 0 <= k <= (n-1)/2
    predicate: Callable = admissible


@dataclass(frozen=True)
class StatementSpec:
    id: str
    summary: str
    lhs_builder: Callable
    rhs_builder: Callable
    slots: tuple = ()
    applicability: Callable = lambda n: True
    applicability_text: str = "n odd"
    m_modes: frozenset = frozenset({"half", "full"})
    shape: str = "bracket"
    phi_exponent: int = 0
    extras: Callable = None  # (n, params) -> list of (label, Poly)
    param_check: Callable = None  # (params) -> None, raises DegeneracyError
    kind: str = "congruence"  # or "identity"
    free: bool = field(init=False, default=False)

    def __post_init__(self):
        object.__setattr__(self, "free", bool(self.slots))

    def check_n(self, n):
        if not isinstance(n, int) or n < 1 or n % 2 == 0:
            raise ApplicabilityError(f"{self.id}: n must be an odd positive integer, got {n}")
        if not self.applicability(n):
            raise ApplicabilityError(f"{self.id}: requires {self.applicability_text}, got n = {n}")

    def check_params(self, n, params):
        names = {s.name for s in self.slots}
        if set(params) != names:
            raise ValueError(f"{self.id}: expected parameters {sorted(names)}, got {sorted(params)}")
        m = (n - 1) // 2
        for s in self.slots:
            v = params[s.name]
            if s.kind == "index":
                if not isinstance(v, int) or not 0 <= v <= m:
                    raise DegeneracyError(f"{self.id}: index {s.name} must lie in [0, {m}]")
            elif not s.predicate(v):
                raise DegeneracyError(f"{self.id}: inadmissible value {s.name} = {v}")
        if self.param_check:
            self.param_check(params)

    def truncation(self, n, m_mode):
        if m_mode not in self.m_modes:
            raise ApplicabilityError(f"{self.id}: m_mode {m_mode!r} not supported")
        return (n - 1) // 2 if m_mode == "half" else n - 1

    def modulus(self, n, params, phi_exponent=None):
        e = self.phi_exponent if phi_exponent is None else phi_exponent
        extras = list(self.extras(n, params)) if self.extras else []
        if self.shape == "bracket":
            return assemble_modulus(n, e, extras)
        labels = tuple(lab for lab, _ in extras)
        polys = tuple(f for _, f in extras)
        cyc = ((n, e),) if self.shape == "phi" and n > 1 and e > 0 else ()
        return FactoredModulus(cyc, polys, labels)


_REGISTRY = {}


def register(spec):
    if spec.id in _REGISTRY:
        raise ValueError(f"duplicate statement id {spec.id}")
    _REGISTRY[spec.id] = spec
    return spec


def get_statement(sid):
    try:
        return _REGISTRY[sid]
    except KeyError:
        raise UnknownStatementError(sid) from None


def statement_ids():
    return sorted(_REGISTRY)


def _prepare(sid, n, m_mode, params):
    spec = get_statement(sid)
    spec.check_n(n)
    params = dict(params or {})
    spec.check_params(n, params)
    return spec, spec.truncation(n, m_mode), params


def statement_lhs(sid, n, m_mode="half", params=None):
    spec, M, params = _prepare(sid, n, m_mode, params)
    return spec.lhs_builder(n, M, params)


def statement_rhs(sid, n, m_mode="half", params=None):
    spec, M, params = _prepare(sid, n, m_mode, params)
    return spec.rhs_builder(n, M, params)


def statement_modulus(sid, n, params=None, phi_exponent=None):
    spec = get_statement(sid)
    spec.check_n(n)
    return spec.modulus(n, dict(params or {}), phi_exponent)


# -- shared pieces -----------------------------------------------------------

def _mono(x):
    """A QMonomial as a RatFunc."""
    x = QMonomial.of(x)
    return qpow(x.qexp) * x.coef


def _qint(n):
    return RatFunc._reduced(Poly._make([1] * n), Poly([1]))


def _m(n):
    return (n - 1) // 2


def _lift(x):
    return QMonomial.of(x)


Q1 = q(1)
Q2 = q(2)
Q4 = q(4)


def _qint_sum(pochs, base=Q1, quad=0, weighted=True):
    return HyperSum(pochs, base=base, quad=quad, qints=((4, 1, 1),) if weighted else ())


def _ratio_34(n):
    """(q^3; q^4)_m / (q^5; q^4)_m."""
    m = _m(n)
    return qproduct([(q(3), 4, m, 1), (q(5), 4, m, -1)])


def _pair_extras(n, params):
    a = params["a"]
    return [(binomial_label(a, n), Poly.binomial(a, n)),
            (binomial_label(a, n, reverse=True), a - Poly.monomial(1, n))]


def _b_extra(n, params):
    b = params["b"]
    return [(binomial_label(b, n, reverse=True), b - Poly.monomial(1, n))]


def _all_extras(n, params):
    return _pair_extras(n, params) + _b_extra(n, params)


def _distinct_ab(params):
    a, b = as_rational(params["a"]), as_rational(params["b"])
    if a == b or a * b == 1:
        raise DegeneracyError("a and b must satisfy a != b and ab != 1")


def _n3mod4(n):
    return n % 4 == 3


# -- the main theorem and its specializations ------------------------------

def _thm_lhs(c, d):
    c, d = _lift(c), _lift(d)
    pochs = [P(Q1, 2, 4), P(c * Q1, 2, 1), P(d * Q1, 2, 1),
             P(Q2, 2, -4), P(Q2 / c, 2, -1), P(Q2 / d, 2, -1)]
    return _qint_sum(pochs, base=Q1 / (c * d))


def _thm_inner(c, d):
    c, d = _lift(c), _lift(d)
    pochs = [P(Q1, 2, 3), P(Q1 / (c * d), 2, 1), P(Q2, 2, -2), P(Q2 / c, 2, -1), P(Q2 / d, 2, -1)]
    return HyperSum(pochs, base=Q2)


register(StatementSpec(
    "thm_1_1",
    "sum [4k+1] (q;q^2)_k^4 (cq,dq;q^2)_k / ((q^2;q^2)_k^4 (q^2/c,q^2/d;q^2)_k) (q/cd)^k"
    " == W(n) sum_{k<=(n-1)/2} (q;q^2)_k^3 (q/cd;q^2)_k / ((q^2;q^2)_k^2 (q^2/c,q^2/d;q^2)_k) q^2k"
    " mod [n] Phi_n^3",
    lambda n, M, p: hyper_sum(_thm_lhs(p["c"], p["d"]), M),
    lambda n, M, p: bracket_weight(n) * hyper_sum(_thm_inner(p["c"], p["d"]), _m(n)),
    slots=(ParamSlot("c"), ParamSlot("d")),
    phi_exponent=3,
))


def _corollary(sid, lhs_spec, rhs_spec, summary):
    register(StatementSpec(
        sid, summary,
        lambda n, M, p: hyper_sum(lhs_spec, M),
        lambda n, M, p: bracket_weight(n) * hyper_sum(rhs_spec, _m(n)),
        phi_exponent=3,
    ))


_corollary(
    "cor_2_2",
    _qint_sum([P(Q1, 2, 6), P(Q2, 2, -6)]),
    HyperSum([P(Q1, 2, 4), P(Q2, 2, -4)], base=Q2),
    "c = d = 1: sum [4k+1] (q;q^2)^6/(q^2;q^2)^6 q^k == W(n) sum (q;q^2)^4/(q^2;q^2)^4 q^2k",
)
_corollary(
    "cor_2_3",
    _qint_sum([P(Q1, 2, 2), P(Q2, 4, 2), P(Q2, 2, -2), P(Q4, 4, -2)]),
    HyperSum([P(Q1, 2, 4), P(Q4, 4, -2)], base=Q2),
    "c = d = -1: sum [4k+1] (q;q^2)^2 (q^2;q^4)^2/((q^2;q^2)^2 (q^4;q^4)^2) q^k"
    " == W(n) sum (q;q^2)^4/(q^4;q^4)^2 q^2k",
)
_COR_A = [P(Q1, 2, 3), P(Q2, 4, 1), P(Q2, 2, -3), P(Q4, 4, -1)]
_COR_A_RHS = [P(Q1, 2, 3), P(Q2, 2, -1), P(Q4, 4, -1)]
_corollary(
    "cor_2_4",
    _qint_sum(_COR_A, base=Q2, quad=2),
    HyperSum(_COR_A_RHS, base=Q2),
    "c = -1, d -> oo: sum [4k+1] (q;q^2)^3 (q^2;q^4)/((q^2;q^2)^3 (q^4;q^4)) q^(k^2+k)"
    " == W(n) sum (q;q^2)^3/((q^2;q^2)(q^4;q^4)) q^2k",
)
_corollary(
    "cor_2_5",
    _qint_sum(_COR_A, base=q(-1), quad=-2),
    HyperSum(_COR_A_RHS, base=q(1, -1)),
    "c = -1, d -> 0: sum [4k+1] (q;q^2)^3 (q^2;q^4)/((q^2;q^2)^3 (q^4;q^4)) q^(-k^2)"
    " == W(n) sum (q;q^2)^3/((q^2;q^2)(q^4;q^4)) (-q)^k",
)
_corollary(
    "cor_2_6",
    _qint_sum([P(Q1, 2, 4), P(Q2, 2, -4)], base=q(3), quad=4),
    HyperSum([P(Q1, 2, 3), P(Q2, 2, -2)], base=Q2),
    "c, d -> oo: sum [4k+1] (q;q^2)^4/(q^2;q^2)^4 q^(2k^2+k) == W(n) sum (q;q^2)^3/(q^2;q^2)^2 q^2k",
)
_corollary(
    "cor_2_7",
    _qint_sum([P(Q1, 2, 4), P(Q2, 2, -4)], base=q(-3), quad=-4),
    HyperSum([P(Q1, 2, 3), P(Q2, 2, -2)], base=q(-1, -1), quad=-2),
    "c, d -> 0: sum [4k+1] (q;q^2)^4/(q^2;q^2)^4 q^(-2k^2-k)"
    " == W(n) sum (q;q^2)^3/(q^2;q^2)^2 (-q)^(-k^2)",
)
_corollary(
    "cor_2_8",
    _qint_sum([P(Q1, 2, 4), P(q(-1), 2, 2), P(Q2, 2, -4), P(Q4, 2, -2)], base=q(5)),
    HyperSum([P(Q1, 2, 3), P(q(5), 2, 1), P(Q2, 2, -2), P(Q4, 2, -2)], base=Q2),
    "c = d = q^-2: sum [4k+1] (q;q^2)^4 (q^-1;q^2)^2/((q^2;q^2)^4 (q^4;q^2)^2) q^5k"
    " == W(n) sum (q;q^2)^3 (q^5;q^2)/((q^2;q^2)^2 (q^4;q^2)^2) q^2k",
)
_corollary(
    "cor_2_9",
    _qint_sum([P(Q1, 2, 5), P(q(-1), 2, 1), P(Q2, 2, -5), P(Q4, 2, -1)], base=q(3)),
    HyperSum([P(Q1, 2, 3), P(q(3), 2, 1), P(Q2, 2, -3), P(Q4, 2, -1)], base=Q2),
    "c = q^-2, d = 1: sum [4k+1] (q;q^2)^5 (q^-1;q^2)/((q^2;q^2)^5 (q^4;q^2)) q^3k"
    " == W(n) sum (q;q^2)^3 (q^3;q^2)/((q^2;q^2)^3 (q^4;q^2)) q^2k",
)


# -- the alternating sum and its chain -------------------------------------

_ALT = _qint_sum([P(Q1, 2, 4), P(Q2, 4, 1), P(Q2, 2, -4), P(Q4, 4, -1)], base=q(1, -1))
_ALT_SUMMARY = "sum (-1)^k [4k+1] (q;q^2)^4 (q^2;q^4)/((q^2;q^2)^4 (q^4;q^4)) q^k"
_QUAD_HALF = HyperSum([P(Q1, 2, 2), P(Q2, 4, 1), P(Q2, 2, -2), P(Q4, 4, -1)], base=Q2)
_QUAD_HALF_SUMMARY = "sum_{k<=(n-1)/2} (q;q^2)^2 (q^2;q^4)/((q^2;q^2)^2 (q^4;q^4)) q^2k"


def _alt_lhs(n, M, p):
    return hyper_sum(_ALT, M)


def _bracket_sq_ratio(n):
    qi = _qint(n)
    return qi * qi * _ratio_34(n)


register(StatementSpec(
    "guo_conj",
    _ALT_SUMMARY + " == [n]^2 q^((1+n)/2) (q^3;q^4)_m/(q^5;q^4)_m mod [n] Phi_n^3",
    _alt_lhs,
    lambda n, M, p: _bracket_sq_ratio(n) * qpow((1 + n) // 2),
    applicability=_n3mod4, applicability_text="n = 3 mod 4",
    phi_exponent=3,
))
register(StatementSpec(
    "conj_4_1",
    _ALT_SUMMARY + " == [n]^2 q^((1-n)/2) (q^3;q^4)_m/(q^5;q^4)_m mod [n] Phi_n^4",
    _alt_lhs,
    lambda n, M, p: _bracket_sq_ratio(n) * qpow((1 - n) // 2),
    applicability=_n3mod4, applicability_text="n = 3 mod 4",
    phi_exponent=4,
))
register(StatementSpec(
    "guo_a",
    _QUAD_HALF_SUMMARY + " == [n] (q^3;q^4)_m/(q^5;q^4)_m mod Phi_n^3",
    lambda n, M, p: hyper_sum(_QUAD_HALF, _m(n)),
    lambda n, M, p: _qint(n) * _ratio_34(n),
    applicability=_n3mod4, applicability_text="n = 3 mod 4",
    m_modes=frozenset({"half"}), shape="phi", phi_exponent=3,
))


def _conj_a_rhs(n, M=None, p=None):
    return _qint(n) * bracket_weight(n) * _ratio_34(n)


register(StatementSpec(
    "guo_conj_a",
    _ALT_SUMMARY + " == [n]^2 q^((1-n)/2) {1 + [n]^2 (n^2-1)(1-q)^2/24} (q^3;q^4)_m/(q^5;q^4)_m"
    " mod [n] Phi_n^3",
    _alt_lhs,
    _conj_a_rhs,
    applicability=_n3mod4, applicability_text="n = 3 mod 4",
    phi_exponent=3,
))
register(StatementSpec(
    "routine_b",
    "[n]^2 q^((1-n)/2) {1 + [n]^2 (n^2-1)(1-q)^2/24} (q^3;q^4)_m/(q^5;q^4)_m"
    " == [n]^2 q^((1+n)/2) (q^3;q^4)_m/(q^5;q^4)_m mod [n] Phi_n^3",
    _conj_a_rhs,
    lambda n, M, p: _bracket_sq_ratio(n) * qpow((1 + n) // 2),
    applicability=_n3mod4, applicability_text="n = 3 mod 4",
    m_modes=frozenset({"half"}), phi_exponent=3,
))


# -- earlier results -----------------------------------------------------------

def _guo_b_lhs(a, c):
    a, c = _lift(a), _lift(c)
    pochs = [P(a * Q1, 2, 1), P(Q1 / a, 2, 1), P(Q1 / c, 2, 1), P(Q1, 2, 1),
             P(Q2 / a, 2, -1), P(a * Q2, 2, -1), P(c * Q2, 2, -1), P(Q2, 2, -1)]
    return _qint_sum(pochs, base=c)


register(StatementSpec(
    "guo_b",
    "sum [4k+1] (aq,q/a,q/c,q;q^2)_k/(q^2/a,aq^2,cq^2,q^2;q^2)_k c^k"
    " == [n] (c/q)^m (q^2/c;q^2)_m/(cq^2;q^2)_m mod [n](1-aq^n)(a-q^n)",
    lambda n, M, p: hyper_sum(_guo_b_lhs(p["a"], p["c"]), M),
    lambda n, M, p: _qint(n) * b_ratio(as_rational(p["c"]), n),
    slots=(ParamSlot("a"), ParamSlot("c")),
    extras=_pair_extras,
))
_SIX = _qint_sum([P(Q1, 2, 4), P(Q2, 2, -4)], base=q(0))
register(StatementSpec(
    "guo_c",
    "sum [4k+1] (q;q^2)^4/(q^2;q^2)^4 == W(n) mod [n] Phi_n^3",
    lambda n, M, p: hyper_sum(_SIX, M),
    lambda n, M, p: bracket_weight(n),
    phi_exponent=3,
))
register(StatementSpec(
    "guo_d",
    "sum [4k+1] (q;q^2)^6/(q^2;q^2)^6 q^k == [n] q^((1-n)/2) sum (q;q^2)^4/(q^2;q^2)^4 q^2k"
    " mod [n] Phi_n^2",
    lambda n, M, p: hyper_sum(_qint_sum([P(Q1, 2, 6), P(Q2, 2, -6)]), M),
    lambda n, M, p: _qint(n) * qpow((1 - n) // 2)
    * hyper_sum(HyperSum([P(Q1, 2, 4), P(Q2, 2, -4)], base=Q2), _m(n)),
    phi_exponent=2,
))
register(StatementSpec(
    "guo_e",
    "sum (-1)^k [4k+1] (q;q^2)^5/(q^2;q^2)^5 q^(k^2+k)"
    " == [n] q^((1-n)/2) sum (q;q^2)^3/(q^2;q^2)^3 q^2k mod [n] Phi_n^2",
    lambda n, M, p: hyper_sum(_qint_sum([P(Q1, 2, 5), P(Q2, 2, -5)], base=q(2, -1), quad=2), M),
    lambda n, M, p: _qint(n) * qpow((1 - n) // 2)
    * hyper_sum(HyperSum([P(Q1, 2, 3), P(Q2, 2, -3)], base=Q2), _m(n)),
    phi_exponent=2,
))


def _guo_f_rhs(n, M, p):
    if n % 4 == 3:
        return ZERO_RF
    t = (n - 1) // 4
    return _qint(n) * qproduct([(Q2, 4, t, 2), (Q4, 4, t, -2)])


register(StatementSpec(
    "guo_f",
    _ALT_SUMMARY + " == [n] (q^2;q^4)_t^2/(q^4;q^4)_t^2 (t = (n-1)/4) if n = 1 mod 4,"
    " 0 if n = 3 mod 4; mod [n] Phi_n^2",
    _alt_lhs,
    _guo_f_rhs,
    phi_exponent=2,
))


def _guozu2_rhs(n, M, p):
    if n % 4 == 3:
        return ZERO_RF
    t = (n - 1) // 4
    return qproduct([(Q2, 4, t, 2), (Q4, 4, t, -2)], qexp=(n - 1) // 2)


register(StatementSpec(
    "guozu2",
    _QUAD_HALF_SUMMARY + " == (q^2;q^4)_t^2/(q^4;q^4)_t^2 q^((n-1)/2) if n = 1 mod 4,"
    " 0 if n = 3 mod 4; mod Phi_n^2",
    lambda n, M, p: hyper_sum(_QUAD_HALF, _m(n)),
    _guozu2_rhs,
    m_modes=frozenset({"half"}), shape="phi", phi_exponent=2,
))


# -- vanishing lemma for [n]^2 (q^3;q^4)/(q^5;q^4) ---------------------------

register(StatementSpec(
    "lem_2_1",
    "[n]^2 (q^3;q^4)_m/(q^5;q^4)_m == 0 mod [n]",
    lambda n, M, p: _bracket_sq_ratio(n),
    lambda n, M, p: ZERO_RF,
    m_modes=frozenset({"half"}),
))


def _lem_2_1_phi(n):
    return SeriesSpec(
        (q(1 - n), q(1 + n), Q1, q(1, -1)),
        (q(2 + n), q(2 - n), q(2, -1)),
        base_step=2, argument=Q2, truncation=_m(n),
    )


register(StatementSpec(
    "lem_2_1_phi",
    "4phi3[q^(1-n), q^(1+n), q, -q; q^(2+n), q^(2-n), -q^2; q^2, q^2] = [n] (q^3;q^4)_m/(q^5;q^4)_m",
    lambda n, M, p: phi_series(_lem_2_1_phi(n)),
    lambda n, M, p: _qint(n) * _ratio_34(n),
    m_modes=frozenset({"half"}), kind="identity",
))
register(StatementSpec(
    "lem_2_1_wei_ab",
    "[n] (q^(1-n),q^(1+n);q^2)_k/(q^(2-n),q^(2+n);q^2)_k == 0 mod [n], 0 <= k <= (n-1)/2",
    lambda n, M, p: _qint(n) * qproduct([(q(1 - n), 2, p["k"], 1), (q(1 + n), 2, p["k"], 1),
                                         (q(2 - n), 2, p["k"], -1), (q(2 + n), 2, p["k"], -1)]),
    lambda n, M, p: ZERO_RF,
    slots=(ParamSlot("k", kind="index"),),
    m_modes=frozenset({"half"}),
))


# -- the four-parameter family ---------------------------------------------

def _lem_3_1_side(x, k, n, left):
    x = _lift(x)
    m = _m(n)
    if left:
        return qproduct([(x * Q1, 2, m - k, 1), (Q2 / x, 2, m - k, -1)])
    sign = QMonomial(-1) * x
    return (_mono(sign ** (m - 2 * k)) * qpow((n - 1) ** 2 // 4 + k)
            * qproduct([(x * Q1, 2, k, 1), (Q2 / x, 2, k, -1)]))


register(StatementSpec(
    "lem_3_1",
    "(xq;q^2)_(m-k)/(q^2/x;q^2)_(m-k) == (-x)^(m-2k) (xq;q^2)_k/(q^2/x;q^2)_k q^((n-1)^2/4+k)"
    " mod Phi_n",
    lambda n, M, p: _lem_3_1_side(p["x"], p["k"], n, True),
    lambda n, M, p: _lem_3_1_side(p["x"], p["k"], n, False),
    slots=(ParamSlot("x"), ParamSlot("k", kind="index")),
    m_modes=frozenset({"half"}), shape="phi", phi_exponent=1,
))


def _s4(a, b, c, d):
    a, b, c, d = (_lift(v) for v in (a, b, c, d))
    pochs = [P(a * Q1, 2, 1), P(Q1 / a, 2, 1), P(Q1 / b, 2, 1), P(c * Q1, 2, 1), P(d * Q1, 2, 1),
             P(Q1, 2, 1), P(Q2 / a, 2, -1), P(a * Q2, 2, -1), P(b * Q2, 2, -1), P(Q2 / c, 2, -1),
             P(Q2 / d, 2, -1), P(Q2, 2, -1)]
    return _qint_sum(pochs, base=b * Q1 / (c * d))


def _inner4(a, b, c, d, n):
    a, b, c, d = (_lift(v) for v in (a, b, c, d))
    pochs = [P(a * Q1, 2, 1), P(Q1 / a, 2, 1), P(Q1 / b, 2, 1), P(Q1 / (c * d), 2, 1),
             P(Q2, 2, -1), P(Q2 / b, 2, -1), P(Q2 / c, 2, -1), P(Q2 / d, 2, -1)]
    return hyper_sum(HyperSum(pochs, base=Q2), _m(n))


def _s4_lhs(n, M, p):
    return hyper_sum(_s4(p["a"], p["b"], p["c"], p["d"]), M)


def _inner4_p(n, p):
    return _inner4(p["a"], p["b"], p["c"], p["d"], n)


_ABCD = (ParamSlot("a"), ParamSlot("b"), ParamSlot("c"), ParamSlot("d"))
_S4_SUMMARY = ("S(a,b,c,d) = sum [4k+1] (aq,q/a,q/b,cq,dq,q;q^2)_k"
               "/(q^2/a,aq^2,bq^2,q^2/c,q^2/d,q^2;q^2)_k (bq/cd)^k")
_INNER4 = "sum_{k<=m} (aq,q/a,q/b,q/cd;q^2)_k/(q^2,q^2/b,q^2/c,q^2/d;q^2)_k q^2k"

register(StatementSpec(
    "lem_3_2", _S4_SUMMARY + " == 0 mod Phi_n",
    _s4_lhs, lambda n, M, p: ZERO_RF,
    slots=_ABCD, shape="phi", phi_exponent=1,
))
register(StatementSpec(
    "lem_3_3", _S4_SUMMARY + " == 0 mod [n]",
    _s4_lhs, lambda n, M, p: ZERO_RF,
    slots=_ABCD,
))
register(StatementSpec(
    "thm_3_4",
    _S4_SUMMARY + " == [n] (b/q)^m (q^2/b;q^2)_m/(bq^2;q^2)_m " + _INNER4
    + " mod Phi_n (1-aq^n)(a-q^n)",
    _s4_lhs,
    lambda n, M, p: _qint(n) * b_ratio(as_rational(p["b"]), n) * _inner4_p(n, p),
    slots=_ABCD, shape="phi", phi_exponent=1, extras=_pair_extras,
))
register(StatementSpec(
    "lem_4_1",
    _S4_SUMMARY + " == [n] (q;q^2)_m^2/(aq^2,q^2/a;q^2)_m " + _INNER4 + " mod (b-q^n)",
    _s4_lhs,
    lambda n, M, p: _qint(n) * dual_ratio(as_rational(p["a"]), n) * _inner4_p(n, p),
    slots=_ABCD, shape="extra", extras=_b_extra,
))
register(StatementSpec(
    "eq_par",
    _S4_SUMMARY + " == [n] R(a,b,n) " + _INNER4 + " mod Phi_n (1-aq^n)(a-q^n)(b-q^n)",
    _s4_lhs,
    lambda n, M, p: _qint(n) * r_factor(p["a"], p["b"], n) * _inner4_p(n, p),
    slots=_ABCD, shape="phi", phi_exponent=1, extras=_all_extras, param_check=_distinct_ab,
))


def _three(a, c, d):
    a, c, d = _lift(a), _lift(c), _lift(d)
    pochs = [P(a * Q1, 2, 1), P(Q1 / a, 2, 1), P(c * Q1, 2, 1), P(d * Q1, 2, 1), P(Q1, 2, 2),
             P(Q2 / a, 2, -1), P(a * Q2, 2, -1), P(Q2 / c, 2, -1), P(Q2 / d, 2, -1), P(Q2, 2, -2)]
    return _qint_sum(pochs, base=Q1 / (c * d))


def _inner3(a, c, d, n):
    a, c, d = _lift(a), _lift(c), _lift(d)
    pochs = [P(a * Q1, 2, 1), P(Q1 / a, 2, 1), P(Q1 / (c * d), 2, 1), P(Q1, 2, 1),
             P(Q2 / c, 2, -1), P(Q2 / d, 2, -1), P(Q2, 2, -2)]
    return hyper_sum(HyperSum(pochs, base=Q2), _m(n))


_ACD = (ParamSlot("a"), ParamSlot("c"), ParamSlot("d"))
_THREE_SUMMARY = ("sum [4k+1] (aq,q/a,cq,dq;q^2)_k (q;q^2)_k^2"
                  "/((q^2/a,aq^2,q^2/c,q^2/d;q^2)_k (q^2;q^2)_k^2) (q/cd)^k")
_INNER3 = "sum_{k<=m} (aq,q/a,q/cd,q;q^2)_k/((q^2/c,q^2/d;q^2)_k (q^2;q^2)_k^2) q^2k"

register(StatementSpec(
    "thm_4_2",
    _THREE_SUMMARY + " == [n] Omega(a,n) " + _INNER3 + " mod Phi_n^2 (1-aq^n)(a-q^n)",
    lambda n, M, p: hyper_sum(_three(p["a"], p["c"], p["d"]), M),
    lambda n, M, p: _qint(n) * omega_factor(p["a"], n) * _inner3(p["a"], p["c"], p["d"], n),
    slots=_ACD, shape="phi", phi_exponent=2, extras=_pair_extras,
))
register(StatementSpec(
    "formula_a",
    _THREE_SUMMARY + " == [n] S(a,n) " + _INNER3 + " mod Phi_n^2 (1-aq^n)(a-q^n)",
    lambda n, M, p: hyper_sum(_three(p["a"], p["c"], p["d"]), M),
    lambda n, M, p: _qint(n) * s_factor(p["a"], n) * _inner3(p["a"], p["c"], p["d"], n),
    slots=_ACD, shape="phi", phi_exponent=2, extras=_pair_extras,
))
register(StatementSpec(
    "formula_b",
    "[n] S(a,n) == [n] Omega(a,n) mod Phi_n^2 (1-aq^n)(a-q^n)",
    lambda n, M, p: _qint(n) * s_factor(p["a"], n),
    lambda n, M, p: _qint(n) * omega_factor(p["a"], n),
    slots=(ParamSlot("a"),), m_modes=frozenset({"half"}),
    shape="phi", phi_exponent=2, extras=_pair_extras,
))


def _preprint_rhs(a, n, qexp):
    a = as_rational(a)
    m = _m(n)
    return qpow(qexp) * ((-1) ** m * (1 - a ** n) / ((1 - a) * a ** m))


register(StatementSpec(
    "guopreprint_1",
    "(aq^2,q^2/a;q^2)_m == (-1)^m (1-a^n) q^(-(n-1)^2/4)/((1-a) a^m) mod Phi_n",
    lambda n, M, p: qproduct([(q(2, p["a"]), 2, _m(n), 1), (q(2, 1 / as_rational(p["a"])), 2, _m(n), 1)]),
    lambda n, M, p: _preprint_rhs(p["a"], n, -((n - 1) ** 2) // 4),
    slots=(ParamSlot("a"),), m_modes=frozenset({"half"}), shape="phi", phi_exponent=1,
))
register(StatementSpec(
    "guopreprint_2",
    "(aq,q/a;q^2)_m == (-1)^m (1-a^n) q^((1-n^2)/4)/((1-a) a^m) mod Phi_n",
    lambda n, M, p: qproduct([(q(1, p["a"]), 2, _m(n), 1), (q(1, 1 / as_rational(p["a"])), 2, _m(n), 1)]),
    lambda n, M, p: _preprint_rhs(p["a"], n, (1 - n * n) // 4),
    slots=(ParamSlot("a"),), m_modes=frozenset({"half"}), shape="phi", phi_exponent=1,
))
register(StatementSpec(
    "guopreprint_ratio",
    "(q;q^2)_m^2/(aq^2,q^2/a;q^2)_m == n (1-a) a^m/((1-a^n) q^m) mod Phi_n",
    lambda n, M, p: dual_ratio(as_rational(p["a"]), n),
    lambda n, M, p: qpow(-_m(n)) * (n * (1 - as_rational(p["a"])) * as_rational(p["a"]) ** _m(n)
                                    / (1 - as_rational(p["a"]) ** n)),
    slots=(ParamSlot("a"),), m_modes=frozenset({"half"}), shape="phi", phi_exponent=1,
))

__all__ = [
    "ParamSlot", "StatementSpec", "admissible", "get_statement", "statement_ids",
    "statement_lhs", "statement_rhs", "statement_modulus", "register", "ZERO_RF",
]
