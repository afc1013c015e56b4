from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import oracle
from qsupercong.errors import DegeneracyError
from qsupercong.exactalgebra import Poly, RatFunc
from qsupercong.hypersums import (
    HyperSum,
    Pochhammer,
    SeriesSpec,
    bracket_weight,
    hyper_sum,
    lhopital_check,
    omega_factor,
    phi_series,
    qproduct,
    r_factor,
    s_factor,
)
from qsupercong.hypersums.identities import chu_vandermonde, run_identity, watson, whipple
from qsupercong.qobjects import QMonomial, q

QV = (F(3), F(-2, 7), F(5, 3))
coefs = st.sampled_from([F(1), F(-1), F(2), F(1, 2), F(-3), F(5, 3), F(-2, 5)])


def mono(c, e):
    return QMonomial(c, e)


def at(f, x):
    return f.num(x) / f.den(x)


def naive_hypersum(spec, M, x):
    total = F(0)
    for k in range(M + 1):
        t = spec.base.coef ** k * x ** (spec.base.qexp * k + spec.quad * k * (k - 1) // 2)
        for p in spec.pochhammers:
            t *= oracle.poch(p.x.coef * x ** p.x.qexp, x, k, p.step) ** p.power
        for a, b, pw in spec.qints:
            t *= oracle.qint(a * k + b, x) ** pw
        total += t
    return total


@st.composite
def hypersums(draw):
    pochs = []
    for _ in range(draw(st.integers(0, 4))):
        c = draw(coefs)
        pochs.append(Pochhammer(mono(c, draw(st.integers(-3, 4))), draw(st.integers(1, 3)),
                                draw(st.sampled_from([1, 2, -1, -2]))))
    qints = tuple((a, 1, draw(st.sampled_from([1, -1]))) for a in draw(st.lists(st.sampled_from([2, 4]), max_size=1)))
    base = mono(draw(coefs), draw(st.integers(-2, 3)))
    return HyperSum(pochs, base, draw(st.integers(-4, 4)), qints)


@given(hypersums(), st.integers(0, 6))
def test_hyper_sum_matches_termwise_oracle(spec, M):
    try:
        f = hyper_sum(spec, M)
    except DegeneracyError:
        return
    for x in QV:
        try:
            expected = naive_hypersum(spec, M, x)
        except ZeroDivisionError:
            continue
        if not f.den(x):
            continue
        assert at(f, x) == expected


def test_hyper_sum_truncates_on_vanishing_numerator():
    # (q^-2; q)_k vanishes from k = 3 on
    spec = HyperSum([Pochhammer(q(-2), 1, 1), Pochhammer(q(1), 1, -1)], q(1))
    assert hyper_sum(spec, 10) == hyper_sum(spec, 2)


def test_hyper_sum_degenerate_denominator():
    spec = HyperSum([Pochhammer(q(-2), 1, -1)], q(1))
    assert hyper_sum(spec, 2)  # fine before the pole
    with pytest.raises(DegeneracyError):
        hyper_sum(spec, 3)


@given(st.lists(st.tuples(coefs, st.integers(-3, 3), st.integers(1, 3), st.integers(0, 5),
                          st.sampled_from([1, -1, 2])), max_size=4), st.integers(-5, 5))
def test_qproduct_pointwise(factors, e):
    try:
        f = qproduct([(mono(c, s), step, k, pw) for c, s, step, k, pw in factors], qexp=e)
    except DegeneracyError:
        return
    x = F(3)
    expected = x ** e
    for c, s, step, k, pw in factors:
        expected *= oracle.poch(c * x ** s, x, k, step) ** pw
    assert at(f, x) == expected


# -- phi_series and the identity oracles ---------------------------------------

def test_phi_series_truncation_zero():
    assert phi_series(SeriesSpec((q(1), mono(3, 0)), (mono(5, 0),), 1, q(1), 0)) == RatFunc(Poly([1]))


def test_chu_vandermonde_example():
    lhs, rhs = chu_vandermonde(2, F(3), F(5))
    assert lhs == rhs
    x = F(3)
    b, c = F(3), F(5)
    assert at(rhs, x) == oracle.poch(c / b, x, 2) / oracle.poch(c, x, 2)


def test_phi_series_matches_gasper_rahman_term():
    # 2phi3 has 1 + s - r = 2, so the term carries ((-1)^k q^C(k,2))^2
    a, b, c, z = F(2), F(-3), F(1, 2), F(5)
    spec = SeriesSpec((mono(a, 1),), (mono(b, 0), mono(c, 2)), 1, mono(z, 0), 4)
    f = phi_series(spec)
    x = F(7, 2)
    expected = sum(
        oracle.poch(a * x, x, k) / (oracle.poch(b, x, k) * oracle.poch(c * x * x, x, k) * oracle.poch(x, x, k))
        * (x ** (k * (k - 1) // 2)) ** 2 * z ** k for k in range(5))
    assert at(f, x) == expected


def test_watson_example():
    lhs, rhs = watson(2, F(2), F(3), F(1, 2), F(5), F(-2))
    assert lhs == rhs


@pytest.mark.parametrize("name", ["q_chu_vandermonde", "whipple", "watson"])
def test_identities_hold(name):
    for n in range(7):
        for params, ok in run_identity(name, n, trials=10, seed=7):
            assert ok, (name, n, params)


def test_whipple_small_direct():
    lhs, rhs = whipple(1, F(3), F(5))
    assert lhs == rhs


# -- weights ------------------------------------------------------------------

def test_omega_examples():
    assert omega_factor(2, 1) == RatFunc(Poly([1]))
    x = F(3)
    expected = (1 / x) * (1 + (1 - 2 * x ** 3) * (2 - x ** 3) / 7)
    assert at(omega_factor(2, 3), x) == expected
    assert omega_factor(3, 5) == omega_factor(F(1, 3), 5)
    with pytest.raises(DegeneracyError):
        omega_factor(1, 3)


@pytest.mark.parametrize("a", [F(2), F(-1, 3), F(5, 2)])
@pytest.mark.parametrize("n", [1, 3, 5, 7])
def test_omega_pointwise(a, n):
    for x in QV:
        assert at(omega_factor(a, n), x) == oracle.omega(a, n, x)


def test_s_factor_at_one():
    assert s_factor(2, 1) == RatFunc(Poly([1]))


def test_bracket_weight_pointwise():
    for n in (1, 3, 5, 9):
        for x in QV:
            assert at(bracket_weight(n), x) == oracle.W(n, x)


def test_r_factor_crt_replay():
    from qsupercong.congruence import check_congruence, crt_weights
    from qsupercong.hypersums.weights import b_ratio, dual_ratio
    from qsupercong.qobjects import FactoredModulus
    a, b, n = F(2), F(3), 3
    r = r_factor(a, b, n)
    e1, e2 = crt_weights(a, b, n)
    assert r == e1 * b_ratio(b, n) + e2 * dual_ratio(a, n)
    pair = FactoredModulus((), (Poly.binomial(a, n), a - Poly.monomial(1, n)))
    bfac = FactoredModulus((), (b - Poly.monomial(1, n),))
    # r agrees with each branch modulo its own factor
    assert check_congruence(r - b_ratio(b, n), pair).passed
    assert check_congruence(r - dual_ratio(a, n), bfac).passed


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9])
@pytest.mark.parametrize("x", [F(2), F(1, 2), F(-2), F(3)])
def test_lhopital(n, x):
    assert lhopital_check(n, x)


def test_lhopital_values():
    # the target side at the documented points
    x = F(2)
    assert oracle.qint(3, x) ** 2 * 8 * (1 - x) ** 2 / 24 == F(49, 3)
    x = F(1, 2)
    assert oracle.qint(5, x) ** 2 * 24 * (1 - x) ** 2 / 24 == F(961, 1024)
    with pytest.raises(DegeneracyError):
        lhopital_check(3, 1)
