from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from qsupercong.errors import DegeneracyError
from qsupercong.exactalgebra import LaurentPoly, Poly, RatFunc, poly_gcd, poly_product
from qsupercong.qobjects import (
    FactoredModulus,
    QMonomial,
    assemble_modulus,
    cyclotomic,
    divisors,
    mobius,
    q,
    q_binomial,
    q_integer,
    q_shifted_factorial,
)

Q = Poly([0, 1])
ONE = Poly([1])


def test_q_integer():
    assert q_integer(1) == ONE
    assert q_integer(3) == Poly([1, 1, 1])
    assert q_integer(5) == Poly([1] * 5)
    with pytest.raises(ValueError):
        q_integer(0)


def test_mobius():
    assert [mobius(n) for n in (1, 4, 6)] == [1, 0, 1]
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_cyclotomic_examples():
    assert cyclotomic(1) == Q - 1
    assert cyclotomic(2) == Q + 1
    assert cyclotomic(6) == Q ** 2 - Q + 1


@pytest.mark.parametrize("n", range(1, 61))
def test_cyclotomic_matches_division_oracle(n):
    assert list(cyclotomic(n).coefficients) == oracle.cyclotomic(n)


@pytest.mark.parametrize("n", range(1, 61))
def test_cyclotomic_product_law(n):
    assert poly_product(cyclotomic(d) for d in divisors(n)) == Q ** n - 1


@pytest.mark.parametrize("n", range(1, 46, 2))
def test_q_integer_is_product_of_cyclotomics(n):
    assert poly_product(cyclotomic(d) for d in divisors(n) if d > 1) == q_integer(n)


def test_cyclotomics_pairwise_coprime():
    for m in range(1, 31):
        for n in range(m + 1, 31):
            assert poly_gcd(cyclotomic(m), cyclotomic(n)) == ONE


def test_q_shifted_factorial_examples():
    assert q_shifted_factorial(q(5, 3), 2, 0) == LaurentPoly(ONE)
    assert q_shifted_factorial(q(1), 2, 2) == LaurentPoly((1 - Q) * (1 - Q ** 3))
    lhs = q_shifted_factorial(q(-1), 2, 2)
    assert lhs == LaurentPoly(Q - 1, -1) * LaurentPoly(1 - Q)


coefs = st.sampled_from([F(2), F(-3), F(1, 2), F(5, 3), F(-1, 4), F(1), F(-1)])


@given(coefs, st.integers(-6, 6), st.integers(1, 3), st.integers(0, 20))
def test_q_shifted_factorial_recursion(c, e, step, k):
    x = QMonomial(c, e)
    nxt = q_shifted_factorial(x, step, k + 1)
    cur = q_shifted_factorial(x, step, k)
    assert nxt == cur * (1 - LaurentPoly.monomial(c, e + step * k))


@given(coefs, st.integers(-4, 4), st.integers(1, 3), st.integers(0, 8))
def test_q_shifted_factorial_pointwise(c, e, step, k):
    qv = F(3, 2)
    assert q_shifted_factorial(QMonomial(c, e), step, k)(qv) == oracle.poch(c * qv ** e, qv, k, step)


def test_q_binomial():
    assert q_binomial(2, 1) == 1 + Q
    assert q_binomial(7, 0) == ONE
    assert q_binomial(4, 2) == Poly([1, 1, 2, 1, 1])
    with pytest.raises(ValueError):
        q_binomial(2, 3)


@pytest.mark.parametrize("t", range(31))
def test_central_binomial_ratio(t):
    # (q;q^2)_t / (q^2;q^2)_t = [2t choose t] / (-q;q)_t^2
    lhs = RatFunc(q_shifted_factorial(q(1), 2, t).to_poly(), q_shifted_factorial(q(2), 2, t).to_poly())
    mq = q_shifted_factorial(QMonomial(-1, 1), 1, t).to_poly()
    assert lhs == RatFunc(q_binomial(2 * t, t), mq * mq)


def test_assemble_modulus_examples():
    assert assemble_modulus(3, 3).cyclotomic_factors == ((3, 4),)
    assert assemble_modulus(9, 3).cyclotomic_factors == ((3, 1), (9, 4))
    assert assemble_modulus(15, 3).cyclotomic_factors == ((3, 1), (5, 1), (15, 4))
    assert assemble_modulus(1, 3).cyclotomic_factors == ()


def test_assemble_modulus_extras_and_errors():
    m = assemble_modulus(5, 1, [Poly.binomial(2, 5)])
    assert len(m.extra_factors) == 1
    with pytest.raises(DegeneracyError):
        assemble_modulus(5, 1, [1 - Q ** 5])
    with pytest.raises(ValueError):
        assemble_modulus(4, 1)
    with pytest.raises(ValueError):
        FactoredModulus(((3, 1), (3, 2)))
    with pytest.raises(ValueError):
        FactoredModulus(((3, 0),))
    with pytest.raises(DegeneracyError):
        FactoredModulus((), (1 - 2 * Q ** 3, 2 - 4 * Q ** 3))


def test_qmonomial_algebra():
    x = QMonomial(F(2), 3)
    assert x * q(-1) == QMonomial(2, 2)
    assert q(2) / x == QMonomial(F(1, 2), -1)
    assert x ** 2 == QMonomial(4, 6)
    assert QMonomial.of(5) == QMonomial(5, 0)
    assert QMonomial(0, 4).coef == 0
