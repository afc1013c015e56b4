"""Classical terminating summation and transformation formulas, used as oracles.

Each case builds both sides at truncation n for rational parameters and the
two RatFuncs must agree exactly.
"""

import random
from fractions import Fraction

from ..errors import DegeneracyError
from ..exactalgebra import as_rational
from ..qobjects import QMonomial, q
from .runner import POOL
from .series import SeriesSpec, phi_series
from .terms import qpow, qproduct


def _mono(x):
    return qpow(x.qexp) * x.coef


def chu_vandermonde(n, b, c):
    """2phi1[q^-n, b; c; q, c q^n / b] against (c/b; q)_n / (c; q)_n."""
    b, c = QMonomial.of(b), QMonomial.of(c)
    lhs = phi_series(SeriesSpec((q(-n), b), (c,), 1, c * q(n) / b, n))
    rhs = qproduct([(c / b, 1, n, 1), (c, 1, n, -1)])
    return lhs, rhs


def whipple(n, b, c):
    """Terminating 4phi3[q^-n, q^(1+n), b, -b; c, b^2 q/c, -q; q, q] evaluation."""
    b, c = QMonomial.of(b), QMonomial.of(c)
    minus = QMonomial(-1)
    lhs = phi_series(SeriesSpec((q(-n), q(1 + n), b, minus * b), (c, b * b * q(1) / c, q(1, -1)),
                                1, q(1), n))
    rhs = qpow((n + 1) * n // 2) * qproduct([
        (b * b * q(1 - n) / c, 2, n, 1), (c * q(-n), 2, n, 1),
        (b * b * q(1) / c, 1, n, -1), (c, 1, n, -1),
    ])
    return lhs, rhs


def watson(n, s, b, c, d, e):
    """Terminating 8phi7 -> 4phi3 transformation with a = s^2."""
    s, b, c, d, e = (QMonomial.of(v) for v in (s, b, c, d, e))
    a = s * s
    minus = QMonomial(-1)
    aq = a * q(1)
    upper = (a, q(1) * s, minus * q(1) * s, b, c, d, e, q(-n))
    lower = (s, minus * s, aq / b, aq / c, aq / d, aq / e, a * q(n + 1))
    z = a * a * q(n + 2) / (b * c * d * e)
    lhs = phi_series(SeriesSpec(upper, lower, 1, z, n))
    inner = phi_series(SeriesSpec((aq / (b * c), d, e, q(-n)), (aq / b, aq / c, d * e * q(-n) / a),
                                  1, q(1), n))
    pre = qproduct([(aq, 1, n, 1), (aq / (d * e), 1, n, 1), (aq / d, 1, n, -1), (aq / e, 1, n, -1)])
    return lhs, pre * inner


IDENTITIES = {
    "q_chu_vandermonde": (chu_vandermonde, ("b", "c")),
    "whipple": (whipple, ("b", "c")),
    "watson": (watson, ("s", "b", "c", "d", "e")),
}


def identity_ids():
    return sorted(IDENTITIES)


def check_identity_case(name, n, params):
    """True iff both sides agree; DegeneracyError/ZeroDivisionError mark a bad specialization."""
    fn, slots = IDENTITIES[name]
    lhs, rhs = fn(n, *(params[k] for k in slots))
    return lhs == rhs


def sample_identity_params(name, rng, pool):
    _, slots = IDENTITIES[name]
    return {k: as_rational(rng.choice(pool)) for k in slots}


def run_identity(name, n, trials=10, seed=42, pool=None, max_attempts=50):
    """List of (params, ok) for ``trials`` random admissible specializations."""
    pool = tuple(pool or POOL)
    out = []
    for t in range(trials):
        rng = random.Random(f"{seed}:{name}:{n}:{t}")
        for _ in range(max_attempts):
            params = sample_identity_params(name, rng, pool)
            try:
                ok = check_identity_case(name, n, params)
            except (DegeneracyError, ZeroDivisionError):
                continue
            break
        else:
            raise DegeneracyError(f"{name}: no admissible specialization at n = {n}")
        out.append(({k: Fraction(v) for k, v in params.items()}, ok))
    return out
