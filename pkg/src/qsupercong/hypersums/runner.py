"""Verification driver: parameter sampling, resampling and certify grids."""

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from ..congruence import CongruenceReport, check_congruence, check_identity
from ..errors import DegeneracyError
from .statements import get_statement, statement_lhs, statement_rhs

POOL = tuple(Fraction(v) for v in ("2", "3", "5", "1/2", "3/2", "-2", "-1/3", "5/2", "7/3"))


class ParamSampler:
    """Seeded draws from a fixed pool; each (statement, n, mode, trial) gets its own stream."""

    def __init__(self, seed=42, pool=POOL, max_attempts=50):
        self.seed = seed
        self.pool = tuple(Fraction(v) for v in pool)
        self.max_attempts = max_attempts

    def stream(self, sid, n, m_mode, trial):
        return random.Random(f"{self.seed}:{sid}:{n}:{m_mode}:{trial}")

    def draw(self, spec, n, rng):
        m = (n - 1) // 2
        out = {}
        for slot in spec.slots:
            if slot.kind == "index":
                out[slot.name] = rng.randint(0, m)
            else:
                choices = [v for v in self.pool if slot.predicate(v)]
                out[slot.name] = rng.choice(choices)
        return out


@dataclass
class TrialResult:
    statement: str
    n: int
    m_mode: str
    trial: int
    params: dict
    modulus: str
    report: CongruenceReport
    elapsed: float
    resamples: int = 0
    extra: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.report.passed

    def sort_key(self):
        return (self.statement, self.n, self.m_mode, self.trial)


def evaluate(sid, n, m_mode="half", params=None, phi_exponent=None):
    """Build both sides and decide the statement; returns (report, modulus)."""
    spec = get_statement(sid)
    params = dict(params or {})
    lhs = statement_lhs(sid, n, m_mode, params)
    rhs = statement_rhs(sid, n, m_mode, params)
    if spec.kind == "identity":
        return check_identity(lhs - rhs), None
    modulus = spec.modulus(n, params, phi_exponent)
    return check_congruence(lhs - rhs, modulus), modulus


def _degree_bound(n, m_mode):
    M = (n - 1) // 2 if m_mode == "half" else n - 1
    return 2 * M + n


def certify_grid(spec, n, m_mode):
    """Parameter points exceeding the per-parameter degree bound 2M + n of the difference."""
    D = _degree_bound(n, m_mode)
    axes = []
    i = 0
    for slot in spec.slots:
        if slot.kind == "index":
            axes.append(list(range((n - 1) // 2 + 1)))
            continue
        start = 2 + i * (D + 1)
        axes.append([Fraction(start + j) for j in range(D + 1)])
        i += 1
    names = [s.name for s in spec.slots]
    for point in itertools.product(*axes):
        yield dict(zip(names, point))


def _describe(params):
    return {k: str(v) for k, v in sorted(params.items())}


def run_statement(sid, n, m_mode="half", param_sampler=None, trials=3, phi_exponent=None,
                  certify=False):
    """Run a statement at one (n, m_mode); one TrialResult per trial (or grid point)."""
    spec = get_statement(sid)
    spec.check_n(n)
    spec.truncation(n, m_mode)
    if trials < 1:
        raise ValueError("trials must be at least 1")
    sampler = param_sampler or ParamSampler()
    results = []
    if not spec.free:
        t0 = time.perf_counter()
        report, modulus = evaluate(sid, n, m_mode, {}, phi_exponent)
        results.append(TrialResult(sid, n, m_mode, 0, {}, str(modulus or "identity"), report,
                                   time.perf_counter() - t0))
        return results
    if certify:
        skipped = 0
        for t, params in enumerate(certify_grid(spec, n, m_mode)):
            t0 = time.perf_counter()
            try:
                spec.check_params(n, params)
                report, modulus = evaluate(sid, n, m_mode, params, phi_exponent)
            except DegeneracyError:
                skipped += 1
                continue
            results.append(TrialResult(sid, n, m_mode, t, _describe(params), str(modulus), report,
                                       time.perf_counter() - t0, extra={"certify": True}))
        for r in results:
            r.extra["grid_skipped"] = skipped
        return results
    for t in range(trials):
        rng = sampler.stream(sid, n, m_mode, t)
        t0 = time.perf_counter()
        for attempt in range(sampler.max_attempts):
            params = sampler.draw(spec, n, rng)
            try:
                spec.check_params(n, params)
                report, modulus = evaluate(sid, n, m_mode, params, phi_exponent)
            except DegeneracyError:
                continue
            if report.denominator_coprime:
                break
        else:
            raise DegeneracyError(
                f"{sid}: no admissible specialization after {sampler.max_attempts} attempts")
        results.append(TrialResult(sid, n, m_mode, t, _describe(params), str(modulus or "identity"),
                                   report, time.perf_counter() - t0, resamples=attempt))
    return results
