"""Truncated basic hypergeometric series r_phi_s with base q**step."""

from dataclasses import dataclass

from ..qobjects import QMonomial
from .terms import HyperSum, Pochhammer, hyper_sum


@dataclass(frozen=True)
class SeriesSpec:
    upper_params: tuple
    lower_params: tuple
    base_step: int = 1
    argument: QMonomial = QMonomial(1, 0)
    truncation: int = 0

    def __post_init__(self):
        if self.base_step < 1:
            raise ValueError("base_step must be a positive integer")
        if self.truncation < 0:
            raise ValueError("truncation must be nonnegative")
        object.__setattr__(self, "upper_params", tuple(QMonomial.of(x) for x in self.upper_params))
        object.__setattr__(self, "lower_params", tuple(QMonomial.of(x) for x in self.lower_params))
        object.__setattr__(self, "argument", QMonomial.of(self.argument))

    def as_hypersum(self):
        s = self.base_step
        r, t = len(self.upper_params), len(self.lower_params)
        balance = 1 + t - r  # power of (-1)^k q^(s*C(k,2))
        pochs = [Pochhammer(x, s, 1) for x in self.upper_params]
        pochs += [Pochhammer(x, s, -1) for x in self.lower_params]
        pochs.append(Pochhammer(QMonomial(1, s), s, -1))
        z = self.argument
        base = QMonomial(z.coef * (-1) ** (balance % 2), z.qexp)
        return HyperSum(pochs, base=base, quad=s * balance)


def phi_series(spec):
    """Exact value of the series truncated after k = spec.truncation."""
    return hyper_sum(spec.as_hypersum(), spec.truncation)
