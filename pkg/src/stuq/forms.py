"""Classical modular forms as exact q-expansions.

Normalization: eta24 is q * prod (1-q^n)^24 = (E4^3 - E6^2)/1728, the
convention under which j = E4^3/eta24 = 1/q + 744 + ... holds exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .series import LaurentSeries, Rat


@dataclass(frozen=True)
class WeightedForm:
    """A q-expansion tagged with its modular weight.

    quasi marks E2, which transforms with the well-known anomaly and is
    exempt from modularity-based assertions; only its derivative identity
    is ever asserted.
    """

    weight: int
    series: LaurentSeries
    quasi: bool = False

    def coeff(self, n: int) -> Rat:
        return self.series.coeff(n)

    def __mul__(self, other: "WeightedForm") -> "WeightedForm":
        return WeightedForm(self.weight + other.weight, self.series * other.series,
                            self.quasi or other.quasi)

    def invert(self) -> "WeightedForm":
        return WeightedForm(-self.weight, self.series.invert(), self.quasi)

    def pow_int(self, n: int) -> "WeightedForm":
        return WeightedForm(self.weight * n, self.series.pow_int(n), self.quasi)


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Rat:
    """Exact Bernoulli number B_n (B_1 = -1/2 convention)."""
    if n < 0:
        raise ValueError("Bernoulli numbers need n >= 0")
    if n == 0:
        return Fraction(1)
    acc = Fraction(0)
    for k in range(n):
        acc += math.comb(n + 1, k) * bernoulli(k)
    return -acc / (n + 1)


def sigma(k: int, n: int) -> int:
    """Divisor power sum sigma_k(n) for n >= 1."""
    if n < 1:
        raise ValueError("sigma needs n >= 1")
    total = 0
    i = 1
    while i * i <= n:
        if n % i == 0:
            total += i ** k
            j = n // i
            if j != i:
                total += j ** k
        i += 1
    return total


@lru_cache(maxsize=None)
def eisenstein(two_k: int, order: int) -> WeightedForm:
    """E_{2k} = 1 - (4k/B_{2k}) sum sigma_{2k-1}(n) q^n, truncated at order.

    two_k = 2 gives the quasi-modular E2.
    """
    if two_k != 2 and (two_k < 4 or two_k % 2):
        raise ValueError("weight must be 2 or an even integer >= 4")
    if order < 1:
        raise ValueError("order must be >= 1")
    mult = Fraction(-2 * two_k) / bernoulli(two_k)
    coeffs = [Fraction(1)] + [mult * sigma(two_k - 1, n) for n in range(1, order)]
    return WeightedForm(two_k, LaurentSeries(0, coeffs, order), quasi=(two_k == 2))


def _euler_product(truncation: int) -> LaurentSeries:
    # prod (1-q^n) by the pentagonal number theorem
    coeffs: dict[int, int] = {0: 1}
    m = 1
    while True:
        p1 = m * (3 * m - 1) // 2
        p2 = m * (3 * m + 1) // 2
        if p1 >= truncation and p2 >= truncation:
            break
        s = 1 if m % 2 == 0 else -1
        if p1 < truncation:
            coeffs[p1] = s
        if p2 < truncation:
            coeffs[p2] = s
        m += 1
    return LaurentSeries.from_dict(coeffs, truncation)


@lru_cache(maxsize=None)
def eta24(order: int) -> WeightedForm:
    """The weight-12 cusp form q * prod (1-q^n)^24 truncated at order."""
    if order < 2:
        raise ValueError("order must be >= 2")
    return WeightedForm(12, _euler_product(order - 1).pow_int(24).shift(1))


@lru_cache(maxsize=None)
def j_norm(order: int) -> LaurentSeries:
    """Normalized j function E4^3/eta24 = 1/q + 744 + 196884 q + ..."""
    if order < 1:
        raise ValueError("order must be >= 1")
    e4 = eisenstein(4, order + 1)
    return e4.series.pow_int(3) * eta24(order + 2).series.invert()


@lru_cache(maxsize=None)
def f_series(order: int) -> WeightedForm:
    """The weight -2 form E4 E6 / eta24 = q^-1 - 240 - 141444 q - ..."""
    if order < 0:
        raise ValueError("order must be >= 0")
    n = max(order, 0) + 1
    e4 = eisenstein(4, n)
    e6 = eisenstein(6, n)
    return WeightedForm(-2, e4.series * e6.series * eta24(order + 2).series.invert())


@lru_cache(maxsize=None)
def yz_series(order: int) -> LaurentSeries:
    """prod (1-q^n)^-24, the generating series of the rational-curve counts."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return _euler_product(order).pow_int(24).invert()
