"""The weight-4 weakly holomorphic basis F_n, Hecke operators, and the
pole-expansion identity behind the two-variable product formula.

F_n is the unique weight-4 form with q-expansion q^-n + O(q); it equals E4
times a degree-n polynomial in j (F_0 = E4, F_1 = E4(j-984), ...), and is
also reachable as n^-3 F_1|T_n, which gives the closed form

    F_n = q^-n - sum_{k,l,d>0, kd=n} l^3 c(kl) q^(ld)

in terms of the coefficients c(.) of E4 E6/eta24.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import divisors
from .forms import WeightedForm, eisenstein, f_series, j_norm
from .report import CheckReport, compare_bi, compare_series
from .series import BiSeries, LaurentSeries, Rat, SeriesError


@dataclass(frozen=True)
class WhBasisElement:
    index: int
    form: WeightedForm
    j_polynomial: tuple[Rat, ...]  # ascending; F_n = E4 * sum p_k j^k


def fn_basis(n: int, order: int = 25) -> WhBasisElement:
    """The unique weight-4 weakly holomorphic form q^-n + O(q), by exact
    triangular elimination on the span {E4 j^k, k <= n}."""
    if n < 0:
        raise ValueError("basis index must be >= 0")
    work = order + n + 2
    e4 = eisenstein(4, work).series
    g = [e4]
    if n >= 1:
        j = j_norm(work)
        for _ in range(n):
            g.append(g[-1] * j)
    p = [Fraction(0)] * (n + 1)
    p[n] = Fraction(1)
    current = g[n]
    for e in range(-n + 1, 1):
        c = current.coeff(e)
        if c != 0:
            k = -e
            p[k] -= c
            current = current - g[k].scale(c)
    series = current.truncate(min(current.truncation, order))
    return WhBasisElement(n, WeightedForm(4, series), tuple(p))


def hecke(form: WeightedForm, n: int) -> WeightedForm:
    """Hecke operator T_n in weight k on a q-expansion:
    b(m) = sum_{d | gcd(m,n)} d^(k-1) a(m n / d^2).

    The output is truncated at floor(input truncation / n); the input must
    be long enough for at least one output coefficient.
    """
    if n < 1:
        raise ValueError("Hecke index must be >= 1")
    s = form.series
    t_out = s.truncation // n
    v_in = s.valuation
    m_lo = n * v_in if v_in < 0 else 0
    if t_out <= m_lo:
        raise SeriesError(
            f"input truncation {s.truncation} too short for T_{n} "
            f"(needs at least {n * (m_lo + 1)})")
    k = form.weight
    coeffs: dict[int, Rat] = {}
    for m in range(m_lo, t_out):
        acc = Fraction(0)
        for d in divisors(n):
            if m % d == 0 or m == 0:
                acc += d ** (k - 1) * s.coeff(m * n // (d * d))
        if acc != 0:
            coeffs[m] = acc
    return WeightedForm(k, LaurentSeries.from_dict(coeffs, t_out), form.quasi)


def fn_via_hecke(n: int, order: int = 25) -> WeightedForm:
    """F_n assembled directly from the coefficients c(.) of E4 E6/eta24."""
    if n < 1:
        raise ValueError("index must be >= 1 (F_0 = E4 has no Hecke form)")
    f = f_series(n * order + 1)
    coeffs: dict[int, Rat] = {-n: Fraction(1)}
    for d in divisors(n):
        k = n // d
        for ell in range(1, (order - 1) // d + 1):
            e = ell * d
            coeffs[e] = coeffs.get(e, Fraction(0)) - ell ** 3 * f.coeff(k * ell)
    return WeightedForm(4, LaurentSeries.from_dict(coeffs, order))


def bol_check(order: int = 30) -> CheckReport:
    """-theta^3 applied to E4 E6/eta24 lands back in weight 4 and equals F_1."""
    if order < 2:
        raise ValueError("order must be >= 2")
    f = f_series(order)
    lhs = -f.series.theta().theta().theta()
    rhs = fn_basis(1, order).form.series
    return compare_series("bol: -theta^3 f == E4(j-984)", lhs, rhs, -1, order - 1)


def expansion_iii_check(N: int = 10, inner_window: int = 12) -> CheckReport:
    """f(tau1) E4(tau2) == (j(tau1) - j(tau2)) * sum_{n<=N} F_n(tau2) q1^n,
    compared as nested series modulo q1^(N+1) on |inner exponent| <= window."""
    if N < 1:
        raise ValueError("N must be >= 1")
    w = inner_window
    t_in = w + N + 3
    f1 = BiSeries.lift_outer(f_series(N + 2).series, t_in)
    e42 = BiSeries.lift_inner(eisenstein(4, t_in).series, N + 2)
    lhs = f1 * e42

    j1 = BiSeries.lift_outer(j_norm(N + 3), t_in)
    j2 = BiSeries.lift_inner(j_norm(t_in), N + 3)
    # one row past N so the product is complete modulo q1^(N+1)
    fn_rows = [fn_basis(k, t_in).form.series for k in range(0, N + 2)]
    fn_sum = BiSeries(0, fn_rows)
    rhs = (j1 - j2) * fn_sum
    return compare_bi("pole expansion rows", lhs, rhs, -1, N, -w, w)
