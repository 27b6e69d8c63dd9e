"""Structured pass/fail reports for the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field

from .series import BiSeries, LaurentSeries, Rat


@dataclass(frozen=True)
class Mismatch:
    location: str
    lhs: Rat
    rhs: Rat


@dataclass
class CheckReport:
    name: str
    ok: bool
    checked: int
    mismatches: list[Mismatch] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

    def summary(self) -> str:
        if self.ok:
            return f"{self.name}: OK ({self.checked} coefficients)"
        m = self.mismatches[0]
        return (f"{self.name}: FAIL at {m.location}: {m.lhs} != {m.rhs} "
                f"({len(self.mismatches)} mismatching of {self.checked})")


def compare_series(name: str, a: LaurentSeries, b: LaurentSeries,
                   lo: int, hi: int, max_mismatches: int = 8) -> CheckReport:
    """Exact coefficient comparison on the inclusive exponent range lo..hi.

    Both series must know the whole range; reading past a truncation raises.
    """
    mismatches = []
    checked = 0
    for e in range(lo, hi + 1):
        ca, cb = a.coeff(e), b.coeff(e)
        checked += 1
        if ca != cb:
            if len(mismatches) < max_mismatches:
                mismatches.append(Mismatch(f"q^{e}", ca, cb))
    return CheckReport(name, not mismatches, checked, mismatches)


def compare_bi(name: str, a: BiSeries, b: BiSeries,
               outer_lo: int, outer_hi: int, inner_lo: int, inner_hi: int,
               max_mismatches: int = 8) -> CheckReport:
    """Exact comparison on the inclusive window [outer_lo..outer_hi] x
    [inner_lo..inner_hi]; the window must be covered by both operands."""
    mismatches = []
    checked = 0
    for oe in range(outer_lo, outer_hi + 1):
        for ie in range(inner_lo, inner_hi + 1):
            ca, cb = a.coeff(oe, ie), b.coeff(oe, ie)
            checked += 1
            if ca != cb:
                if len(mismatches) < max_mismatches:
                    mismatches.append(Mismatch(f"q1^{oe} q2^{ie}", ca, cb))
    return CheckReport(name, not mismatches, checked, mismatches)


def bi_is_zero_on(name: str, a: BiSeries,
                  outer_lo: int, outer_hi: int, inner_lo: int, inner_hi: int,
                  max_mismatches: int = 8) -> CheckReport:
    zero = BiSeries.zero(outer_lo, outer_hi + 1, inner_hi + 1)
    return compare_bi(name, a, zero, outer_lo, outer_hi, inner_lo, inner_hi,
                      max_mismatches=max_mismatches)
