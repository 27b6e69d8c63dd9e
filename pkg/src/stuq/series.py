"""Exact truncated Laurent series, one variable and nested two-variable.

All coefficients are arbitrary-precision rationals (`fractions.Fraction`).
Every series carries an exclusive truncation bound: coefficients at
exponents below it are exactly known (zero below the valuation), anything
at or above it is unknown and may not be read.  Binary operations take the
tightest provable truncation, so no reported coefficient is ever garbage.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Rat = Fraction

Scalar = Union[int, Fraction]


class SeriesError(ArithmeticError):
    """Raised on invalid series operations: non-invertible input, reading
    past the truncation, branch-ambiguous fractional powers."""


def _rat(x: Scalar) -> Rat:
    return x if isinstance(x, Fraction) else Fraction(x)


class LaurentSeries:
    """A Laurent series known exactly modulo q^truncation.

    Stored as (valuation, coefficients, truncation) with the leading stored
    coefficient nonzero; the canonical zero has an empty coefficient list
    and valuation == truncation.
    """

    __slots__ = ("valuation", "coefficients", "truncation")

    def __init__(self, valuation: int, coefficients: Iterable[Scalar], truncation: int):
        coeffs = [_rat(c) for c in coefficients]
        if valuation + len(coeffs) > truncation:
            coeffs = coeffs[: truncation - valuation]
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            valuation += 1
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            valuation = truncation
        if truncation < valuation:
            raise SeriesError(f"truncation {truncation} below valuation {valuation}")
        object.__setattr__(self, "valuation", valuation)
        object.__setattr__(self, "coefficients", tuple(coeffs))
        object.__setattr__(self, "truncation", truncation)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentSeries is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, truncation: int) -> LaurentSeries:
        return cls(truncation, (), truncation)

    @classmethod
    def one(cls, truncation: int) -> LaurentSeries:
        return cls.constant(1, truncation)

    @classmethod
    def constant(cls, c: Scalar, truncation: int) -> LaurentSeries:
        return cls(0, (c,), truncation)

    @classmethod
    def monomial(cls, exponent: int, truncation: int, c: Scalar = 1) -> LaurentSeries:
        return cls(exponent, (c,), truncation)

    @classmethod
    def q(cls, truncation: int) -> LaurentSeries:
        return cls.monomial(1, truncation)

    @classmethod
    def from_dict(cls, coeffs: dict[int, Scalar], truncation: int) -> LaurentSeries:
        live = {e: c for e, c in coeffs.items() if e < truncation and c != 0}
        if not live:
            return cls.zero(truncation)
        lo = min(live)
        data = [live.get(e, 0) for e in range(lo, truncation)]
        return cls(lo, data, truncation)

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coefficients

    def coeff(self, n: int) -> Rat:
        """Coefficient of q^n; reading at or past the truncation is an error."""
        if n >= self.truncation:
            raise SeriesError(f"coefficient q^{n} unknown (truncation {self.truncation})")
        i = n - self.valuation
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Fraction(0)

    def items(self):
        """Yield (exponent, coefficient) for the nonzero stored terms."""
        for i, c in enumerate(self.coefficients):
            if c != 0:
                yield self.valuation + i, c

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.valuation, self.coefficients, self.truncation) == (
            other.valuation, other.coefficients, other.truncation)

    def __hash__(self):
        return hash((self.valuation, self.coefficients, self.truncation))

    def __repr__(self):
        terms = []
        for e, c in self.items():
            if len(terms) >= 8:
                terms.append("...")
                break
            if e == 0:
                terms.append(f"{c}")
            elif e == 1:
                terms.append(f"{c}*q")
            else:
                terms.append(f"{c}*q^{e}")
        body = " + ".join(terms) if terms else "0"
        return f"<{body} + O(q^{self.truncation})>"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> LaurentSeries:
        if isinstance(other, (int, Fraction)):
            other = LaurentSeries.constant(other, self.truncation)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        trunc = min(self.truncation, other.truncation)
        if self.is_zero():
            return LaurentSeries(other.valuation, other.coefficients, trunc)
        if other.is_zero():
            return LaurentSeries(self.valuation, self.coefficients, trunc)
        lo = min(self.valuation, other.valuation)
        data = [Fraction(0)] * (trunc - lo)
        for s in (self, other):
            for i, c in enumerate(s.coefficients):
                e = s.valuation + i
                if e < trunc:
                    data[e - lo] += c
        return LaurentSeries(lo, data, trunc)

    __radd__ = __add__

    def __neg__(self) -> LaurentSeries:
        return LaurentSeries(self.valuation, (-c for c in self.coefficients), self.truncation)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentSeries.constant(other, self.truncation)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> LaurentSeries:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        trunc = min(self.valuation + other.truncation, other.valuation + self.truncation)
        if self.is_zero() or other.is_zero():
            return LaurentSeries.zero(trunc)
        va, vb = self.valuation, other.valuation
        n = trunc - va - vb
        a, b = self.coefficients, other.coefficients
        data = [Fraction(0)] * n
        for i, ai in enumerate(a):
            if i >= n:
                break
            if ai == 0:
                continue
            for j in range(min(len(b), n - i)):
                bj = b[j]
                if bj != 0:
                    data[i + j] += ai * bj
        return LaurentSeries(va + vb, data, trunc)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> LaurentSeries:
        c = _rat(c)
        if c == 0:
            return LaurentSeries.zero(self.truncation)
        return LaurentSeries(self.valuation, (c * x for x in self.coefficients), self.truncation)

    def invert(self) -> LaurentSeries:
        """Multiplicative inverse; requires a nonzero leading coefficient.

        The inverse of a series known mod q^t with valuation v is known mod
        q^(t-2v), the tightest bound the product rule gives back.
        """
        if self.is_zero():
            raise SeriesError("cannot invert the zero series")
        v = self.valuation
        a = self.coefficients
        width = self.truncation - v
        lead = a[0]
        b = [Fraction(0)] * width
        b[0] = 1 / lead
        for k in range(1, width):
            acc = Fraction(0)
            for i in range(1, min(k, len(a) - 1) + 1):
                ai = a[i]
                if ai != 0:
                    acc += ai * b[k - i]
            if acc != 0:
                b[k] = -acc / lead
        return LaurentSeries(-v, b, self.truncation - 2 * v)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / _rat(other))
        if isinstance(other, LaurentSeries):
            return self * other.invert()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.invert().scale(other)
        return NotImplemented

    def pow_int(self, n: int) -> LaurentSeries:
        """Integer power by repeated squaring; n < 0 inverts first."""
        if n < 0:
            return self.invert().pow_int(-n)
        if n == 0:
            return LaurentSeries.one(self.truncation - self.valuation)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __pow__(self, n):
        if isinstance(n, int):
            return self.pow_int(n)
        if isinstance(n, Fraction):
            return self.pow_rat(n)
        return NotImplemented

    def pow_rat(self, p: Scalar) -> LaurentSeries:
        """Fractional power of a series with constant term 1, by the binomial
        expansion of (1+x)^p; the branch is fixed by the value 1 at q = 0."""
        p = _rat(p)
        if self.valuation != 0 or self.coeff(0) != 1:
            raise SeriesError("pow_rat requires valuation 0 and constant coefficient 1")
        x = self - 1
        result = LaurentSeries.one(self.truncation)
        if x.is_zero():
            return result
        term = LaurentSeries.one(self.truncation)
        k = 0
        while term.valuation + x.valuation < self.truncation:
            k += 1
            term = (term * x).scale(Fraction(p - (k - 1), k))
            if term.is_zero():
                break
            result = result + term
        return result

    def theta(self) -> LaurentSeries:
        """q d/dq: multiply the coefficient at exponent n by n."""
        return LaurentSeries(
            self.valuation,
            ((self.valuation + i) * c for i, c in enumerate(self.coefficients)),
            self.truncation)

    def compose(self, t: LaurentSeries) -> LaurentSeries:
        """Substitute q := t; requires t.valuation >= 1 and self ordinary."""
        if self.valuation < 0:
            raise SeriesError("compose requires an ordinary power series outside")
        tval = t.valuation if not t.is_zero() else t.truncation
        if tval < 1:
            raise SeriesError("compose requires the inner series to have positive valuation")
        cap = self.truncation * tval
        acc = LaurentSeries.constant(self.coeff(0), cap) if self.truncation > 0 \
            else LaurentSeries.zero(cap)
        power = LaurentSeries.one(cap)
        for e in range(1, self.truncation):
            power = power * t
            c = self.coeff(e)
            if c != 0:
                acc = acc + power.scale(c)
        if self.truncation > 1:
            # even when some a_e vanish, t's own truncation bounds knowledge
            acc = acc.truncate(min(acc.truncation, t.truncation, cap))
        return acc

    def truncate(self, truncation: int) -> LaurentSeries:
        """Restrict knowledge to exponents below `truncation`."""
        if truncation > self.truncation:
            raise SeriesError("cannot extend a series' truncation")
        return LaurentSeries(self.valuation, self.coefficients, truncation)

    def shift(self, k: int) -> LaurentSeries:
        """Multiply by q^k."""
        return LaurentSeries(self.valuation + k, self.coefficients, self.truncation + k)

    # -- serialization (text cache format) -----------------------------------

    def to_text(self) -> str:
        """Header line `valuation truncation`, then one record
        `exponent numerator/denominator` per nonzero stored exponent."""
        lines = [f"{self.valuation} {self.truncation}"]
        for e, c in self.items():
            lines.append(f"{e} {c.numerator}/{c.denominator}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> LaurentSeries:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise SeriesError("empty series record")
        val, trunc = (int(x) for x in lines[0].split())
        coeffs: dict[int, Rat] = {}
        for ln in lines[1:]:
            e_s, frac = ln.split()
            num, _, den = frac.partition("/")
            coeffs[int(e_s)] = Fraction(int(num), int(den) if den else 1)
        if any(e < val for e in coeffs):
            raise SeriesError("record below declared valuation")
        return cls.from_dict(coeffs, trunc)


class BiSeries:
    """Series in an outer variable whose coefficients are Laurent series in
    an inner variable.

    Realizes the adically-small-outer regime: rows are indexed by outer
    exponents outer_valuation .. outer_truncation-1, each row an exactly
    tracked inner LaurentSeries (rows below the valuation are identically
    zero).  The common inner window (low, high) is the region every row is
    guaranteed to know; individual rows may know more.
    """

    __slots__ = ("outer_valuation", "rows")

    def __init__(self, outer_valuation: int, rows: Iterable[LaurentSeries]):
        object.__setattr__(self, "outer_valuation", outer_valuation)
        object.__setattr__(self, "rows", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("BiSeries is immutable")

    @property
    def outer_truncation(self) -> int:
        return self.outer_valuation + len(self.rows)

    def row(self, n: int) -> LaurentSeries:
        """Inner series at outer exponent n."""
        if n >= self.outer_truncation:
            raise SeriesError(f"outer exponent {n} unknown (truncation {self.outer_truncation})")
        if n < self.outer_valuation:
            return LaurentSeries.zero(self.inner_window()[1])
        return self.rows[n - self.outer_valuation]

    def coeff(self, outer: int, inner: int) -> Rat:
        if outer >= self.outer_truncation:
            raise SeriesError(f"outer exponent {outer} unknown")
        if outer < self.outer_valuation:
            return Fraction(0)
        return self.rows[outer - self.outer_valuation].coeff(inner)

    def inner_window(self) -> tuple[int, int]:
        """(low, high): all rows are known at least on exponents low..high-1."""
        vals = [r.valuation for r in self.rows if not r.is_zero()]
        truncs = [r.truncation for r in self.rows]
        lo = min(vals) if vals else 0
        hi = min(truncs) if truncs else 0
        return min(lo, hi), hi

    def is_zero(self) -> bool:
        return all(r.is_zero() for r in self.rows)

    def __repr__(self):
        lo, hi = self.inner_window()
        return (f"<BiSeries outer [{self.outer_valuation},{self.outer_truncation}), "
                f"inner window [{lo},{hi})>")

    # -- constructors --------------------------------------------------------

    @classmethod
    def lift_outer(cls, a: LaurentSeries, inner_truncation: int) -> BiSeries:
        """a(outer) viewed as a BiSeries constant in the inner variable."""
        rows = [LaurentSeries.constant(a.coeff(e), inner_truncation)
                for e in range(a.valuation, a.truncation)]
        return cls(a.valuation, rows)

    @classmethod
    def lift_inner(cls, a: LaurentSeries, outer_truncation: int) -> BiSeries:
        """a(inner) viewed as a BiSeries constant in the outer variable."""
        if outer_truncation < 1:
            raise SeriesError("lift_inner needs at least one outer row")
        rows = [a] + [LaurentSeries.zero(a.truncation) for _ in range(outer_truncation - 1)]
        return cls(0, rows)

    @classmethod
    def zero(cls, outer_valuation: int, outer_truncation: int, inner_truncation: int) -> BiSeries:
        rows = [LaurentSeries.zero(inner_truncation)
                for _ in range(outer_truncation - outer_valuation)]
        return cls(outer_valuation, rows)

    @classmethod
    def from_monomials(cls, terms: dict[tuple[int, int], Scalar],
                       outer_truncation: int, inner_truncation: int,
                       outer_valuation: int | None = None) -> BiSeries:
        """Exact assembly from {(outer_exp, inner_exp): coefficient}; every
        row in range is fully known to inner_truncation."""
        by_row: dict[int, dict[int, Rat]] = {}
        for (oe, ie), c in terms.items():
            if oe < outer_truncation and ie < inner_truncation:
                row = by_row.setdefault(oe, {})
                row[ie] = row.get(ie, Fraction(0)) + _rat(c)
        lo = outer_valuation if outer_valuation is not None else min(by_row, default=0)
        if by_row and min(by_row) < lo:
            raise SeriesError("monomial below the declared outer valuation")
        rows = [LaurentSeries.from_dict(by_row.get(oe, {}), inner_truncation)
                for oe in range(lo, outer_truncation)]
        return cls(lo, rows)

    # -- arithmetic ----------------------------------------------------------

    def _promote(self, other):
        if isinstance(other, (int, Fraction)):
            _, hi = self.inner_window()
            return BiSeries.lift_inner(LaurentSeries.constant(other, hi),
                                       max(self.outer_truncation, 1))
        return other

    def __add__(self, other) -> BiSeries:
        other = self._promote(other)
        if not isinstance(other, BiSeries):
            return NotImplemented
        trunc = min(self.outer_truncation, other.outer_truncation)
        lo = min(self.outer_valuation, other.outer_valuation)
        rows = []
        for e in range(lo, trunc):
            if e < self.outer_valuation:
                rb = other.rows[e - other.outer_valuation]
                rows.append(LaurentSeries(rb.valuation, rb.coefficients, rb.truncation))
            elif e < other.outer_valuation:
                ra = self.rows[e - self.outer_valuation]
                rows.append(LaurentSeries(ra.valuation, ra.coefficients, ra.truncation))
            else:
                rows.append(self.rows[e - self.outer_valuation]
                            + other.rows[e - other.outer_valuation])
        return BiSeries(lo, rows)

    __radd__ = __add__

    def __neg__(self) -> BiSeries:
        return BiSeries(self.outer_valuation, (-r for r in self.rows))

    def __sub__(self, other):
        other = self._promote(other)
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + self._promote(other)

    def __mul__(self, other) -> BiSeries:
        if isinstance(other, (int, Fraction, LaurentSeries)):
            return BiSeries(self.outer_valuation, (r * other for r in self.rows))
        if not isinstance(other, BiSeries):
            return NotImplemented
        va, vb = self.outer_valuation, other.outer_valuation
        trunc = min(va + other.outer_truncation, vb + self.outer_truncation)
        n = trunc - va - vb
        if n <= 0:
            hi = self.inner_window()[1] + other.inner_window()[1]
            return BiSeries.zero(va + vb, trunc, hi)
        rows: list[LaurentSeries | None] = [None] * n
        for i, ra in enumerate(self.rows):
            if i >= n:
                break
            for j in range(min(len(other.rows), n - i)):
                prod = ra * other.rows[j]
                k = i + j
                rows[k] = prod if rows[k] is None else rows[k] + prod
        return BiSeries(va + vb, rows)

    __rmul__ = __mul__

    def invert(self) -> BiSeries:
        """Inverse; the lowest outer row must be an invertible Laurent series."""
        if not self.rows or self.rows[0].is_zero():
            raise SeriesError("bi_invert needs a nonzero leading outer coefficient")
        a = self.rows
        v = self.outer_valuation
        width = len(a)
        b0 = a[0].invert()
        b: list[LaurentSeries] = [b0]
        for k in range(1, width):
            acc = a[1] * b[k - 1]
            for i in range(2, min(k, width - 1) + 1):
                acc = acc + a[i] * b[k - i]
            b.append(-(b0 * acc))
        return BiSeries(-v, b)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / _rat(other))
        if isinstance(other, (LaurentSeries, BiSeries)):
            return self * other.invert()
        return NotImplemented

    def pow_int(self, n: int) -> BiSeries:
        if n < 0:
            return self.invert().pow_int(-n)
        if n == 0:
            _, hi = self.inner_window()
            return BiSeries.lift_inner(LaurentSeries.one(hi), max(len(self.rows), 1))
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __pow__(self, n):
        if isinstance(n, int):
            return self.pow_int(n)
        return NotImplemented

    def theta_outer(self) -> BiSeries:
        """Outer-variable q d/dq."""
        return BiSeries(self.outer_valuation,
                        (r.scale(self.outer_valuation + i) for i, r in enumerate(self.rows)))

    def truncate_outer(self, outer_truncation: int) -> BiSeries:
        if outer_truncation > self.outer_truncation:
            raise SeriesError("cannot extend the outer truncation")
        return BiSeries(self.outer_valuation,
                        self.rows[: outer_truncation - self.outer_valuation])
