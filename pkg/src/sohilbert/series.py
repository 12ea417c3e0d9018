"""Exact arithmetic on Hilbert series ``N(z) / (1 - z**step)**dim``.

Numerators are Laurent polynomials with integer coefficients.  A series
carries a grading tag: ``Y`` is the grading inherited from ``deg y_ij = 1``
and ``RESCALED`` is the halved grading in which the Gram entries have
degree one.  Everything here is exact integer arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb


class SeriesError(ValueError):
    pass


class GradingTag(enum.Enum):
    Y = "YGrading"
    RESCALED = "Rescaled"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial ``sum(coeffs[i] * z**(valuation + i))``.

    Always stored in canonical form: no leading or trailing zeros, and the
    zero polynomial is ``LaurentPoly(0, ())``.
    """

    valuation: int = 0
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        lo, hi = 0, len(c)
        while lo < hi and c[lo] == 0:
            lo += 1
        while hi > lo and c[hi - 1] == 0:
            hi -= 1
        val = self.valuation + lo if hi > lo else 0
        object.__setattr__(self, "coeffs", c[lo:hi])
        object.__setattr__(self, "valuation", int(val))

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> LaurentPoly:
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(lo, tuple(terms.get(e, 0) for e in range(lo, hi + 1)))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise SeriesError("zero polynomial has no degree")
        return self.valuation + len(self.coeffs) - 1

    def coeff(self, e: int) -> int:
        i = e - self.valuation
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def items(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.valuation + i, c

    def at_one(self) -> int:
        return sum(self.coeffs)

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``z**k``."""
        return LaurentPoly(self.valuation + k, self.coeffs)

    def reverse(self) -> LaurentPoly:
        """Coefficient reversal on the same support interval."""
        return LaurentPoly(self.valuation, self.coeffs[::-1])

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.valuation, other.valuation)
        hi = max(self.degree, other.degree)
        return LaurentPoly(lo, tuple(self.coeff(e) + other.coeff(e) for e in range(lo, hi + 1)))

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.valuation, tuple(-c for c in self.coeffs))

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly(self.valuation + other.valuation, tuple(out))

    def times_one_plus_z(self, power: int) -> LaurentPoly:
        return self * LaurentPoly(0, tuple(comb(power, i) for i in range(power + 1)))

    def divide_one_plus_z(self) -> LaurentPoly | None:
        """Exact quotient by ``1 + z``, or None if it does not divide."""
        if self.is_zero():
            return self
        q = []
        r = 0
        for c in self.coeffs:
            r = c - r
            q.append(r)
        if q[-1] != 0:
            return None
        return LaurentPoly(self.valuation, tuple(q[:-1]))

    def is_even(self) -> bool:
        return all(e % 2 == 0 for e, _ in self.items())

    def spread(self) -> LaurentPoly:
        """Substitute ``z -> z**2``."""
        return LaurentPoly.from_dict({2 * e: c for e, c in self.items()})

    def compress(self) -> LaurentPoly:
        """Substitute ``z**2 -> z``; only valid on even polynomials."""
        if not self.is_even():
            raise SeriesError("grading not rescalable")
        return LaurentPoly.from_dict({e // 2: c for e, c in self.items()})

    def is_palindrome(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __str__(self):
        if self.is_zero():
            return "0"
        return f"z^{self.valuation}*{self.coeffs}" if self.valuation else str(self.coeffs)


def lpoly(*coeffs: int, val: int = 0) -> LaurentPoly:
    return LaurentPoly(val, tuple(coeffs))


@dataclass(frozen=True)
class HilbertSeries:
    """Rational series ``numerator(z) / (1 - z**step)**dim``.

    ``step`` is 1 except for Y-graded series that live only in even degrees
    (the Y-graded view of a rescaled series); those use ``step=2``.  A
    ``step=2`` numerator is rewritten over ``(1 - z)**dim`` whenever it is
    divisible by ``(1 + z)**dim``, so equal series compare equal.
    """

    numerator: LaurentPoly
    dim: int
    grading: GradingTag = GradingTag.RESCALED
    step: int = 1

    def __post_init__(self):
        if self.dim < 0:
            raise SeriesError("dimension must be nonnegative")
        if self.step not in (1, 2):
            raise SeriesError("step must be 1 or 2")
        if self.step == 2 and self.grading is not GradingTag.Y:
            raise SeriesError("step 2 only occurs in the Y grading")
        if self.step == 2:
            num = self.numerator
            for _ in range(self.dim):
                num = num.divide_one_plus_z()
                if num is None:
                    return
            object.__setattr__(self, "numerator", num)
            object.__setattr__(self, "step", 1)

    @property
    def a_invariant(self) -> int:
        return self.numerator.degree - self.step * self.dim

    def multiplicity(self) -> int:
        return self.numerator.at_one()

    def __add__(self, other: HilbertSeries) -> HilbertSeries:
        return add(self, other)

    def __str__(self):
        den = "(1-z)" if self.step == 1 else "(1-z^2)"
        return f"{self.numerator}/{den}^{self.dim} [{self.grading}]"


@dataclass(frozen=True)
class HVectorProfile:
    h: tuple[int, ...]
    palindrome: bool
    unimodal: bool
    a_invariant: int


def series(coeffs, dim: int, grading: GradingTag = GradingTag.RESCALED, val: int = 0) -> HilbertSeries:
    return HilbertSeries(LaurentPoly(val, tuple(coeffs)), dim, grading)


def _numerator_step2(s: HilbertSeries) -> LaurentPoly:
    # numerator of s written over (1 - z**2)**dim
    if s.step == 2:
        return s.numerator
    return s.numerator.times_one_plus_z(s.dim)


def expand(s: HilbertSeries, D: int) -> list[int]:
    """Hilbert function values ``H(0), ..., H(D)``."""
    if not s.numerator.is_zero() and s.numerator.valuation < 0:
        raise SeriesError("not an N-graded object")
    d, st = s.dim, s.step
    out = []
    for i in range(D + 1):
        total = 0
        for e, c in s.numerator.items():
            r = i - e
            if r < 0 or r % st:
                continue
            r //= st
            if d == 0:
                total += c if r == 0 else 0
            else:
                total += c * comb(d - 1 + r, d - 1)
        out.append(total)
    return out


def twist(s: HilbertSeries, a: int) -> HilbertSeries:
    """Series of ``M(a)``, where ``M(a)_i = M_{a+i}``."""
    return HilbertSeries(s.numerator.shift(-a), s.dim, s.grading, s.step)


def dual(s: HilbertSeries) -> HilbertSeries:
    """``(-1)**dim * HS(1/z)``: the series of the canonical module of a
    Cohen-Macaulay module with series ``s``."""
    if s.numerator.is_zero():
        return s
    num = s.numerator
    new_val = s.step * s.dim - num.degree
    return HilbertSeries(LaurentPoly(new_val, num.coeffs[::-1]), s.dim, s.grading, s.step)


def is_unimodal(h) -> bool:
    """Rises weakly then falls weakly.  For palindromes this is the usual
    ``h_0 <= ... <= h_floor(k/2)``."""
    h = list(h)
    i = 0
    while i + 1 < len(h) and h[i] <= h[i + 1]:
        i += 1
    while i + 1 < len(h) and h[i] >= h[i + 1]:
        i += 1
    return i >= len(h) - 1


def h_vector(s: HilbertSeries) -> HVectorProfile:
    if s.step != 1:
        raise SeriesError("h-vector needs a (1-z)**dim denominator; rescale first")
    if s.numerator.is_zero() or s.numerator.valuation != 0:
        raise SeriesError("numerator not normalized")
    h = s.numerator.coeffs
    pal = s.numerator.is_palindrome()
    if pal:
        half = h[: len(h) // 2 + 1]
        uni = all(half[i] <= half[i + 1] for i in range(len(half) - 1))
    else:
        uni = is_unimodal(h)
    return HVectorProfile(h, pal, uni, s.a_invariant)


def rescale_halve(s: HilbertSeries) -> HilbertSeries:
    """Y grading -> rescaled grading, ``H'(i) = H(2i)``."""
    if s.grading is not GradingTag.Y:
        raise SeriesError("series is already rescaled")
    num = _numerator_step2(s)
    if not num.is_even():
        raise SeriesError("grading not rescalable")
    return HilbertSeries(num.compress(), s.dim, GradingTag.RESCALED)


def rescale_double(s: HilbertSeries) -> HilbertSeries:
    """Inverse of :func:`rescale_halve`."""
    if s.grading is not GradingTag.RESCALED:
        raise SeriesError("series is not in the rescaled grading")
    return HilbertSeries(s.numerator.spread(), s.dim, GradingTag.Y, step=2)


def add(s1: HilbertSeries, s2: HilbertSeries) -> HilbertSeries:
    """Series of a direct sum."""
    if s1.dim != s2.dim or s1.grading is not s2.grading:
        raise SeriesError(
            f"cannot add series with dim/grading {s1.dim}/{s1.grading} and {s2.dim}/{s2.grading}"
        )
    if s1.step == s2.step:
        return HilbertSeries(s1.numerator + s2.numerator, s1.dim, s1.grading, s1.step)
    return HilbertSeries(_numerator_step2(s1) + _numerator_step2(s2), s1.dim, s1.grading, 2)


def zero(dim: int, grading: GradingTag = GradingTag.RESCALED) -> HilbertSeries:
    return HilbertSeries(LaurentPoly(), dim, grading)
