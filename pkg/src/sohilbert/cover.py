"""Hilbert series of the cyclic cover ``K[Y^T Y, maxminors(Y)]`` of R.

As an R-module the cover is ``R + p(t)`` (Y grading), and when ``n = t mod 2``
the canonical module of R is ``p(-tn + t)``.  Duality turns the series of R
into the series of its canonical module, hence of p, hence of the cover.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from sohilbert import oracle
from sohilbert.series import (
    GradingTag,
    HilbertSeries,
    HVectorProfile,
    LaurentPoly,
    expand,
    h_vector,
)
from sohilbert.symdet import RingSpec, SpecError, h_poly_codim3, h_poly_R, krull_dim, same_parity


class CoverError(ValueError):
    pass


@dataclass(frozen=True)
class CoverReport:
    spec: RingSpec
    series: HilbertSeries
    profile: HVectorProfile
    a_invariant_Y: int
    gap: int | None
    oracle_dims: tuple[int, ...] | None = None


def cover_series_closed(spec: RingSpec, hsR: HilbertSeries) -> HilbertSeries:
    """Cover series from the rescaled series of R, for even t and even n - t."""
    t, n = spec.t, spec.n
    if t % 2 or not same_parity(spec):
        raise CoverError("closed form requires PTwist case")
    if hsR.grading is not GradingTag.RESCALED or hsR.numerator.is_zero() or hsR.numerator.valuation != 0:
        raise CoverError("inconsistent input series: expected a rescaled ring series")
    d, k = hsR.dim, hsR.numerator.degree
    s = t * (n - 1) // 2  # omega_R = p(-s) in the rescaled grading
    e = d - k - s - t // 2
    if e < 1:
        raise CoverError(f"inconsistent input series: p(t) would start in degree {e}")
    part = LaurentPoly(e, hsR.numerator.coeffs[::-1])
    out = HilbertSeries(hsR.numerator + part, d, GradingTag.RESCALED)
    if not out.numerator.is_palindrome():
        raise CoverError("inconsistent input series: cover numerator is not a palindrome")
    if out.a_invariant != -t * n // 2:
        raise CoverError("inconsistent input series: wrong a-invariant")
    return out


def cover_numerator_degree(spec: RingSpec) -> int:
    """``dim + a/2`` with ``a = -tn`` the Y-graded a-invariant of the cover."""
    if spec.t % 2:
        raise CoverError("no semistandard grading; use oracle Hilbert-function tables instead")
    return krull_dim(spec) - spec.t * spec.n // 2


def cover_series(spec: RingSpec, oracle_budget: int = 4, field=None, guard=None) -> HilbertSeries:
    """Rescaled cover series: closed form when n = t mod 2, oracle otherwise."""
    if spec.t % 2:
        raise CoverError("no semistandard grading; use oracle Hilbert-function tables instead")
    if same_parity(spec):
        return cover_series_closed(spec, h_poly_R(spec, oracle_budget, field=field, guard=guard))

    # the paper gives no closed form for the series of p when R is Gorenstein
    k = cover_numerator_degree(spec)
    if k > oracle_budget:
        raise oracle.BudgetError(f"reconstruction needs rescaled degree {k}, budget is {oracle_budget}")
    top = k + 1 if k + 1 <= oracle_budget else k
    table = oracle.hilbert_function(spec, oracle.Label.GRAM_PLUS_MINORS, top, field=field, guard=guard, rescale=True)
    d = krull_dim(spec)
    num = oracle.reconstruct_numerator(table.dims, d, k)
    if num.is_zero() or num.degree != k or not num.is_palindrome():
        raise oracle.OracleError(f"oracle numerator {num.coeffs} is not a palindrome of degree {k}")
    return HilbertSeries(num, d, GradingTag.RESCALED)


def family_report(m: int, with_oracle: bool = False, oracle_budget: int = 2, field=None, guard=None) -> CoverReport:
    """The ``2m x (2m+2)`` family: the h-vector has ``h_m - h_{m+1} = m - 1``."""
    if m < 1:
        raise SpecError("m must be positive")
    spec = RingSpec(2 * m, 2 * m + 2)
    s = cover_series_closed(spec, h_poly_codim3(spec))
    profile = h_vector(s)
    h = profile.h
    gap = h[m] - h[m + 1]
    if gap != m - 1:
        raise CoverError(f"gap {gap} != m - 1 = {m - 1}")
    if profile.unimodal != (m <= 1):
        raise CoverError(f"unimodality {profile.unimodal} contradicts m = {m}")
    dims = None
    if with_oracle:
        table = oracle.hilbert_function(
            spec, oracle.Label.GRAM_PLUS_MINORS, oracle_budget, field=field, guard=guard, rescale=True
        )
        dims = tuple(table.dims)
        expected = expand(s, oracle_budget)
        if list(dims) != expected:
            raise CoverError(f"oracle dimensions {dims} differ from the series expansion {expected}")
    return CoverReport(spec, s, profile, -spec.t * spec.n, gap, dims)


def veronese_dims(n: int, budget: int = 4, field=None) -> list[int]:
    """Oracle Hilbert function of the t = 1 cover, Y grading."""
    spec = RingSpec(1, n, check=False)
    table = oracle.hilbert_function(spec, oracle.Label.GRAM_PLUS_MINORS, budget, field=field, rescale=False)
    return table.dims


def veronese_check(n: int, budget: int = 4, field=None) -> bool:
    """For t = 1 the cover is the whole polynomial ring ``K[y_1..y_n]``."""
    if n < 1:
        raise SpecError("n must be positive")
    return veronese_dims(n, budget, field) == [comb(n - 1 + D, n - 1) for D in range(budget + 1)]
