from math import comb

import pytest

from sohilbert import oracle
from sohilbert.cover import (
    CoverError,
    cover_series,
    cover_series_closed,
    family_report,
    veronese_check,
    veronese_dims,
)
from sohilbert.oracle import BudgetError
from sohilbert.series import GradingTag, expand, h_vector, lpoly, series
from sohilbert.symdet import RingSpec, h_poly_codim3, krull_dim


def paper_display(m):
    """Numerator of the cover in the 2m x (2m+2) family, summed term by term."""
    first = {i: comb(i + 2, 2) for i in range(2 * m + 1)}
    second = {m + i: comb(2 * m + 2 - i, 2) for i in range(2 * m + 1)}
    top = 3 * m
    return tuple(first.get(i, 0) + second.get(i, 0) for i in range(top + 1))


@pytest.mark.parametrize(
    "t,n,hsR,expected",
    [
        (4, 6, (1, 3, 6, 10, 15), (1, 3, 21, 20, 21, 3, 1)),
        (2, 4, (1, 3, 6), (1, 9, 9, 1)),
        (6, 8, (1, 3, 6, 10, 15, 21, 28), (1, 3, 6, 38, 36, 36, 38, 6, 3, 1)),
    ],
)
def test_cover_series_closed_examples(t, n, hsR, expected):
    spec = RingSpec(t, n)
    s = cover_series_closed(spec, series(hsR, krull_dim(spec)))
    assert s.numerator == lpoly(*expected)
    # the added copy of p(t) starts in degree e
    e = (s.numerator - series(hsR, s.dim).numerator).valuation
    assert e == t // 2


def test_cover_series_closed_rejects_wrong_case():
    with pytest.raises(CoverError, match="PTwist"):
        cover_series_closed(RingSpec(2, 3), series((1, 1, 1), 5))
    with pytest.raises(CoverError, match="PTwist"):
        cover_series_closed(RingSpec(3, 5), series((1, 3, 6, 10), 12))


def test_cover_series_closed_rejects_inconsistent_series():
    with pytest.raises(CoverError, match="inconsistent input series"):
        cover_series_closed(RingSpec(2, 4), series((1, 3, 6, 10), 7))
    with pytest.raises(CoverError, match="inconsistent input series"):
        cover_series_closed(RingSpec(2, 4), series((1, 3, 6), 7, GradingTag.Y))
    with pytest.raises(CoverError, match="inconsistent input series"):
        cover_series_closed(RingSpec(2, 4), series((1, 3, 6, 10, 15, 21, 28, 36), 7))


def test_cover_series_dispatch():
    assert cover_series(RingSpec(4, 6)).numerator == lpoly(1, 3, 21, 20, 21, 3, 1)
    assert cover_series(RingSpec(2, 4)).numerator == lpoly(1, 9, 9, 1)
    s = cover_series(RingSpec(2, 3))
    assert s.numerator == lpoly(1, 4, 1)
    # palindromy predicted H(2) = 36; the oracle agrees
    tab = oracle.hilbert_function(RingSpec(2, 3), oracle.Label.GRAM_PLUS_MINORS, 3)
    assert tab.dims == expand(s, 3) == [1, 9, 36, 100]


def test_cover_series_m1_oracle_cross_check():
    tab = oracle.hilbert_function(RingSpec(2, 4), oracle.Label.GRAM_PLUS_MINORS, 3)
    assert tab.dims == expand(cover_series(RingSpec(2, 4)), 3)


def test_cover_series_odd_t():
    with pytest.raises(CoverError, match="no semistandard grading"):
        cover_series(RingSpec(3, 5))


def test_cover_series_budget():
    with pytest.raises(BudgetError):
        cover_series(RingSpec(2, 5), oracle_budget=3)


@pytest.mark.parametrize("m", range(1, 7))
def test_gap_law_and_unimodality(m):
    r = family_report(m)
    assert r.profile.h == paper_display(m)
    assert r.gap == m - 1
    assert r.profile.unimodal == (m <= 1)
    assert r.profile.palindrome
    assert r.a_invariant_Y == -r.spec.t * r.spec.n
    assert r.series.a_invariant == -r.spec.t * r.spec.n // 2


def test_family_report_examples():
    assert family_report(2).profile.h == (1, 3, 21, 20, 21, 3, 1)
    assert family_report(1).profile.h == (1, 9, 9, 1)
    assert family_report(3).profile.h == (1, 3, 6, 38, 36, 36, 38, 6, 3, 1)


def test_family_report_with_oracle():
    r = family_report(1, with_oracle=True, oracle_budget=3)
    assert r.oracle_dims == (1, 16, 100, 400)


@pytest.mark.parametrize("t", [2, 4, 6, 8])
def test_palindrome_and_a_invariant_codim3(t):
    spec = RingSpec(t, t + 2)
    s = cover_series(spec)
    assert s.numerator.is_palindrome()
    assert s.a_invariant == -t * spec.n // 2


@pytest.mark.parametrize("t,n", [(2, 3), (2, 5), (2, 6)])
def test_palindrome_oracle_backed(t, n):
    # (2, 3) and (2, 5) reconstruct the cover itself; (2, 6) reconstructs R
    s = cover_series(RingSpec(t, n), oracle_budget=4)
    assert s.numerator.is_palindrome()
    assert s.a_invariant == -t * n // 2


@pytest.mark.parametrize("m", range(1, 6))
def test_direct_sum_consistency(m):
    spec = RingSpec(2 * m, 2 * m + 2)
    hsR = h_poly_codim3(spec)
    cov = family_report(m).series
    diff = cov.numerator - hsR.numerator
    assert diff.valuation >= 1
    h = h_vector(cov).h
    assert h[0] == 1
    if diff.valuation >= 2:
        assert h[1] == comb(spec.n + 1, 2) - krull_dim(spec)


def test_veronese_examples():
    assert veronese_check(2, 4) and veronese_dims(2, 4) == [1, 2, 3, 4, 5]
    assert veronese_check(3, 3) and veronese_dims(3, 3) == [1, 3, 6, 10]
    assert veronese_check(1, 2) and veronese_dims(1, 2) == [1, 1, 1]
    assert series((1,), 3, GradingTag.Y).grading is GradingTag.Y
