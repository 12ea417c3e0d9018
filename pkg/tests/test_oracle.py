from math import comb

import pytest

from sohilbert import oracle
from sohilbert.oracle import (
    GeneratorSet,
    Guard,
    GuardError,
    Label,
    OracleError,
    generator_set,
    graded_dimension,
    hilbert_function,
    jacobian_dim,
    reconstruct_numerator,
)
from sohilbert.polys import PrimeField, gram_generators, y
from sohilbert.series import GradingTag, expand, lpoly, series
from sohilbert.symdet import RingSpec, krull_dim


def gens(t, n, label=Label.GRAM_ONLY, field=PrimeField()):
    return generator_set(RingSpec(t, n), label, field)


def test_graded_dimension_examples():
    assert graded_dimension(gens(1, 2), 2) == 3
    g = gens(2, 3, Label.GRAM_PLUS_MINORS)
    assert graded_dimension(g, 2) == 9
    assert graded_dimension(g, 4) == 36
    assert graded_dimension(g, 0) == 1
    assert graded_dimension(g, 3) == 0


def test_hilbert_function_examples():
    tab = hilbert_function(RingSpec(1, 2), Label.GRAM_ONLY, 3)
    assert tab.grading is GradingTag.RESCALED
    assert tab.dims == [1, 3, 5, 7] == expand(series((1, 1), 2), 3)
    tab = hilbert_function(RingSpec(2, 4), Label.GRAM_PLUS_MINORS, 2)
    assert tab.dims == [1, 16, 100] == expand(series((1, 9, 9, 1), 7), 2)
    tab = hilbert_function(RingSpec(1, 3), Label.GRAM_PLUS_MINORS, 2)
    assert tab.grading is GradingTag.Y
    assert tab.dims == [1, 3, 6]
    assert tab.values[0] == (0, 1)


def test_hilbert_function_refuses_odd_rescale():
    with pytest.raises(OracleError, match="not rescalable"):
        hilbert_function(RingSpec(1, 3), Label.GRAM_PLUS_MINORS, 2, rescale=True)


def test_reconstruct_examples():
    assert reconstruct_numerator([1, 16, 100, 400], 7, 3) == lpoly(1, 9, 9, 1)
    assert reconstruct_numerator([1, 3, 5], 2, 1) == lpoly(1, 1)
    assert reconstruct_numerator([1, 1, 1], 1, 0) == lpoly(1)


def test_reconstruct_tail_check():
    with pytest.raises(OracleError, match="dimension or degree bound wrong"):
        reconstruct_numerator([1, 3, 6, 10], 2, 0)
    with pytest.raises(OracleError):
        reconstruct_numerator([1, 3], 2, 3)


@pytest.mark.parametrize(
    "t,n,label,expected",
    [(1, 2, Label.GRAM_ONLY, 2), (2, 3, Label.GRAM_ONLY, 5), (2, 4, Label.GRAM_PLUS_MINORS, 7)],
)
def test_jacobian_examples(t, n, label, expected):
    assert jacobian_dim(gens(t, n, label)) == expected


@pytest.mark.parametrize("t,n", [(1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 4)])
def test_jacobian_same_for_cover(t, n):
    d = krull_dim(RingSpec(t, n))
    assert jacobian_dim(gens(t, n)) == jacobian_dim(gens(t, n, Label.GRAM_PLUS_MINORS)) == d


def test_guard_names_ambient_dimension():
    with pytest.raises(GuardError, match=r"C\(29, 23\)"):
        graded_dimension(gens(4, 6), 6, guard=Guard(ambient=1000))
    with pytest.raises(GuardError, match="multisets"):
        graded_dimension(gens(2, 4), 6, guard=Guard(multisets=10))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_dimension_bounded_by_ambient(n):
    g = gens(1, n, Label.GRAM_PLUS_MINORS)
    for D in range(5):
        amb = oracle.ambient_dimension(n, D)
        assert graded_dimension(g, D) == amb == comb(n - 1 + D, n - 1)
    g = gens(2, n + 1)
    for D in range(5):
        assert graded_dimension(g, D) <= oracle.ambient_dimension(2 * (n + 1), D)


def test_dense_and_sparse_paths_agree(monkeypatch):
    g = gens(2, 4, Label.GRAM_PLUS_MINORS)
    dense = [graded_dimension(g, D) for D in (2, 4, 6)]
    monkeypatch.setattr(oracle, "DENSE_LIMIT", 0)
    sparse = [graded_dimension(g, D) for D in (2, 4, 6)]
    assert dense == sparse == [16, 100, 400]


def test_generator_set_checks_degrees():
    spec = RingSpec(1, 2)
    g = gram_generators(spec)
    with pytest.raises(OracleError):
        GeneratorSet(spec, tuple(g), (2, 2, 3), Label.GRAM_ONLY)


def test_non_multihomogeneous_generators_use_one_block():
    spec = RingSpec(1, 2)
    a, b = y(spec, 1, 1), y(spec, 1, 2)
    gs = GeneratorSet(spec, (a + b, a * a), (1, 2), Label.GRAM_ONLY)
    assert [graded_dimension(gs, D) for D in range(4)] == [1, 1, 2, 2]


@pytest.mark.parametrize("t,n,label", [(2, 3, Label.GRAM_PLUS_MINORS), (2, 4, Label.GRAM_ONLY), (1, 3, Label.GRAM_ONLY)])
def test_prime_independence(t, n, label):
    tabs = [hilbert_function(RingSpec(t, n), label, 3, PrimeField(p)).dims for p in (32003, 65521, 104729)]
    assert tabs[0] == tabs[1] == tabs[2]

