import itertools
import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import elements
from zinbiel.core import MultiDegree, Zin, bar_word, commutator, dynkin, zin_mul
from zinbiel.criteria import (
    corollary23_check,
    dim_st,
    enumerate_skew_basis,
    from_skew_coordinates,
    is_jordan,
    is_lie,
    jordan_symmetrize,
    lemma33_direct,
    lemma33_rhs,
    lemma34_direct,
    lemma34_rhs,
    lemma35_direct,
    lemma35_rhs,
    nested_anticommutator,
    skew_coordinates,
)
from zinbiel.errors import CorruptLie, DegreeOneSupport, DegreeTooSmall, NotLie, NotLieInput, ShapeMismatch
from zinbiel.suites import all_words, eval_bracket_tree, random_tree

x, y, z, w = 1, 2, 3, 4
W = Zin.word
X, Y, Z = Zin.gen(x), Zin.gen(y), Zin.gen(z)
MD = MultiDegree.from_list


def test_is_lie_examples():
    assert is_lie(W(x, y) - W(y, x))
    assert not is_lie(W(x, y) + W(y, x))
    assert is_lie(W(x, y, z) - W(x, z, y))
    assert is_lie(X)


def test_skew_coordinates_examples():
    assert skew_coordinates(bar_word((1, 2, 3, 4))) == {(1, 2, 3, 4): 1}
    assert skew_coordinates(commutator(X, Y)) == {(x, y): 1}
    f = commutator(commutator(X, Y), Z)
    assert from_skew_coordinates(skew_coordinates(f)) == f


def test_skew_coordinates_errors():
    with pytest.raises(NotLie):
        skew_coordinates(W(x, y))
    with pytest.raises(DegreeOneSupport):
        skew_coordinates(X + commutator(X, Y))
    # p fixes x.y.y, so a Lie element can never carry it; a nonzero coefficient is corrupt.
    with pytest.raises((CorruptLie, NotLie)):
        skew_coordinates(W(x, y, y))


@given(st.integers(0, 10**6))
def test_skew_coordinates_round_trip(seed):
    rng = random.Random(seed)
    t = random_tree(rng, 3, rng.randint(2, 5))
    f = eval_bracket_tree(t)
    assert from_skew_coordinates(skew_coordinates(f)) == f


@given(st.integers(0, 10**6))
def test_bracket_trees_are_lie(seed):
    rng = random.Random(seed)
    assert is_lie(eval_bracket_tree(random_tree(rng, 4, rng.randint(1, 6))))


def test_skew_basis_examples():
    assert enumerate_skew_basis(MD([1, 1])) == [(x, y)]
    assert enumerate_skew_basis(MD([2, 1])) == [(x, x, y)]
    assert enumerate_skew_basis(MD([1, 1, 1])) == [(x, y, z), (y, x, z), (z, x, y)]
    assert enumerate_skew_basis(MD([3])) == []


def test_dim_st_examples():
    assert dim_st(MD([1, 1, 1])) == 3
    assert dim_st(MD([2, 1])) == 1
    assert dim_st(MD([1, 1, 1, 1])) == 12
    assert dim_st(MD([4])) == 0


@pytest.mark.parametrize("fn", [enumerate_skew_basis, dim_st])
def test_small_degree_rejected(fn):
    with pytest.raises(DegreeTooSmall):
        fn(MD([1]))


@given(st.lists(st.integers(0, 3), min_size=1, max_size=4).filter(lambda c: 2 <= sum(c) <= 7))
def test_dim_formula_matches_enumeration(counts):
    d = MD(counts)
    assert len(enumerate_skew_basis(d)) == dim_st(d)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_multilinear_dimension(q):
    assert dim_st(MD([1] * q)) == math.factorial(q) // 2


def test_is_jordan_examples():
    assert is_jordan(W(x, y) + W(y, x))
    assert not is_jordan(W(x, y))
    assert is_jordan(jordan_symmetrize((x, x, y)))
    assert is_jordan(X)


def test_jordan_symmetrize_examples():
    assert jordan_symmetrize((x, y)) == W(x, y) + W(y, x)
    assert len(jordan_symmetrize((x, y, z)).terms) == 6
    assert jordan_symmetrize((x, x)) == W(x, x).scale(2)


@given(st.lists(st.integers(1, 3), min_size=1, max_size=5))
def test_symmetrize_equals_nested_anticommutator(letters):
    sym = jordan_symmetrize(letters)
    assert sym == nested_anticommutator(letters)
    assert dynkin(sym) == sym.scale(math.factorial(len(letters)))


@given(elements(max_len=4))
def test_is_jordan_agrees_with_symmetrized_sums(f):
    # Homogeneous Jordan components are multiples of the symmetrized sum.
    if is_jordan(f):
        for n in {len(wd) for wd in f.terms}:
            part = Zin({wd: c for wd, c in f.terms.items() if len(wd) == n})
            assert dynkin(part) == part.scale(math.factorial(n))


def test_lemma34_example():
    assert lemma34_rhs((x, y), z) == bar_word((x, y, z)) - bar_word((y, x, z)) - bar_word((z, x, y))
    assert lemma34_rhs((x, y), z) == lemma34_direct((x, y), z)


def test_lemma_degree_two():
    for u in [(x, y), (y, z), (x, z)]:
        for v in [(x, y), (z, w), (y, x)]:
            assert lemma33_rhs(u, v) == zin_mul(bar_word(u), bar_word(v)) == lemma33_direct(u, v)
            rhs = lemma35_rhs(u, v)
            assert rhs == commutator(bar_word(u), bar_word(v)) == lemma35_direct(u, v)
            assert from_skew_coordinates(skew_coordinates(rhs)) == rhs


@pytest.mark.parametrize("fn", [lemma33_rhs, lemma35_rhs])
def test_lemma_shape_mismatch(fn):
    with pytest.raises(ShapeMismatch):
        fn((x,), (x, y))


def test_lemma34_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        lemma34_rhs((x,), y)


def test_lemmas_exhaustive_total_seven():
    skew = [wd for wd in all_words(3, 5, min_len=2) if wd[-2] < wd[-1]]
    for u, v in itertools.product(skew, skew):
        if len(u) + len(v) > 7:
            continue
        assert lemma33_rhs(u, v) == lemma33_direct(u, v)
        assert lemma35_rhs(u, v) == lemma35_direct(u, v)
    for u in skew:
        if len(u) <= 6:
            for g in (x, y, z):
                assert lemma34_rhs(u, g) == lemma34_direct(u, g)


def test_corollary_examples():
    assert corollary23_check(X, commutator(X, Y), commutator(Y, Z))
    b = commutator(X, Y)
    assert corollary23_check(W(x, z, z), b, b)
    assert corollary23_check(W(x, y), commutator(X, Y), commutator(X, Z))


def test_corollary_rejects_non_lie():
    with pytest.raises(NotLieInput):
        corollary23_check(X, W(x, y), commutator(X, Y))
