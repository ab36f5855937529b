import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import dense_rank, random_system
from zinbiel.core import MultiDegree, Zin, bar_word, words_of_multidegree
from zinbiel.errors import CoordinateizerMismatch, UnindexedKey
from zinbiel.linalg import Coordinateizer, Span, intersect, kernel, rank_of, solve_in_terms_of, span_insert

F = Fraction
rows_strategy = st.integers(0, 2**32 - 1).map(lambda s: random_system(random.Random(s)))


def test_coordinates():
    coords = Coordinateizer([(1, 2), (2, 1)])
    assert coords.sparse(Zin.zero()) == {}
    assert coords.dense(coords.sparse(Zin.word(1, 2) - Zin.word(2, 1))) == [1, -1]
    full = Coordinateizer(words_of_multidegree(MultiDegree.from_list([1, 1, 1, 1])))
    row = full.sparse(bar_word((1, 2, 3, 4)))
    assert row == {full.index[(1, 2, 3, 4)]: 1, full.index[(1, 2, 4, 3)]: -1}


def test_unindexed_key():
    with pytest.raises(UnindexedKey):
        Coordinateizer([(1, 2)]).sparse(Zin.word(2, 1))


def test_insert_examples():
    s = Span(2)
    assert s.insert({}) is False and s.rank == 0
    assert s.insert([1, 0]) is True
    assert s.insert([1, 0]) is False
    assert s.insert([0, 1]) is True and s.rank == 2
    t, grew = span_insert(Span(2), [3, 4])
    assert grew and t.rank == 1


def test_rref_shape():
    s = Span.of(3, [[2, 4, 6], [1, 1, 0]])
    rows = s.rows()
    for i, (p, row) in enumerate(zip(s.pivots, rows)):
        assert row[p] == 1
        assert all(other.get(p, 0) == 0 for k, other in enumerate(rows) if k != i)


def test_solve_examples():
    vs = [[1, 0, 1], [0, 1, 1]]
    assert solve_in_terms_of(vs, [1, 0, 1]) == [1, 0]
    assert solve_in_terms_of(vs, [0, 0, 0]) == [0, 0]
    assert solve_in_terms_of(vs, [0, 0, 1]) is None


def test_intersect_examples():
    s = Span.of(2, [[1, 1]])
    assert intersect(s, s) == s
    assert intersect(s, Span.of(2, [[1, 0], [0, 1]])) == s
    assert intersect(Span.of(2, [[1, 0]]), Span.of(2, [[0, 1]])).rank == 0


def test_mismatched_coordinates():
    a = Span(Coordinateizer([(1,), (2,)]))
    b = Span(Coordinateizer([(2,), (1,)]))
    with pytest.raises(CoordinateizerMismatch):
        intersect(a, b)


@given(rows_strategy)
def test_rank_matches_oracle(system):
    rows, width = system
    assert rank_of(rows, width) == dense_rank(rows, width)


@given(rows_strategy)
def test_reinsert_is_noop(system):
    rows, width = system
    s = Span.of(width, rows)
    before = s.rows()
    for r in rows:
        assert s.insert(r) is False
    assert s.rows() == before


@given(rows_strategy, rows_strategy)
def test_dimension_formula(sys_a, sys_b):
    width = max(sys_a[1], sys_b[1])
    a, b = Span.of(width, sys_a[0]), Span.of(width, sys_b[0])
    meet = intersect(a, b)
    assert a.rank + b.rank == a.sum(b).rank + meet.rank
    assert a.contains_span(meet) and b.contains_span(meet)
    assert meet.rank <= min(a.rank, b.rank)


@given(rows_strategy, st.integers(0, 2**32 - 1))
def test_solve_reproduces_target(system, seed):
    rows, width = system
    rng = random.Random(seed)
    coeffs = [F(rng.randint(-3, 3), rng.randint(1, 2)) for _ in rows]
    target = {j: sum(c * r.get(j, 0) for c, r in zip(coeffs, rows)) for j in range(width)}
    sol = solve_in_terms_of(rows, target)
    assert sol is not None
    rebuilt = {j: sum(c * r.get(j, 0) for c, r in zip(sol, rows)) for j in range(width)}
    assert rebuilt == target


@given(rows_strategy)
def test_solve_none_iff_outside_span(system):
    rows, width = system
    target = {width - 1: F(1)}
    assert (solve_in_terms_of(rows, target) is None) == (not Span.of(width, rows).contains(target))


@given(rows_strategy)
def test_kernel_dimension_and_vectors(system):
    rows, width = system
    ker = kernel(rows)
    assert len(ker) == len(rows) - dense_rank(rows, width)
    for c in ker:
        assert all(sum(c.get(i, 0) * r.get(j, 0) for i, r in enumerate(rows)) == 0 for j in range(width))
