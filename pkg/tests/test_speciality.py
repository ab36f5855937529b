import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zinbiel.core import Alphabet, MultiDegree, Zin, bar_word, commutator, zin_mul
from zinbiel.criteria import is_lie
from zinbiel.errors import DegreeTooSmall, NotLie, ZinbielError
from zinbiel.linalg import intersect
from zinbiel.speciality import (
    IdealPresentation,
    cohn_check,
    counterexample_certificate,
    counterexample_data,
    counterexample_presentation,
    multidegrees_up_to,
    st_component,
    st_ideal_component,
    word_coords,
    zin_ideal_component,
)
from zinbiel.suites import random_two_generator_presentation

x, y, z = 1, 2, 3
X, Y, Z = Zin.gen(x), Zin.gen(y), Zin.gen(z)
MD = MultiDegree.from_list
D121 = MD([1, 2, 1])


def test_st_component_ranks():
    assert st_component(MD([1, 1])).rank == 1
    assert st_component(MD([2, 1])).rank == 1
    assert st_component(MD([1, 1, 1])).rank == 3
    with pytest.raises(DegreeTooSmall):
        st_component(MD([1]))


def test_presentation_validation():
    with pytest.raises(NotLie):
        IdealPresentation([Zin.word(x, y)])
    with pytest.raises(ZinbielError):
        IdealPresentation([commutator(X, Y) + commutator(commutator(X, Y), X)])
    with pytest.raises(ZinbielError):
        IdealPresentation([Zin.zero()])


def test_st_ideal_examples():
    p = IdealPresentation([commutator(X, Y)])
    assert st_ideal_component(p, MD([1, 0, 1])).rank == 0
    assert st_ideal_component(p, MD([1, 1])).rank == 1
    g = counterexample_presentation()
    alpha = st_ideal_component(g, D121)
    data = counterexample_data()
    coords = word_coords(D121)
    brackets = [commutator(X, data["g1"]), commutator(Y, data["g2"]), commutator(Z, data["g3"])]
    assert alpha.rank == 3
    assert all(alpha.contains(coords.sparse(b)) for b in brackets)


def test_zin_ideal_examples():
    data = counterexample_data()
    p1 = IdealPresentation([data["g1"]])
    assert zin_ideal_component(p1, MD([1, 1, 1])).rank == 0
    span = zin_ideal_component(p1, D121)
    assert span.contains_element(zin_mul(X, data["g1"]))
    assert span.contains_element(zin_mul(data["g1"], X))
    assert zin_ideal_component(counterexample_presentation(), D121).contains_element(data["w"])


def test_certificate():
    report = counterexample_certificate()
    assert report.passed
    checks = {c.name: c.computed for c in report.checks}
    assert checks["rank{[x,g1],[y,g2],[z,g3]}"] == 3
    assert checks["rank after adjoining w"] == 4
    assert checks["solve w = l1[x,g1] + l2[y,g2] + l3[z,g3]"] == "no solution"
    assert checks["cohn inclusion at {x:1, y:2, z:1}"] == "fails"


def test_counterexample_fails_with_witness():
    verdict = cohn_check(counterexample_presentation(), D121)
    assert not verdict.holds and verdict.label == "fails"
    assert is_lie(verdict.witness)


def test_whole_degree_two_component_holds():
    p = IdealPresentation([commutator(X, Y)])
    assert cohn_check(p, MD([1, 1])).holds


def test_multidegrees_up_to():
    ds = multidegrees_up_to(2, 3)
    assert len(ds) == 3 + 4
    assert all(2 <= d.total <= 3 for d in ds)
    assert ds == sorted(ds, key=lambda m: (m.total, m.counts))


@given(st.integers(0, 10**6))
def test_ideal_inclusions(seed):
    rng = random.Random(seed)
    p = random_two_generator_presentation(rng, 2)
    for d in multidegrees_up_to(2, 5):
        alpha = st_ideal_component(p, d)
        st_d = st_component(d)
        assert st_d.contains_span(alpha)
        assert intersect(zin_ideal_component(p, d), st_d).contains_span(alpha)


@given(st.integers(0, 10**6))
def test_adding_generators_is_monotone(seed):
    rng = random.Random(seed)
    p = random_two_generator_presentation(rng, 2)
    q = IdealPresentation(p.generators + [random_two_generator_presentation(rng, 2).generators[0]])
    for d in multidegrees_up_to(2, 5):
        assert zin_ideal_component(q, d).contains_span(zin_ideal_component(p, d))
        assert st_ideal_component(q, d).contains_span(st_ideal_component(p, d))


def test_two_generator_quotients_special():
    rng = random.Random(7)
    for _ in range(10):
        p = random_two_generator_presentation(rng)
        assert all(cohn_check(p, d).holds for d in multidegrees_up_to(2, 6))
