"""The commutator (Tortkara) side of Zin(X).

Identity verifiers run in Zin(X) under ``[f, g] = f o g - g o f``.  The free
Tortkara algebra is handled through its multilinear components: the magma of
anticommutative trees modulo the span of all consequences of the linearized
Tortkara identity.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .core import MultiDegree, Zin, commutator, words_of_multidegree
from .criteria import dim_st
from .errors import DegreeTooSmall
from .linalg import Coordinateizer, Row, Span, kernel
from .magma import (
    Ac,
    Tree,
    ac_jacobiator,
    eval_ac,
    format_tree,
    identity_assignment,
    multilinear_ac_basis,
    relabel,
    trees_on,
)

HALF = Fraction(1, 2)


def jacobiator(a: Zin, b: Zin, c: Zin) -> Zin:
    """``[[a,b],c] + [[b,c],a] + [[c,a],b]``."""
    return (
        commutator(commutator(a, b), c)
        + commutator(commutator(b, c), a)
        + commutator(commutator(c, a), b)
    )


def verify_tortkara(a: Zin, b: Zin, c: Zin, d: Zin) -> tuple[Zin, Zin]:
    """Residuals of the Tortkara identity and of its linearization."""
    C = commutator
    r2 = C(C(a, b), C(c, b)) - C(jacobiator(a, b, c), b)
    r3 = (
        C(C(a, b), C(c, d))
        + C(C(a, d), C(c, b))
        - C(jacobiator(a, b, c), d)
        - C(jacobiator(a, d, c), b)
    )
    return r2, r3


def degree4_relation_check(a: Zin, b: Zin, c: Zin, d: Zin) -> Zin:
    """Residual of ``(ab)(cd) = ½J(b,c,d)a − ½J(a,c,d)b − ½J(a,b,d)c + ½J(a,b,c)d``."""
    C = commutator
    rhs = (
        C(jacobiator(b, c, d), a)
        - C(jacobiator(a, c, d), b)
        - C(jacobiator(a, b, d), c)
        + C(jacobiator(a, b, c), d)
    )
    return C(C(a, b), C(c, d)) - rhs.scale(HALF)


def assert_jacobiator_convention() -> None:
    """The chosen Jacobiator sign makes both identities vanish on generators."""
    x, y, z, w = (Zin.gen(i) for i in range(1, 5))
    r2, r3 = verify_tortkara(x, y, z, w)
    if r2 or r3 or degree4_relation_check(x, y, z, w):
        raise AssertionError("Jacobiator convention does not certify the Tortkara identity")


def ac_tortkara_instance(a: Ac, b: Ac, c: Ac, d: Ac) -> Ac:
    """Linearized identity as an element of the free anticommutative magma."""
    return (
        (a * b) * (c * d)
        + (a * d) * (c * b)
        - ac_jacobiator(a, b, c) * d
        - ac_jacobiator(a, d, c) * b
    )


def _ordered_set_partitions(items: tuple[int, ...], k: int):
    """Assignments of ``items`` to k labeled nonempty blocks."""
    for labels in itertools.product(range(k), repeat=len(items)):
        if len(set(labels)) < k:
            continue
        blocks = [tuple(v for v, l in zip(items, labels) if l == b) for b in range(k)]
        yield blocks


@lru_cache(maxsize=None)
def _consequence_rows(n: int) -> tuple[tuple[tuple[Tree, Fraction], ...], ...]:
    """Reduced basis of the degree-n multilinear consequence space, as term tuples."""
    return tuple(tuple(terms.items()) for terms in tortkara_consequence_span(n).basis_elements())


def tortkara_consequence_span(n: int) -> Span:
    """Multilinear degree-n component of the T-ideal of the linearized identity.

    Generated by substitution instances whose four arguments are monomials
    partitioning x1..xn, together with every lower-degree consequence on a
    subset of the variables multiplied by a monomial in the rest.
    """
    if n < 4:
        raise DegreeTooSmall("the linearized Tortkara identity has degree 4")
    coords = Coordinateizer(multilinear_ac_basis(n))
    span = Span(coords)
    variables = tuple(range(1, n + 1))
    for blocks in _ordered_set_partitions(variables, 4):
        for args in itertools.product(*(trees_on(b) for b in blocks)):
            inst = ac_tortkara_instance(*(Ac.mono(t) for t in args))
            if inst:
                span.insert(coords.sparse(inst))
    for size in range(4, n):
        lower = _consequence_rows(size)
        for subset in itertools.combinations(variables, size):
            rest = tuple(v for v in variables if v not in subset)
            mapping = dict(zip(range(1, size + 1), subset))
            for row in lower:
                moved = Ac({relabel(t, mapping): c for t, c in row})
                for m in trees_on(rest):
                    prod = moved * Ac.mono(m)
                    if prod:
                        span.insert(coords.sparse(prod))
    return span


def free_tortkara_multilinear_dim(n: int) -> int:
    if n < 2:
        raise DegreeTooSmall("n must be >= 2")
    ambient = len(multilinear_ac_basis(n))
    if n < 4:
        return ambient
    return ambient - tortkara_consequence_span(n).rank


@dataclass
class ScanReport:
    n: int
    ambient_dim: int
    consequence_rank: int
    free_dim: int
    special_dim: int
    evaluation_rank: int
    kernel: list[dict[Tree, Fraction]] = field(default_factory=list)

    @property
    def kernel_empty(self) -> bool:
        return not self.kernel

    @property
    def consistent(self) -> bool:
        return self.kernel_empty == (self.free_dim == self.evaluation_rank)


def s_identity_scan(n: int) -> ScanReport:
    """Compare the free Tortkara multilinear component with its image in Zin(X).

    Kernel elements of the evaluation map that survive modulo the consequence
    span are identities of special Tortkara algebras that the linearized
    Tortkara identity does not imply.
    """
    if n < 2:
        raise DegreeTooSmall("n must be >= 2")
    basis = multilinear_ac_basis(n)
    words = Coordinateizer(words_of_multidegree(MultiDegree.from_list([1] * n)))
    assignment = identity_assignment(range(1, n + 1))
    images = [words.sparse(eval_ac(t, assignment)) for t in basis]
    evaluation = Span.of(len(words), images)
    if n >= 4:
        cons = tortkara_consequence_span(n).copy()
    else:
        cons = Span(Coordinateizer(basis))
    cons_rank = cons.rank
    survivors: list[dict[Tree, Fraction]] = []
    for row in kernel(images):
        if cons.insert(row):
            survivors.append({basis[i]: c for i, c in sorted(row.items())})
    return ScanReport(
        n=n,
        ambient_dim=len(basis),
        consequence_rank=cons_rank,
        free_dim=len(basis) - cons_rank,
        special_dim=math.factorial(n) // 2 if n >= 2 else 1,
        evaluation_rank=evaluation.rank,
        kernel=survivors,
    )


def format_ac_terms(terms: dict[Tree, Fraction], name=None) -> str:
    return " ".join(f"{'+' if c > 0 else '-'}{abs(c)}*{format_tree(t, name)}" for t, c in terms.items())


def left_normed_words(n: int) -> list[tuple[int, ...]]:
    """Letter sequences ``(1, 2, a3, ..., an)`` of the left-normed brackets in x=1, y=2."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return [(1, 2) + tail for tail in itertools.product((1, 2), repeat=n - 2)]


def left_normed_eval(letters: tuple[int, ...]) -> Zin:
    acc = Zin.gen(letters[0])
    for g in letters[1:]:
        acc = commutator(acc, Zin.gen(g))
    return acc


def left_normed_rank(n: int) -> int:
    """Rank of the evaluated left-normed brackets ``[[..[x,y],a3]..,an]``."""
    words = Coordinateizer(itertools.product((1, 2), repeat=n))
    return Span.of_elements(words, (left_normed_eval(w) for w in left_normed_words(n))).rank


def two_generator_st_dim(n: int) -> int:
    return sum(dim_st(MultiDegree.from_list([k, n - k])) for k in range(1, n))
