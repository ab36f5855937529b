"""Lie and Jordan membership in Zin(X), the skew-rcom basis and its dimension.

An element is Lie (lies in the commutator subalgebra generated by X) exactly
when ``p(f) == -f``.  The Lie elements of degree >= 2 have the basis
``bar(w)`` over words ``w`` whose last two letters strictly ascend.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction
from typing import Iterable, Sequence

from .core import (
    MultiDegree,
    Word,
    Zin,
    anticommutator,
    append_letters,
    bar,
    bar_word,
    commutator,
    dynkin,
    linear_combination,
    p_map,
    shuffle_words,
    words_of_multidegree,
    zin_mul,
)
from .errors import CorruptLie, DegreeOneSupport, DegreeTooSmall, NotLie, NotLieInput, ShapeMismatch


def is_skew_word(word: Sequence[int]) -> bool:
    return len(word) >= 2 and word[-2] < word[-1]


def is_lie(f: Zin) -> bool:
    return p_map(f) == -f


def skew_coordinates(f: Zin) -> dict[Word, Fraction]:
    """Coefficients ``c`` with ``f == sum c[w] * bar(w)`` over ascending-tail words.

    Generators are not covered; split off the degree-1 part first.
    """
    if any(len(w) == 1 for w in f.terms):
        raise DegreeOneSupport("skew coordinates exclude degree-1 terms")
    if not is_lie(f):
        raise NotLie("p(f) != -f")
    coords: dict[Word, Fraction] = {}
    for w, c in f.items():
        if w[-2] == w[-1]:
            raise CorruptLie(f"Lie element has a term on {w} with a repeated tail")
        if w[-2] < w[-1]:
            coords[w] = c
    return coords


def from_skew_coordinates(coords: dict[Word, Fraction]) -> Zin:
    return linear_combination((c, bar_word(w)) for w, c in coords.items())


def enumerate_skew_basis(d: MultiDegree) -> list[Word]:
    if d.total < 2:
        raise DegreeTooSmall("skew basis needs total degree >= 2")
    return [w for w in words_of_multidegree(d) if w[-2] < w[-1]]


def dim_st(d: MultiDegree) -> int:
    """Closed-form count of skew-rcom elements of multidegree ``d``."""
    if d.total < 2:
        raise DegreeTooSmall("dimension formula needs total degree >= 2")
    m = [c for _, c in d.counts]
    denom = math.prod(math.factorial(c) for c in m)
    top = math.factorial(d.total - 2)
    total = sum(Fraction(top * m[i] * m[j], denom) for i, j in itertools.combinations(range(len(m)), 2))
    assert total.denominator == 1
    return int(total)


def is_jordan(f: Zin) -> bool:
    """``D(f_n) == n! f_n`` on every total-degree component."""
    by_degree: dict[int, dict] = {}
    for w, c in f.terms.items():
        by_degree.setdefault(len(w), {})[w] = c
    for n, terms in by_degree.items():
        part = Zin(terms)
        if dynkin(part) != part.scale(math.factorial(n)):
            return False
    return True


def jordan_symmetrize(letters: Iterable[int]) -> Zin:
    """Sum of the words over all n! arrangements of ``letters`` (with multiplicity)."""
    letters = tuple(letters)
    if not letters:
        raise ValueError("empty multiset")
    return Zin(Counter(itertools.permutations(letters)))


def nested_anticommutator(letters: Sequence[int]) -> Zin:
    acc = Zin.gen(letters[0])
    for g in letters[1:]:
        acc = anticommutator(acc, Zin.gen(g))
    return acc


# --- rewrite formulas for products of skew-rcom elements -----------------------

def _sh(u: Word, v: Word) -> Zin:
    # Shuffle with the empty word as unit.
    if not u:
        return Zin.word(*v) if v else Zin.zero()
    if not v:
        return Zin.word(*u)
    return shuffle_words(u, v)


def _tail(f: Zin, *letters: int) -> Zin:
    return append_letters(f, letters)


def _check_shape(word: Sequence[int], minimum: int, what: str) -> Word:
    word = tuple(word)
    if len(word) < minimum:
        raise ShapeMismatch(f"{what} must have length >= {minimum}")
    return word


def lemma33_rhs(u: Sequence[int], v: Sequence[int]) -> Zin:
    """Expansion of ``bar(u) o bar(v)`` through shuffles; |u| >= 2, |v| >= 2."""
    u = _check_shape(u, 2, "u")
    v = _check_shape(v, 2, "v")
    m, n = len(u), len(v)
    head, a, b = u[: m - 2], u[-2], u[-1]
    swapped = head + (b, a)
    if n == 2:
        j1, j2 = v
        return (
            bar_word(u + (j1, j2))
            - bar_word(swapped + (j1, j2))
            + _tail(_sh(head + (a,), (j1,)), b, j2)
            - _tail(_sh(head + (b,), (j1,)), a, j2)
            - _tail(_sh(head + (a,), (j2,)), b, j1)
            + _tail(_sh(head + (b,), (j2,)), a, j1)
        )
    vh, c, d = v[: n - 2], v[-2], v[-1]
    return (
        bar(_tail(_sh(u, vh), c, d))
        - bar(_tail(_sh(swapped, vh), c, d))
        + _tail(_sh(head + (a,), vh + (c,)), b, d)
        - _tail(_sh(head + (b,), vh + (c,)), a, d)
        - _tail(_sh(head + (a,), vh + (d,)), b, c)
        + _tail(_sh(head + (b,), vh + (d,)), a, c)
    )


def lemma34_rhs(u: Sequence[int], g: int) -> Zin:
    """Expansion of ``[bar(u), g]`` as a combination of bars; |u| >= 2."""
    u = _check_shape(u, 2, "u")
    if len(u) == 2:
        i1, i2 = u
        return bar_word((i1, i2, g)) - bar_word((i2, i1, g)) - bar_word((g, i1, i2))
    head, a, b = u[:-2], u[-2], u[-1]
    return (
        bar_word(u + (g,))
        - bar_word(head + (b, a, g))
        - bar(_tail(_sh((g,), head), a, b))
    )


def lemma35_rhs(u: Sequence[int], v: Sequence[int]) -> Zin:
    """Expansion of ``[bar(u), bar(v)]`` as a combination of bars; |u|, |v| >= 2."""
    u = _check_shape(u, 2, "u")
    v = _check_shape(v, 2, "v")
    if len(u) == 2 and len(v) == 2:
        i1, i2 = u
        j1, j2 = v
        return (
            bar(_tail(bar_word(u), j1, j2))
            - bar(_tail(bar_word(v), i1, i2))
            + bar(_tail(_sh((i1,), (j1,)), i2, j2))
            - bar(_tail(_sh((i1,), (j2,)), i2, j1))
            + bar(_tail(_sh((i2,), (j2,)), i1, j1))
            - bar(_tail(_sh((i2,), (j1,)), i1, j2))
        )
    uh, a, b = u[:-2], u[-2], u[-1]
    vh, c, d = v[:-2], v[-2], v[-1]
    return (
        bar(_tail(_sh(u, vh), c, d))
        - bar(_tail(_sh(uh + (b, a), vh), c, d))
        - bar(_tail(_sh(v, uh), a, b))
        + bar(_tail(_sh(vh + (d, c), uh), a, b))
        + bar(_tail(_sh(uh + (a,), vh + (c,)), b, d))
        - bar(_tail(_sh(uh + (b,), vh + (c,)), a, d))
        - bar(_tail(_sh(uh + (a,), vh + (d,)), b, c))
        + bar(_tail(_sh(uh + (b,), vh + (d,)), a, c))
    )


def lemma33_direct(u: Sequence[int], v: Sequence[int]) -> Zin:
    return zin_mul(bar_word(u), bar_word(v))


def lemma34_direct(u: Sequence[int], g: int) -> Zin:
    return commutator(bar_word(u), Zin.gen(g))


def lemma35_direct(u: Sequence[int], v: Sequence[int]) -> Zin:
    return commutator(bar_word(u), bar_word(v))


def corollary23_check(a: Zin, b: Zin, c: Zin) -> bool:
    """With b, c Lie: are ``abc - acb`` and ``bc - cb`` Lie?"""
    if not (is_lie(b) and is_lie(c)):
        raise NotLieInput("b and c must be Lie")
    first = zin_mul(zin_mul(a, b), c) - zin_mul(zin_mul(a, c), b)
    return is_lie(first) and is_lie(commutator(b, c))
