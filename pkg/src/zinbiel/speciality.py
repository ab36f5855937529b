"""Cohn-criterion computations, one multidegree at a time.

For an ideal ``alpha`` of ST(X) given by homogeneous Lie generators, the
quotient ST(X)/alpha is special iff ``{alpha} ∩ ST(X) ⊆ alpha``, where
``{alpha}`` is the Zinbiel ideal generated by alpha.  Everything is
multigraded, so the inclusion is tested componentwise; a "holds" verdict only
covers the multidegrees actually checked.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .core import (
    Alphabet,
    MultiDegree,
    Zin,
    bar_word,
    commutator,
    multidegree,
    sub_multidegrees,
    words_of_multidegree,
    zin_mul,
)
from .criteria import enumerate_skew_basis, is_lie
from .errors import CertificateViolation, DegreeTooSmall, NotLie, ZinbielError
from .linalg import Coordinateizer, Span, intersect, solve_in_terms_of
from .report import Report


@dataclass
class IdealPresentation:
    generators: list[Zin]
    alphabet: Alphabet | None = None
    label: str = ""

    def __post_init__(self) -> None:
        for g in self.generators:
            if not g:
                raise ZinbielError("zero generator")
            if not is_lie(g):
                raise NotLie(f"generator {g!r} is not Lie")
            if not isinstance(multidegree(g), MultiDegree):
                raise ZinbielError("generators must be homogeneous")
        self._st_cache: dict[MultiDegree, Span] = {}
        self._zin_cache: dict[MultiDegree, Span] = {}

    def degrees(self) -> list[tuple[MultiDegree, Zin]]:
        return [(multidegree(g), g) for g in self.generators]


_coords_cache: dict[MultiDegree, Coordinateizer] = {}


def word_coords(d: MultiDegree) -> Coordinateizer:
    if d not in _coords_cache:
        _coords_cache[d] = Coordinateizer(words_of_multidegree(d))
    return _coords_cache[d]


def st_basis_elements(d: MultiDegree) -> list[Zin]:
    """Basis of ST(X) in multidegree ``d`` (the generator itself in degree one)."""
    if d.total == 1:
        return [Zin.gen(d.counts[0][0])]
    return [bar_word(w) for w in enumerate_skew_basis(d)]


def st_component(d: MultiDegree) -> Span:
    if d.total < 2:
        raise DegreeTooSmall("ST component needs total degree >= 2")
    return Span.of_elements(word_coords(d), st_basis_elements(d))


def _elements(span: Span) -> list[Zin]:
    return [Zin(terms) for terms in span.basis_elements()]


def st_ideal_component(p: IdealPresentation, d: MultiDegree) -> Span:
    """Component ``alpha_d``: generators of multidegree d plus ``[alpha_e, ST_{d-e}]``."""
    if d in p._st_cache:
        return p._st_cache[d]
    span = Span(word_coords(d))
    for gd, g in p.degrees():
        if gd == d:
            span.insert_element(g)
    for e in sorted(sub_multidegrees(d), key=lambda m: (m.total, m.counts)):
        if not any(e.contains(gd) for gd, _ in p.degrees()):
            continue
        lower = st_ideal_component(p, e)
        if not lower.rank:
            continue
        others = st_basis_elements(d - e)
        for a in _elements(lower):
            for b in others:
                span.insert_element(commutator(a, b))
    p._st_cache[d] = span
    return span


def zin_ideal_component(p: IdealPresentation, d: MultiDegree) -> Span:
    """Component of the two-sided Zinbiel ideal generated by the presentation."""
    if d in p._zin_cache:
        return p._zin_cache[d]
    span = Span(word_coords(d))
    for gd, g in p.degrees():
        if gd == d:
            span.insert_element(g)
    for e in sorted(sub_multidegrees(d), key=lambda m: (m.total, m.counts)):
        if not any(e.contains(gd) for gd, _ in p.degrees()):
            continue
        lower = zin_ideal_component(p, e)
        if not lower.rank:
            continue
        words = [Zin.word(*w) for w in words_of_multidegree(d - e)]
        for a in _elements(lower):
            for u in words:
                span.insert_element(zin_mul(a, u))
                span.insert_element(zin_mul(u, a))
    p._zin_cache[d] = span
    return span


@dataclass
class CohnVerdict:
    multidegree: MultiDegree
    holds: bool
    zin_ideal_rank: int
    st_rank: int
    intersection_rank: int
    st_ideal_rank: int
    witness: Zin | None = None

    @property
    def label(self) -> str:
        return "holds" if self.holds else "fails"


def cohn_check(p: IdealPresentation, d: MultiDegree) -> CohnVerdict:
    """Test ``{alpha}_d ∩ ST_d ⊆ alpha_d``; on failure report a witness."""
    zi = zin_ideal_component(p, d)
    st = st_component(d) if d.total >= 2 else Span(word_coords(d))
    inter = intersect(zi, st)
    alpha = st_ideal_component(p, d)
    witness = None
    for e in _elements(inter):
        if not alpha.contains_element(e):
            witness = e
            break
    return CohnVerdict(
        multidegree=d,
        holds=witness is None,
        zin_ideal_rank=zi.rank,
        st_rank=st.rank,
        intersection_rank=inter.rank,
        st_ideal_rank=alpha.rank,
        witness=witness,
    )


def multidegrees_up_to(num_gens: int, max_total: int, min_total: int = 2) -> list[MultiDegree]:
    """Every multidegree over generators 1..num_gens with total in range, canonical order."""
    out = []

    def rec(i: int, left: int, acc: list[int]) -> None:
        if i == num_gens:
            total = sum(acc)
            if min_total <= total:
                out.append(MultiDegree.from_list(acc))
            return
        for k in range(left + 1):
            rec(i + 1, left - k, acc + [k])

    rec(0, max_total, [])
    return sorted(set(out), key=lambda m: (m.total, m.counts))


# --- the three-generator certificate ------------------------------------------

X, Y, Z = 1, 2, 3


def counterexample_data() -> dict:
    g1 = bar_word((Y, Y, Z))
    g2 = bar_word((Y, X, Z))
    g3 = bar_word((Y, X, Y))
    w = bar_word((X, Y, Y, Z)) - bar_word((Y, Y, X, Z)) + bar_word((Z, Y, X, Y))
    return {"g1": g1, "g2": g2, "g3": g3, "w": w}


def counterexample_presentation() -> IdealPresentation:
    data = counterexample_data()
    return IdealPresentation(
        [data["g1"], data["g2"], data["g3"]],
        Alphabet(["x", "y", "z"]),
        label="<bar(yyz), bar(yxz), bar(yxy)>",
    )


def counterexample_certificate(strict: bool = True) -> Report:
    """Exact checks showing a three-generator quotient of ST(X) is not special."""
    data = counterexample_data()
    g1, g2, g3, w = data["g1"], data["g2"], data["g3"], data["w"]
    x, y, z = Zin.gen(X), Zin.gen(Y), Zin.gen(Z)
    alphabet = Alphabet(["x", "y", "z"])
    d = MultiDegree.from_list([1, 2, 1])
    coords = word_coords(d)
    report = Report("speciality counterexample: ST(x,y,z)/<g1,g2,g3>")
    report.note("g1 = bar(y.y.z), g2 = bar(y.x.z), g3 = bar(y.x.y)")
    report.note("w = bar(x.y.y.z) - bar(y.y.x.z) + bar(z.y.x.y)")
    combo = zin_mul(x, g1) - zin_mul(y, g2) + zin_mul(z, g3)
    report.check("w == x*g1 - y*g2 + z*g3", True, combo == w)
    report.check("p(w) == -w (w lies in ST)", True, is_lie(w))
    brackets = [commutator(x, g1), commutator(y, g2), commutator(z, g3)]
    vectors = [coords.sparse(b) for b in brackets]
    rank3 = Span.of(coords, vectors).rank
    rank4 = Span.of(coords, vectors + [coords.sparse(w)]).rank
    report.check("rank{[x,g1],[y,g2],[z,g3]}", 3, rank3)
    report.check("rank after adjoining w", 4, rank4)
    solution = solve_in_terms_of(vectors, coords.sparse(w))
    report.check("solve w = l1[x,g1] + l2[y,g2] + l3[z,g3]", "no solution",
                 "no solution" if solution is None else "solution " + str(solution))
    p = counterexample_presentation()
    alpha = st_ideal_component(p, d)
    report.check("rank alpha at {x:1, y:2, z:1}", 3, alpha.rank)
    report.check("alpha spanned by the three brackets", True,
                 all(alpha.contains(v) for v in vectors) and alpha.rank == rank3)
    verdict = cohn_check(p, d)
    report.check("cohn inclusion at {x:1, y:2, z:1}", "fails", verdict.label)
    if verdict.witness is not None:
        in_span = Span.of(coords, vectors + [coords.sparse(w)]).contains_element(verdict.witness)
        report.check("witness lies in alpha_d + span(w)", True, in_span)
        report.note("witness:\n" + verdict.witness.format(alphabet))
    if strict and not report.passed:
        raise CertificateViolation("counterexample certificate failed:\n" + report.render())
    return report
