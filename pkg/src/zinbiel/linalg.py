"""Exact rational linear algebra on sparse coordinate rows.

Rows are ``dict[int, Fraction]`` keyed by column.  A :class:`Span` keeps its
rows in reduced row-echelon form (leading coefficient 1, pivot columns cleared
in every other row), so reducing a vector is one pass over its pivot columns.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence, Union

from .errors import CoordinateizerMismatch, UnindexedKey

Row = dict[int, Fraction]
VectorLike = Union[Mapping[int, Fraction], Sequence]


class Coordinateizer:
    """Ordered index of basis keys (words or AC monomials) for one component."""

    def __init__(self, keys: Iterable[Hashable]):
        self.keys = list(keys)
        self.index = {k: i for i, k in enumerate(self.keys)}
        if len(self.index) != len(self.keys):
            raise ValueError("duplicate keys in coordinateizer")

    def __len__(self) -> int:
        return len(self.keys)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Coordinateizer) and self.keys == other.keys

    def __hash__(self) -> int:
        return hash(tuple(self.keys))

    def sparse(self, element) -> Row:
        """Sparse coordinates of anything exposing ``.terms`` (key -> scalar)."""
        row: Row = {}
        for key, c in element.terms.items():
            try:
                row[self.index[key]] = Fraction(c)
            except KeyError:
                raise UnindexedKey(f"{key!r} is not indexed") from None
        return row

    def dense(self, row: Mapping[int, Fraction]) -> list[Fraction]:
        out = [Fraction(0)] * len(self.keys)
        for i, c in row.items():
            out[i] = c
        return out

    def terms(self, row: Mapping[int, Fraction]) -> dict:
        return {self.keys[i]: c for i, c in row.items() if c}


def to_vector(element, coords: Coordinateizer) -> list[Fraction]:
    return coords.dense(coords.sparse(element))


def _as_row(v: VectorLike) -> Row:
    if isinstance(v, Mapping):
        return {int(i): Fraction(c) for i, c in v.items() if c}
    return {i: Fraction(c) for i, c in enumerate(v) if c}


def _axpy(target: Row, scale: Fraction, row: Row) -> None:
    """target -= scale * row, dropping zeros."""
    for j, c in row.items():
        v = target.get(j, 0) - scale * c
        if v:
            target[j] = v
        else:
            target.pop(j, None)


class Span:
    """Subspace of ``K^width`` held in reduced row-echelon form."""

    def __init__(self, width: int | Coordinateizer):
        if isinstance(width, Coordinateizer):
            self.coords: Coordinateizer | None = width
            self.width = len(width)
        else:
            self.coords = None
            self.width = int(width)
        self._rows: dict[int, Row] = {}  # pivot column -> row

    @classmethod
    def of(cls, width, vectors: Iterable[VectorLike]) -> "Span":
        s = cls(width)
        for v in vectors:
            s.insert(v)
        return s

    @classmethod
    def of_elements(cls, coords: Coordinateizer, elements: Iterable) -> "Span":
        s = cls(coords)
        for e in elements:
            s.insert(coords.sparse(e))
        return s

    def copy(self) -> "Span":
        other = Span(self.coords if self.coords is not None else self.width)
        other._rows = {p: dict(r) for p, r in self._rows.items()}
        return other

    @property
    def rank(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return self.rank

    @property
    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def rows(self) -> list[Row]:
        return [dict(self._rows[p]) for p in sorted(self._rows)]

    def basis_elements(self) -> list[dict]:
        """Rows translated back to ``key -> coefficient`` maps."""
        if self.coords is None:
            raise ValueError("span has no coordinateizer")
        return [self.coords.terms(r) for r in self.rows()]

    def reduce(self, v: VectorLike) -> Row:
        """Remainder of ``v`` after eliminating every pivot column."""
        r = _as_row(v)
        for p in [j for j in r if j in self._rows]:
            c = r.get(p)
            if c:
                _axpy(r, c, self._rows[p])
        return r

    def insert(self, v: VectorLike) -> bool:
        """Add ``v``; return True iff the span grew."""
        r = self.reduce(v)
        if not r:
            return False
        if max(r) >= self.width:
            raise ValueError("vector longer than span width")
        p = min(r)
        lead = r[p]
        if lead != 1:
            r = {j: c / lead for j, c in r.items()}
        for row in self._rows.values():
            c = row.get(p)
            if c:
                _axpy(row, c, r)
        self._rows[p] = r
        return True

    def insert_element(self, element) -> bool:
        return self.insert(self.coords.sparse(element))

    def contains(self, v: VectorLike) -> bool:
        return not self.reduce(v)

    def contains_element(self, element) -> bool:
        return self.contains(self.coords.sparse(element))

    def contains_span(self, other: "Span") -> bool:
        return all(self.contains(r) for r in other._rows.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Span):
            return NotImplemented
        return self.width == other.width and self._rows == other._rows

    def __repr__(self) -> str:
        return f"Span(width={self.width}, rank={self.rank})"

    def _check_compatible(self, other: "Span") -> None:
        if self.width != other.width or (
            self.coords is not None and other.coords is not None and self.coords != other.coords
        ):
            raise CoordinateizerMismatch("spans live in different coordinate spaces")

    def sum(self, other: "Span") -> "Span":
        self._check_compatible(other)
        s = self.copy()
        for r in other._rows.values():
            s.insert(r)
        return s

    def intersect(self, other: "Span") -> "Span":
        return intersect(self, other)


def span_insert(s: Span, v: VectorLike) -> tuple[Span, bool]:
    """Value-style insertion: returns a new span and whether it grew."""
    t = s.copy()
    grew = t.insert(v)
    return t, grew


def contains(s: Span, v: VectorLike) -> bool:
    return s.contains(v)


def rank_of(vectors: Iterable[VectorLike], width: int) -> int:
    return Span.of(width, vectors).rank


def solve_in_terms_of(vectors: Sequence[VectorLike], target: VectorLike) -> list[Fraction] | None:
    """Coefficients c with ``sum c_i * vectors[i] == target``, or None if none exist.

    Elimination carries a tag block recording each reduced row as a combination
    of the inputs; the tag columns sit past every data column.
    """
    rows = [_as_row(v) for v in vectors]
    tgt = _as_row(target)
    width = 1 + max([max(r) for r in rows if r] + [max(tgt) if tgt else -1, -1])
    n = len(rows)
    pivots: dict[int, Row] = {}
    for i, r in enumerate(rows):
        aug = dict(r)
        aug[width + i] = Fraction(1)
        for p in [j for j in aug if j in pivots and j < width]:
            c = aug.get(p)
            if c:
                _axpy(aug, c, pivots[p])
        data = [j for j in aug if j < width]
        if not data:
            continue
        p = min(data)
        lead = aug[p]
        aug = {j: c / lead for j, c in aug.items()}
        for row in pivots.values():
            c = row.get(p)
            if c:
                _axpy(row, c, aug)
        pivots[p] = aug
    residue = dict(tgt)
    combo: Row = {}
    for p in sorted(pivots):
        c = residue.get(p)
        if c:
            _axpy(residue, c, {j: v for j, v in pivots[p].items() if j < width})
            for j, v in pivots[p].items():
                if j >= width:
                    combo[j - width] = combo.get(j - width, 0) + c * v
    if residue:
        return None
    return [Fraction(combo.get(i, 0)) for i in range(n)]


def intersect(a: Span, b: Span) -> Span:
    """Zassenhaus: reduce rows (a|a) and (b|0); rows with empty left half span a ∩ b."""
    a._check_compatible(b)
    n = a.width
    big = Span(2 * n)
    for r in a._rows.values():
        row = dict(r)
        row.update({j + n: c for j, c in r.items()})
        big.insert(row)
    for r in b._rows.values():
        big.insert(r)
    out = Span(a.coords if a.coords is not None else n)
    for p, r in big._rows.items():
        if p >= n:
            out.insert({j - n: c for j, c in r.items()})
    return out


def kernel(vectors: Sequence[VectorLike]) -> list[Row]:
    """Basis of ``{c : sum c_i * vectors[i] == 0}`` as sparse rows over input positions."""
    rows = [_as_row(v) for v in vectors]
    width = 1 + max([max(r) for r in rows if r] + [-1])
    pivots: dict[int, Row] = {}
    out: list[Row] = []
    for i, r in enumerate(rows):
        aug = dict(r)
        aug[width + i] = Fraction(1)
        for p in [j for j in aug if j in pivots]:
            c = aug.get(p)
            if c:
                _axpy(aug, c, pivots[p])
        data = [j for j in aug if j < width]
        if not data:
            out.append({j - width: c for j, c in aug.items()})
            continue
        p = min(data)
        lead = aug[p]
        aug = {j: c / lead for j, c in aug.items()}
        for row in pivots.values():
            c = row.get(p)
            if c:
                _axpy(row, c, aug)
        pivots[p] = aug
    return out
