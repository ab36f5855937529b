"""Free (right-)Zinbiel algebra on letters 1, 2, 3, ...

A word ``(i1, ..., in)`` stands for the left-normed product
``(((x_i1 o x_i2) o x_i3) ...) o x_in``; these words form a basis.  Elements
are finite rational combinations of words and are immutable.
"""
from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import AlphabetError, DegreeOneSupport

Word = tuple[int, ...]
Scalar = Union[int, Fraction]

NAME_RE = re.compile(r"[a-z][a-z0-9]*\Z")


def word_key(word: Word) -> tuple[int, Word]:
    """Canonical term order: total degree first, then lexicographic."""
    return (len(word), word)


class Alphabet:
    """Ordered generator names; position i (0-based) is generator index i+1."""

    def __init__(self, names: Sequence[str]):
        names = list(names)
        for name in names:
            if not NAME_RE.match(name):
                raise AlphabetError(f"bad generator name {name!r}")
        if len(set(names)) != len(names):
            raise AlphabetError("duplicate generator names")
        self.names = names
        self._index = {name: i + 1 for i, name in enumerate(names)}

    @classmethod
    def default(cls, size: int) -> "Alphabet":
        base = "xyzw"
        if size <= len(base):
            return cls(list(base[:size]))
        return cls([f"x{i}" for i in range(1, size + 1)])

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __repr__(self) -> str:
        return f"Alphabet({self.names!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise AlphabetError(f"unknown generator {name!r}") from None

    def add(self, name: str) -> int:
        """Index of ``name``, appending it if new."""
        if name not in self._index:
            if not NAME_RE.match(name):
                raise AlphabetError(f"bad generator name {name!r}")
            self.names.append(name)
            self._index[name] = len(self.names)
        return self._index[name]

    def name(self, index: int) -> str:
        if 1 <= index <= len(self.names):
            return self.names[index - 1]
        return f"x{index}"

    def parse_word(self, text: str) -> Word:
        """``"x.y.y"`` or, when every name is one character, ``"xyy"``."""
        if "." in text or not all(len(n) == 1 for n in self.names):
            return tuple(self.index(part) for part in text.split("."))
        return tuple(self.index(ch) for ch in text)

    def format_word(self, word: Word) -> str:
        return ".".join(self.name(i) for i in word)


@dataclass(frozen=True, order=True)
class MultiDegree:
    """Occurrence count of each generator; zero counts are never stored."""

    counts: tuple[tuple[int, int], ...]

    @classmethod
    def of_word(cls, word: Word) -> "MultiDegree":
        return cls(tuple(sorted(Counter(word).items())))

    @classmethod
    def from_mapping(cls, counts: Mapping[int, int]) -> "MultiDegree":
        if any(c < 0 for c in counts.values()):
            raise ValueError("negative count in multidegree")
        return cls(tuple(sorted((g, c) for g, c in counts.items() if c > 0)))

    @classmethod
    def from_list(cls, counts: Sequence[int]) -> "MultiDegree":
        """``[m1, m2, ...]`` gives m_i occurrences of generator i."""
        return cls.from_mapping({i + 1: c for i, c in enumerate(counts)})

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def letters(self) -> Word:
        """Sorted multiset of letters."""
        return tuple(g for g, c in self.counts for _ in range(c))

    def __sub__(self, other: "MultiDegree") -> "MultiDegree":
        mine = self.as_dict()
        for g, c in other.counts:
            mine[g] = mine.get(g, 0) - c
        return MultiDegree.from_mapping(mine)

    def __add__(self, other: "MultiDegree") -> "MultiDegree":
        mine = self.as_dict()
        for g, c in other.counts:
            mine[g] = mine.get(g, 0) + c
        return MultiDegree.from_mapping(mine)

    def contains(self, other: "MultiDegree") -> bool:
        mine = self.as_dict()
        return all(mine.get(g, 0) >= c for g, c in other.counts)

    def format(self, alphabet: Alphabet | None = None) -> str:
        name = alphabet.name if alphabet else (lambda i: f"x{i}")
        return "{" + ", ".join(f"{name(g)}:{c}" for g, c in self.counts) + "}"


class Mixed:
    """Marker returned by :func:`multidegree` for inhomogeneous elements."""

    def __repr__(self) -> str:
        return "MIXED"


MIXED = Mixed()


class Zin:
    """An element of the free Zinbiel algebra.

    ``f * g`` is the Zinbiel product when both sides are elements and scalar
    multiplication when one side is a number.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Word, Scalar] | None = None):
        clean: dict[Word, Fraction] = {}
        if terms:
            for w, c in terms.items():
                if c:
                    if not w:
                        raise ValueError("empty word is not an element of Zin(X)")
                    clean[tuple(w)] = Fraction(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Word, Fraction]) -> "Zin":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def word(cls, *letters: int) -> "Zin":
        return cls._raw({tuple(letters): Fraction(1)})

    @classmethod
    def gen(cls, index: int) -> "Zin":
        return cls.word(index)

    @classmethod
    def zero(cls) -> "Zin":
        return cls._raw({})

    @property
    def terms(self) -> Mapping[Word, Fraction]:
        return self._terms

    def items(self) -> list[tuple[Word, Fraction]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda t: word_key(t[0]))

    def support(self) -> list[Word]:
        return sorted(self._terms, key=word_key)

    def coeff(self, word: Word) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def degrees(self) -> set[int]:
        return {len(w) for w in self._terms}

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Zin):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "Zin") -> "Zin":
        if not isinstance(other, Zin):
            if other == 0:
                return self
            return NotImplemented
        return Zin._raw(_combine(self._terms, other._terms, 1))

    __radd__ = __add__

    def __sub__(self, other: "Zin") -> "Zin":
        if not isinstance(other, Zin):
            if other == 0:
                return self
            return NotImplemented
        return Zin._raw(_combine(self._terms, other._terms, -1))

    def __neg__(self) -> "Zin":
        return Zin._raw({w: -c for w, c in self._terms.items()})

    def scale(self, c: Scalar) -> "Zin":
        c = Fraction(c)
        if not c:
            return Zin.zero()
        return Zin._raw({w: c * v for w, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Zin):
            return zin_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __repr__(self) -> str:
        if not self._terms:
            return "Zin(0)"
        return "Zin(" + " ".join(
            f"{'+' if c > 0 else '-'}{abs(c)}*{''.join(map(str, w))}" for w, c in self.items()
        ) + ")"

    def format(self, alphabet: Alphabet | None = None) -> str:
        """Text format: one ``<sign><num>/<den> <letter>.<letter>...`` line per term."""
        if not self._terms:
            return "0"
        alphabet = alphabet or Alphabet.default(max(max(w) for w in self._terms))
        lines = []
        for w, c in self.items():
            sign = "+" if c > 0 else "-"
            lines.append(f"{sign}{abs(c.numerator)}/{c.denominator} {alphabet.format_word(w)}")
        return "\n".join(lines)

    @classmethod
    def parse_text(cls, text: str, alphabet: Alphabet) -> "Zin":
        """Inverse of :meth:`format`."""
        text = text.strip()
        if text == "0":
            return cls.zero()
        terms: dict[Word, Fraction] = {}
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            coeff, word = line.split()
            w = tuple(alphabet.index(n) for n in word.split("."))
            terms[w] = terms.get(w, Fraction(0)) + Fraction(coeff)
        return cls(terms)


def _combine(a: Mapping[Word, Fraction], b: Mapping[Word, Fraction], sign: int) -> dict:
    out = dict(a)
    for w, c in b.items():
        v = out.get(w, 0) + sign * c
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return out


def linear_combination(pairs: Iterable[tuple[Scalar, Zin]]) -> Zin:
    acc: dict[Word, Fraction] = {}
    for c, f in pairs:
        if not c:
            continue
        for w, v in f.terms.items():
            acc[w] = acc.get(w, 0) + c * v
    return Zin._raw({w: Fraction(v) for w, v in acc.items() if v})


# --- word level -------------------------------------------------------------

@lru_cache(maxsize=1 << 18)
def _shuffle_counts(u: Word, v: Word) -> Mapping[Word, int]:
    # Merge recursion: the last letter of a shuffle comes from u or from v.
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    out: dict[Word, int] = {}
    for w, c in _shuffle_counts(u[:-1], v).items():
        key = w + u[-1:]
        out[key] = out.get(key, 0) + c
    for w, c in _shuffle_counts(u, v[:-1]).items():
        key = w + v[-1:]
        out[key] = out.get(key, 0) + c
    return out


@lru_cache(maxsize=1 << 18)
def _zinbiel_counts(u: Word, v: Word) -> Mapping[Word, int]:
    if len(v) == 1:
        return {u + v: 1}
    last = v[-1:]
    return {w + last: c for w, c in _shuffle_counts(u, v[:-1]).items()}


def shuffle_words(u: Sequence[int], v: Sequence[int]) -> Zin:
    """Sum over all riffle interleavings of ``u`` and ``v``."""
    u, v = tuple(u), tuple(v)
    if not u or not v:
        raise ValueError("shuffle of empty word")
    return Zin._raw({w: Fraction(c) for w, c in _shuffle_counts(u, v).items()})


def word_zinbiel_mul(u: Sequence[int], v: Sequence[int]) -> Zin:
    """``u o v``: shuffle u with v minus its last letter, then append that letter."""
    u, v = tuple(u), tuple(v)
    if not u or not v:
        raise ValueError("product of empty word")
    return Zin._raw({w: Fraction(c) for w, c in _zinbiel_counts(u, v).items()})


def _integral(f: Zin) -> tuple[list[tuple[Word, int]], int]:
    """Integer numerators over a common denominator."""
    den = math.lcm(*(c.denominator for c in f.terms.values())) if f.terms else 1
    return [(w, c.numerator * (den // c.denominator)) for w, c in f.terms.items()], den


def _bilinear(f: Zin, g: Zin, table, sign: int = 0) -> Zin:
    """``table(f, g) + sign * table(g, f)`` extended bilinearly.

    Accumulates integers over a common denominator and divides once at the
    end; Fraction arithmetic in the inner loop dominates otherwise.
    """
    fi, df = _integral(f)
    gi, dg = _integral(g)
    acc: dict[Word, int] = {}
    get = acc.get
    for u, a in fi:
        for v, b in gi:
            ab = a * b
            for w, c in table(u, v).items():
                acc[w] = get(w, 0) + ab * c
            if sign:
                ab *= sign
                for w, c in table(v, u).items():
                    acc[w] = get(w, 0) + ab * c
    den = df * dg
    return Zin._raw({w: Fraction(c, den) for w, c in acc.items() if c})


def zin_mul(f: Zin, g: Zin) -> Zin:
    return _bilinear(f, g, _zinbiel_counts)


def shuffle_mul(f: Zin, g: Zin) -> Zin:
    return _bilinear(f, g, _shuffle_counts)


def commutator(f: Zin, g: Zin) -> Zin:
    return _bilinear(f, g, _zinbiel_counts, -1)


def anticommutator(f: Zin, g: Zin) -> Zin:
    return _bilinear(f, g, _zinbiel_counts, 1)


def append_letters(f: Zin, letters: Sequence[int]) -> Zin:
    """Right-multiply by generators one at a time: ``f o a1 o a2 ...`` (left-normed)."""
    suffix = tuple(letters)
    return Zin._raw({w + suffix: c for w, c in f.terms.items()})


# --- structural maps --------------------------------------------------------

def p_word(word: Word) -> tuple[int, Word]:
    """(sign, word) image of a basis word under p."""
    if len(word) == 1:
        return -1, word
    return 1, word[:-2] + (word[-1], word[-2])


def p_map(f: Zin) -> Zin:
    """Negate letters; swap the last two letters of longer words."""
    out: dict[Word, Fraction] = {}
    for w, c in f.terms.items():
        s, pw = p_word(w)
        out[pw] = out.get(pw, 0) + s * c
    return Zin._raw({w: c for w, c in out.items() if c})


def bar(f: Zin) -> Zin:
    """``f - p(f)``; undefined on generators."""
    if any(len(w) == 1 for w in f.terms):
        raise DegreeOneSupport("bar is only defined on words of length >= 2")
    return f - p_map(f)


def bar_word(word: Sequence[int]) -> Zin:
    return bar(Zin.word(*word))


@lru_cache(maxsize=4096)
def _dynkin_word(word: Word) -> Zin:
    acc = Zin.word(word[0])
    for letter in word[1:]:
        acc = anticommutator(acc, Zin.word(letter))
    return acc


def dynkin(f: Zin) -> Zin:
    """Send each word to the left-nested anticommutator of its letters."""
    return linear_combination((c, _dynkin_word(w)) for w, c in f.terms.items())


def multidegree(f: Zin) -> MultiDegree | Mixed | None:
    """Common multidegree of the support; ``None`` for zero, MIXED if inhomogeneous."""
    degs = {MultiDegree.of_word(w) for w in f.terms}
    if not degs:
        return None
    if len(degs) > 1:
        return MIXED
    return degs.pop()


def homogeneous_components(f: Zin) -> list[tuple[MultiDegree, Zin]]:
    parts: dict[MultiDegree, dict[Word, Fraction]] = {}
    for w, c in f.terms.items():
        parts.setdefault(MultiDegree.of_word(w), {})[w] = c
    return [
        (d, Zin._raw(terms))
        for d, terms in sorted(parts.items(), key=lambda kv: (kv[0].total, kv[0].counts))
    ]


def words_of_multidegree(d: MultiDegree) -> list[Word]:
    """All words with content ``d`` in canonical (lexicographic) order."""
    counts = d.as_dict()
    gens = sorted(counts)
    out: list[Word] = []

    def rec(prefix: list[int]) -> None:
        if len(prefix) == d.total:
            out.append(tuple(prefix))
            return
        for g in gens:
            if counts[g]:
                counts[g] -= 1
                prefix.append(g)
                rec(prefix)
                prefix.pop()
                counts[g] += 1

    if d.total:
        rec([])
    return out


def count_words(d: MultiDegree) -> int:
    n = math.factorial(d.total)
    for _, c in d.counts:
        n //= math.factorial(c)
    return n


def sub_multidegrees(d: MultiDegree) -> Iterator[MultiDegree]:
    """All nonzero multidegrees e <= d (componentwise), e != d."""
    gens = [g for g, _ in d.counts]
    ranges = [range(c + 1) for _, c in d.counts]

    def rec(i: int, acc: list[int]) -> Iterator[list[int]]:
        if i == len(gens):
            yield acc
            return
        for k in ranges[i]:
            yield from rec(i + 1, acc + [k])

    for combo in rec(0, []):
        e = MultiDegree.from_mapping(dict(zip(gens, combo)))
        if e.total and e != d:
            yield e
