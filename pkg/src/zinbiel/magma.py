"""Free anticommutative magma: binary trees up to child swaps, with signs.

A tree is a leaf (positive int) or a pair ``(left, right)``.  In canonical
form every node has ``key(left) < key(right)``, where ``key`` orders first by
smallest leaf, so for multilinear trees the left child always holds the
smaller minimal leaf.  Trees whose two children coincide are zero.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Union

from .errors import UnassignedLeaf

Tree = Union[int, tuple]


def leaves(t: Tree) -> tuple[int, ...]:
    if isinstance(t, int):
        return (t,)
    return leaves(t[0]) + leaves(t[1])


@lru_cache(maxsize=None)
def tree_key(t: Tree) -> tuple:
    """Total order on trees: smallest leaf, then size, then preorder tokens (0 = node)."""
    return (min(leaves(t)), len(leaves(t)), _tokens(t))


def _tokens(t: Tree) -> tuple[int, ...]:
    if isinstance(t, int):
        return (t,)
    return (0,) + _tokens(t[0]) + _tokens(t[1])


@lru_cache(maxsize=None)
def ac_canonicalize(t: Tree) -> tuple[int, Tree | None]:
    """Return ``(sign, canonical tree)``, or ``(0, None)`` when the tree is zero."""
    if isinstance(t, int):
        return 1, t
    sl, l = ac_canonicalize(t[0])
    sr, r = ac_canonicalize(t[1])
    if not sl or not sr or l == r:
        return 0, None
    if tree_key(l) > tree_key(r):
        return -sl * sr, (r, l)
    return sl * sr, (l, r)


def format_tree(t: Tree, name: Callable[[int], str] | None = None) -> str:
    name = name or (lambda i: f"x{i}")
    if isinstance(t, int):
        return name(t)
    return f"[{format_tree(t[0], name)},{format_tree(t[1], name)}]"


class Ac:
    """Linear combination of canonical trees; ``*`` is the magma product."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Tree, Fraction] | None = None):
        out: dict[Tree, Fraction] = {}
        for t, c in (terms or {}).items():
            s, ct = ac_canonicalize(t)
            if s and c:
                v = out.get(ct, 0) + s * Fraction(c)
                if v:
                    out[ct] = v
                else:
                    out.pop(ct)
        self.terms = out

    @classmethod
    def mono(cls, t: Tree) -> "Ac":
        return cls({t: Fraction(1)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ac) and self.terms == other.terms

    def __add__(self, other: "Ac") -> "Ac":
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, 0) + c
        return Ac(out)

    def __neg__(self) -> "Ac":
        return Ac({t: -c for t, c in self.terms.items()})

    def __sub__(self, other: "Ac") -> "Ac":
        return self + (-other)

    def __rmul__(self, c) -> "Ac":
        return Ac({t: c * v for t, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Ac):
            return self.__rmul__(other)
        out: dict[Tree, Fraction] = {}
        for t, a in self.terms.items():
            for u, b in other.terms.items():
                out[(t, u)] = out.get((t, u), 0) + a * b
        return Ac(out)

    def __repr__(self) -> str:
        return "Ac(" + " ".join(f"{c:+}*{format_tree(t)}" for t, c in self.terms.items()) + ")"


def ac_jacobiator(a: Ac, b: Ac, c: Ac) -> Ac:
    return (a * b) * c + (b * c) * a + (c * a) * b


@lru_cache(maxsize=None)
def trees_on(letters: tuple[int, ...]) -> tuple[Tree, ...]:
    """Canonical nonzero trees whose leaf multiset is ``letters`` (sorted tuple)."""
    if len(letters) == 1:
        return (letters[0],)
    found = set()
    n = len(letters)
    # Each split of the multiset into two nonempty parts, via index subsets.
    seen_splits = set()
    for mask in range(1, (1 << n) - 1):
        if not mask & 1:
            continue  # letters[0] goes left; the other side comes from the swap
        left = tuple(letters[i] for i in range(n) if mask >> i & 1)
        right = tuple(letters[i] for i in range(n) if not mask >> i & 1)
        if (left, right) in seen_splits:
            continue
        seen_splits.add((left, right))
        for l in trees_on(left):
            for r in trees_on(right):
                s, t = ac_canonicalize((l, r))
                if s:
                    found.add(t)
    return tuple(sorted(found, key=tree_key))


def multilinear_ac_basis(n: int) -> list[Tree]:
    """All canonical monomials using each of 1..n exactly once."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return list(trees_on(tuple(range(1, n + 1))))


def relabel(t: Tree, mapping: Mapping[int, int]) -> Tree:
    if isinstance(t, int):
        return mapping[t]
    return (relabel(t[0], mapping), relabel(t[1], mapping))


def eval_tree(t: Tree, leaf_value: Callable[[int], object], product: Callable) -> object:
    if isinstance(t, int):
        return leaf_value(t)
    return product(eval_tree(t[0], leaf_value, product), eval_tree(t[1], leaf_value, product))


def eval_ac(m, assignment: Mapping[int, object], product: Callable | None = None):
    """Evaluate a tree (or an :class:`Ac` combination) with the commutator as product."""
    from .core import Zin, commutator, linear_combination

    product = product or commutator

    def leaf(i: int):
        try:
            return assignment[i]
        except KeyError:
            raise UnassignedLeaf(f"leaf {i} has no value") from None

    if isinstance(m, Ac):
        return linear_combination((c, eval_tree(t, leaf, product)) for t, c in m.terms.items())
    return eval_tree(m, leaf, product)


def identity_assignment(gens: Iterable[int]):
    from .core import Zin

    return {g: Zin.gen(g) for g in gens}
