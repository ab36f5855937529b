"""Seeded verification suites behind ``verify core`` and the acceptance tests."""
from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from .core import (
    MultiDegree,
    Zin,
    append_letters,
    bar,
    commutator,
    shuffle_mul,
    shuffle_words,
    word_zinbiel_mul,
    zin_mul,
)
from .criteria import (
    corollary23_check,
    dim_st,
    enumerate_skew_basis,
    is_jordan,
    is_lie,
    jordan_symmetrize,
    lemma33_direct,
    lemma33_rhs,
    lemma34_direct,
    lemma34_rhs,
    lemma35_direct,
    lemma35_rhs,
)
from .linalg import Span
from .magma import Tree, eval_tree, trees_on
from .report import Report
from .speciality import IdealPresentation, cohn_check, multidegrees_up_to, st_component, word_coords
from .tortkara import assert_jacobiator_convention, degree4_relation_check, verify_tortkara


def random_coeff(rng: random.Random) -> Fraction:
    num = 0
    while not num:
        num = rng.randint(-3, 3)
    return Fraction(num, rng.randint(1, 2))


def random_word(rng: random.Random, num_gens: int, length: int) -> tuple[int, ...]:
    return tuple(rng.randint(1, num_gens) for _ in range(length))


def random_element(rng: random.Random, num_gens: int, max_degree: int, max_terms: int = 3) -> Zin:
    """Nonzero element whose words have length in 1..max_degree."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            w = random_word(rng, num_gens, rng.randint(1, max_degree))
            terms[w] = terms.get(w, 0) + random_coeff(rng)
        f = Zin(terms)
        if f:
            return f


def random_degrees(rng: random.Random, count: int, total: int) -> list[int]:
    """``count`` positive degrees with sum <= total."""
    degs = [1] * count
    for _ in range(rng.randint(0, total - count)):
        degs[rng.randrange(count)] += 1
    return degs


def random_tree(rng: random.Random, num_gens: int, leaves: int) -> Tree:
    if leaves == 1:
        return rng.randint(1, num_gens)
    k = rng.randint(1, leaves - 1)
    return (random_tree(rng, num_gens, k), random_tree(rng, num_gens, leaves - k))


def eval_bracket_tree(t: Tree) -> Zin:
    return eval_tree(t, Zin.gen, commutator)


def riffle_oracle(u: tuple[int, ...], v: tuple[int, ...]) -> Zin:
    """Shuffles straight from the definition: choose which positions hold u."""
    n = len(u) + len(v)
    terms: dict = {}
    for pos in itertools.combinations(range(n), len(u)):
        word, iu, iv = [], iter(u), iter(v)
        chosen = set(pos)
        for k in range(n):
            word.append(next(iu) if k in chosen else next(iv))
        w = tuple(word)
        terms[w] = terms.get(w, 0) + 1
    return Zin(terms)


def all_words(num_gens: int, max_len: int, min_len: int = 1):
    for n in range(min_len, max_len + 1):
        yield from itertools.product(range(1, num_gens + 1), repeat=n)


def _tally(report: Report, name: str, total: int, failures: int) -> None:
    report.check(name, f"{total}/{total}", f"{total - failures}/{total}", passed=failures == 0)


def identity_suite(report: Report, rng: random.Random, trials: int, max_degree: int,
                   quad_trials: int | None = None, quad_degree: int = 3) -> None:
    bad = 0
    for _ in range(trials):
        d = random_degrees(rng, 3, max(3, max_degree))
        a, b, c = (random_element(rng, 3, k) for k in d)
        bad += bool(zin_mul(a, zin_mul(b, c)) - zin_mul(zin_mul(a, b) + zin_mul(b, a), c))
    _tally(report, "Zinbiel identity a(bc) = (ab+ba)c, random triples", trials, bad)

    assert_jacobiator_convention()
    gens = [Zin.gen(i) for i in range(1, 5)]
    bad2 = bad3 = bad4 = 0
    quads = list(itertools.product(gens, repeat=4))
    for q in quads:
        r2, r3 = verify_tortkara(*q)
        bad2 += bool(r2)
        bad3 += bool(r3)
        bad4 += bool(degree4_relation_check(*q))
    _tally(report, "Tortkara identity, all generator quadruples", len(quads), bad2)
    _tally(report, "linearized Tortkara identity, all generator quadruples", len(quads), bad3)
    _tally(report, "degree-4 relation, all generator quadruples", len(quads), bad4)

    quad_trials = trials if quad_trials is None else quad_trials
    bad2 = bad3 = bad4 = 0
    for _ in range(quad_trials):
        q = [random_element(rng, 3, quad_degree, max_terms=2) for _ in range(4)]
        r2, r3 = verify_tortkara(*q)
        bad2 += bool(r2)
        bad3 += bool(r3)
        bad4 += bool(degree4_relation_check(*q))
    _tally(report, f"Tortkara identity, random quadruples (degree <= {quad_degree})", quad_trials, bad2)
    _tally(report, f"linearized Tortkara identity, random quadruples (degree <= {quad_degree})", quad_trials, bad3)
    _tally(report, f"degree-4 relation, random quadruples (degree <= {quad_degree})", quad_trials, bad4)


def shuffle_suite(report: Report, rng: random.Random, trials: int, max_len: int) -> None:
    pairs = [(u, v) for u in all_words(2, max_len - 1) for v in all_words(2, max_len - len(u))]
    bad_def = bad_rec = bad_zin = 0
    for u, v in pairs:
        sh = shuffle_words(u, v)
        bad_def += sh != riffle_oracle(u, v)
        if len(u) == 1 and len(v) == 1:
            rec = Zin.word(*u, *v) + Zin.word(*v, *u)
        elif len(u) == 1:
            rec = append_letters(shuffle_words(u, v[:-1]), v[-1:]) + Zin.word(*v, *u)
        else:
            rest_v = shuffle_words(u, v[:-1]) if len(v) > 1 else Zin.word(*u)
            rec = append_letters(shuffle_words(u[:-1], v), u[-1:]) + append_letters(rest_v, v[-1:])
        bad_rec += sh != rec
        expect = Zin.word(*u, *v) if len(v) == 1 else append_letters(riffle_oracle(u, v[:-1]), v[-1:])
        bad_zin += word_zinbiel_mul(u, v) != expect
    _tally(report, f"shuffle matches riffle definition, |u|+|v| <= {max_len}", len(pairs), bad_def)
    _tally(report, f"shuffle merge recursion, |u|+|v| <= {max_len}", len(pairs), bad_rec)
    _tally(report, f"Zinbiel word product via shuffles, |u|+|v| <= {max_len}", len(pairs), bad_zin)

    bad = 0
    for _ in range(trials):
        a, b, c = (random_element(rng, 3, 2) for _ in range(3))
        bad += shuffle_mul(a, b) != shuffle_mul(b, a)
        bad += shuffle_mul(shuffle_mul(a, b), c) != shuffle_mul(a, shuffle_mul(b, c))
    _tally(report, "shuffle commutative and associative, random triples", trials, bad)


def lemma_suite(report: Report, max_total: int, num_gens: int = 3) -> None:
    checked = bad = 0
    for u in all_words(num_gens, max_total - 2, min_len=2):
        for v in all_words(num_gens, max_total - len(u), min_len=2):
            checked += 1
            bad += lemma33_rhs(u, v) != lemma33_direct(u, v)
    _tally(report, f"skew product expansion bar(u)*bar(v), total <= {max_total}", checked, bad)
    checked = bad = 0
    for u in all_words(num_gens, max_total - 1, min_len=2):
        for g in range(1, num_gens + 1):
            checked += 1
            bad += lemma34_rhs(u, g) != lemma34_direct(u, g)
    _tally(report, f"skew bracket with a generator, total <= {max_total}", checked, bad)
    checked = bad = 0
    for u in all_words(num_gens, max_total - 2, min_len=2):
        for v in all_words(num_gens, max_total - len(u), min_len=2):
            checked += 1
            rhs = lemma35_rhs(u, v)
            bad += rhs != lemma35_direct(u, v) or not is_lie(rhs)
    _tally(report, f"bracket of skew elements, total <= {max_total}", checked, bad)


def random_lie(rng: random.Random, num_gens: int, max_degree: int) -> Zin:
    f = Zin.zero()
    while not f:
        for _ in range(rng.randint(1, 2)):
            t = random_tree(rng, num_gens, rng.randint(1, max_degree))
            f = f + eval_bracket_tree(t).scale(random_coeff(rng))
    return f


def corollary_suite(report: Report, rng: random.Random, trials: int) -> None:
    bad = 0
    for _ in range(trials):
        a = random_element(rng, 3, 2)
        b = random_lie(rng, 3, 3)
        c = random_lie(rng, 3, 2)
        bad += not corollary23_check(a, b, c)
    _tally(report, "abc - acb and bc - cb Lie for Lie b, c", trials, bad)


def verify_core(max_degree: int = 6, trials: int = 50, seed: int = 0, lemma_total: int | None = None) -> Report:
    rng = random.Random(seed)
    report = Report(f"verify core (max-degree={max_degree}, trials={trials}, seed={seed})")
    identity_suite(report, rng, trials, max_degree, quad_degree=min(3, max_degree))
    shuffle_suite(report, rng, trials, min(8, max_degree + 2))
    lemma_suite(report, lemma_total or min(max_degree, 6))
    corollary_suite(report, rng, trials)
    return report


# --- subspace-level checks -------------------------------------------------------

def lie_criterion_random(rng: random.Random, trials: int, max_degree: int, num_gens: int) -> int:
    """Number of random bracket trees whose evaluation violates p(f) = -f."""
    bad = 0
    for _ in range(trials):
        t = random_tree(rng, num_gens, rng.randint(1, max_degree))
        bad += not is_lie(eval_bracket_tree(t))
    return bad


def bracket_span_matches(d: MultiDegree) -> tuple[int, int, bool]:
    """(rank of bracket evaluations, rank of skew bars, mutual containment)."""
    coords = word_coords(d)
    brackets = Span.of_elements(coords, (eval_bracket_tree(t) for t in trees_on(d.letters())))
    bars = st_component(d)
    return brackets.rank, bars.rank, brackets.contains_span(bars) and bars.contains_span(brackets)


def skew_basis_matches(d: MultiDegree) -> tuple[int, int, int]:
    """(enumerated size, closed formula, rank of bars)."""
    basis = enumerate_skew_basis(d)
    return len(basis), dim_st(d), st_component(d).rank


def jordan_component(d: MultiDegree) -> tuple[bool, int]:
    """(D(sym) == n! sym, rank of all nested anticommutators with content d)."""
    from .criteria import nested_anticommutator
    from .core import dynkin

    sym = jordan_symmetrize(d.letters())
    ok = dynkin(sym) == sym.scale(math.factorial(d.total)) and is_jordan(sym)
    orders = sorted(set(itertools.permutations(d.letters())))
    rank = Span.of_elements(word_coords(d), (nested_anticommutator(o) for o in orders)).rank
    return ok, rank


def compositions(max_total: int, max_parts: int, min_total: int = 2) -> list[MultiDegree]:
    """Multidegrees (m1..mq) with every mi >= 1, q <= max_parts."""
    out = []
    for q in range(1, max_parts + 1):
        for d in multidegrees_up_to(q, max_total, min_total):
            if len(d.counts) == q:
                out.append(d)
    return out


def random_two_generator_presentation(rng: random.Random, max_f_degree: int = 3) -> IdealPresentation:
    """Single generator ``bar(f o x o y)`` with ``f`` a random homogeneous element in x, y."""
    while True:
        n = rng.randint(1, max_f_degree)
        k = rng.randint(0, n)
        letters = [1] * k + [2] * (n - k)
        terms: dict = {}
        for _ in range(rng.randint(1, 3)):
            rng.shuffle(letters)
            w = tuple(letters)
            terms[w] = terms.get(w, 0) + random_coeff(rng)
        f = Zin(terms)
        if f:
            g = bar(append_letters(f, (1, 2)))
            if g:
                return IdealPresentation([g], label=f"bar(({f.format().replace(chr(10), ' ')}) x y)")


def two_generator_cohn_trials(seed: int, presentations: int, max_total: int) -> list[tuple[str, int, int]]:
    """(label, multidegrees checked, failures) per random presentation."""
    rng = random.Random(seed)
    out = []
    for _ in range(presentations):
        p = random_two_generator_presentation(rng)
        degrees = multidegrees_up_to(2, max_total)
        bad = sum(not cohn_check(p, d).holds for d in degrees)
        out.append((p.label, len(degrees), bad))
    return out
