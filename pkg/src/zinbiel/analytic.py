"""Integration-operator products on one-variable polynomials.

``a ⋆ b = b ∫∫a`` and ``a ⋄ b = b ∫∫a + (∫a)(∫b)``, with ``∫`` the integral
from 0 to x.  Polynomials are truncated at a degree cap; every value carries
an ``exact`` flag that drops to False as soon as a term above the cap is
discarded, and identity checks only count exact values.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import CapMismatch, CapTooSmall
from .report import Report


@dataclass(frozen=True)
class TruncPoly:
    coeffs: tuple[Fraction, ...]
    cap: int
    exact: bool = True

    @classmethod
    def make(cls, coeffs: Sequence, cap: int, exact: bool = True) -> "TruncPoly":
        cs = [Fraction(c) for c in coeffs]
        if any(cs[cap + 1:]):
            exact = False
        cs = cs[: cap + 1]
        while cs and not cs[-1]:
            cs.pop()
        return cls(tuple(cs), cap, exact)

    @classmethod
    def monomial(cls, k: int, cap: int, c=1) -> "TruncPoly":
        return cls.make([0] * k + [c], cap)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        # Value equality only; exactness is bookkeeping.
        if isinstance(other, TruncPoly):
            return self.coeffs == other.coeffs and self.cap == other.cap
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.coeffs, self.cap))

    def _check(self, other: "TruncPoly") -> None:
        if self.cap != other.cap:
            raise CapMismatch(f"caps differ: {self.cap} vs {other.cap}")

    def __add__(self, other: "TruncPoly") -> "TruncPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return TruncPoly.make([x + y for x, y in zip(a, b)], self.cap, self.exact and other.exact)

    def __neg__(self) -> "TruncPoly":
        return TruncPoly(tuple(-c for c in self.coeffs), self.cap, self.exact)

    def __sub__(self, other: "TruncPoly") -> "TruncPoly":
        return self + (-other)

    def scale(self, c) -> "TruncPoly":
        return TruncPoly.make([c * v for v in self.coeffs], self.cap, self.exact)

    def __mul__(self, other: "TruncPoly") -> "TruncPoly":
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return TruncPoly((), self.cap, self.exact and other.exact)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return TruncPoly.make(out, self.cap, self.exact and other.exact)

    def format(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "1" if k == 0 else ("x" if k == 1 else f"x^{k}")
            parts.append(f"{'+' if c > 0 else '-'}{abs(c)}*{mono}")
        return " ".join(parts)


def integrate(p: TruncPoly) -> TruncPoly:
    """x^k -> x^(k+1)/(k+1), dropping anything above the cap."""
    return TruncPoly.make([0] + [c / (k + 1) for k, c in enumerate(p.coeffs)], p.cap, p.exact)


def star_mul(a: TruncPoly, b: TruncPoly) -> TruncPoly:
    a._check(b)
    return b * integrate(integrate(a))


def diamond_mul(a: TruncPoly, b: TruncPoly) -> TruncPoly:
    a._check(b)
    return star_mul(a, b) + integrate(a) * integrate(b)


def commutator_with(mul: Callable) -> Callable:
    return lambda a, b: mul(a, b) - mul(b, a)


def jacobiator_with(br: Callable) -> Callable:
    return lambda a, b, c: br(br(a, b), c) + br(br(b, c), a) + br(br(c, a), b)


def zinbiel_residual(mul: Callable, a, b, c):
    """``a(bc) - (ab + ba)c`` for the right-Zinbiel identity."""
    return mul(a, mul(b, c)) - mul(mul(a, b) + mul(b, a), c)


def tortkara_residuals(br: Callable, a, b, c, d):
    J = jacobiator_with(br)
    r2 = br(br(a, b), br(c, b)) - br(J(a, b, c), b)
    r3 = br(br(a, b), br(c, d)) + br(br(a, d), br(c, b)) - br(J(a, b, c), d) - br(J(a, d, c), b)
    return r2, r3


def star_identity_residuals(a, b, c, d):
    """Residuals of ``a⋆(b⋆c) = b⋆(a⋆c)`` and the cyclic associator identity."""
    first = star_mul(a, star_mul(b, c)) - star_mul(b, star_mul(a, c))
    br = commutator_with(star_mul)

    def assoc(u, v, w):
        return star_mul(u, star_mul(v, w)) - star_mul(star_mul(u, v), w)

    second = assoc(br(a, b), c, d) + assoc(br(b, c), a, d) + assoc(br(c, a), b, d)
    return first, second


def random_poly(rng: random.Random, max_degree: int, cap: int) -> TruncPoly:
    deg = rng.randint(0, max_degree)
    coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(deg + 1)]
    if not any(coeffs):
        coeffs[-1] = Fraction(1)
    return TruncPoly.make(coeffs, cap)


def check_remark1(cap: int = 12, trials: int = 100, seed: int = 0) -> Report:
    """Exact checks on the ⋆ and ⋄ algebras; only truncation-free trials count."""
    if cap < 8:
        raise CapTooSmall("cap must be at least 8")
    rng = random.Random(seed)
    report = Report(f"integration algebras (cap={cap}, trials={trials}, seed={seed})")
    one = TruncPoly.make([1], cap)
    x = TruncPoly.make([0, 1], cap)

    def count(fn, arity: int, max_degree: int):
        """(exact trials, trials with nonzero residual) over random tuples."""
        used = bad = 0
        attempts = 0
        while used < trials and attempts < 20 * trials:
            attempts += 1
            args = [random_poly(rng, max_degree, cap) for _ in range(arity)]
            residuals = fn(*args)
            if not isinstance(residuals, tuple):
                residuals = (residuals,)
            if not all(r.exact for r in residuals):
                continue
            used += 1
            bad += any(bool(r) for r in residuals)
        return used, bad

    used, bad = count(lambda a, b, c: zinbiel_residual(diamond_mul, a, b, c), 3, 2)
    if used == 0:
        raise CapTooSmall("no truncation-free trial fits under the cap")
    report.check("diamond Zinbiel residual zero (exact trials)", f"{trials}/{trials}", f"{used - bad}/{used}",
                 passed=used == trials and bad == 0)

    lhs = star_mul(one, star_mul(one, one))
    rhs = star_mul(star_mul(one, one) + star_mul(one, one), one)
    report.check("star: 1*(1*1)", "+1/4*x^4", lhs.format())
    report.check("star: (1*1 + 1*1)*1", "+1/12*x^4", rhs.format())
    report.check("star is not Zinbiel (witness residual nonzero)", True, bool(lhs - rhs) and lhs.exact and rhs.exact)

    br_star = commutator_with(star_mul)
    br_diamond = commutator_with(diamond_mul)
    report.check("[1,x]_star", "+1/3*x^3", br_star(one, x).format())
    report.check("[1,x]_diamond", "+1/3*x^3", br_diamond(one, x).format())
    used, bad = count(lambda a, b: br_star(a, b) - br_diamond(a, b), 2, 4)
    report.check("[a,b]_star == [a,b]_diamond (exact trials)", f"{trials}/{trials}", f"{used - bad}/{used}",
                 passed=used == trials and bad == 0)

    used, bad = count(lambda a, b, c, d: star_identity_residuals(a, b, c, d), 4, 1)
    report.check("star identities residual zero (exact trials)", f"{trials}/{trials}", f"{used - bad}/{used}",
                 passed=used == trials and bad == 0)

    used, bad = count(lambda a, b, c, d: tortkara_residuals(br_star, a, b, c, d), 4, 1)
    report.check("(A,star)^(-) Tortkara residuals zero (exact trials)", f"{trials}/{trials}", f"{used - bad}/{used}",
                 passed=used == trials and bad == 0)
    return report
