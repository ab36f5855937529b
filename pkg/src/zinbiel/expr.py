"""Expression language for Zinbiel elements.

Grammar, lowest precedence first::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '#') unary)*          left-associative
    unary   := '-' unary | atom
    atom    := NUMBER | NAME | NAME '(' args ')' | '[' expr ',' expr ']'
             | '{' expr ',' expr '}' | '(' expr ')'

``*`` is the Zinbiel product (scalar multiplication when one side is a
number), ``#`` the shuffle product, ``[f,g]`` the commutator, ``{f,g}`` the
anticommutator.  Calls: ``p(f)``, ``bar(f)``, ``D(f)``, ``J(f,g,h)``.
Numbers are integers or ``a/b``.  Juxtaposition is not multiplication.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .core import Alphabet, Zin, anticommutator, bar, commutator, dynkin, p_map, shuffle_mul, zin_mul
from .errors import ExprSyntaxError, ZinbielError

CALLS = {"p": 1, "bar": 1, "D": 1, "J": 3}

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<op>[-+*#\[\]{}(),]))"
)


class EvalError(ZinbielError):
    pass


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * #
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Bracket:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Brace:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple["Expr", ...]


Expr = Union[Num, Gen, Neg, BinOp, Bracket, Brace, Call]


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ExprSyntaxError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str) -> None:
        kind, val, pos = self.take()
        if val != value or kind != "op":
            raise ExprSyntaxError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def parse(self) -> Expr:
        e = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"unexpected {val!r} (use '*' for products)", pos)
        return e

    def expr(self) -> Expr:
        left = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            left = BinOp(op, left, self.term())
        return left

    def term(self) -> Expr:
        left = self.unary()
        while self.peek()[1] in ("*", "#") and self.peek()[0] == "op":
            op = self.take()[1]
            left = BinOp(op, left, self.unary())
        return left

    def unary(self) -> Expr:
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return Neg(self.unary())
        return self.atom()

    def atom(self) -> Expr:
        kind, val, pos = self.take()
        if kind == "num":
            return Num(Fraction(val))
        if kind == "name":
            if self.peek()[:2] == ("op", "("):
                if val not in CALLS:
                    raise ExprSyntaxError(f"unknown function {val!r}", pos)
                self.take()
                args = [self.expr()]
                while self.peek()[:2] == ("op", ","):
                    self.take()
                    args.append(self.expr())
                self.expect(")")
                if len(args) != CALLS[val]:
                    raise ExprSyntaxError(f"{val} takes {CALLS[val]} argument(s)", pos)
                return Call(val, tuple(args))
            if not re.fullmatch(r"[a-z][a-z0-9]*", val):
                raise ExprSyntaxError(f"bad generator name {val!r}", pos)
            return Gen(val)
        if kind == "op" and val in "[{":
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect("]" if val == "[" else "}")
            return Bracket(left, right) if val == "[" else Brace(left, right)
        if kind == "op" and val == "(":
            e = self.expr()
            self.expect(")")
            return e
        raise ExprSyntaxError(f"unexpected {val or 'end of input'!r}", pos)


def parse(text: str) -> Expr:
    return _Parser(text).parse()


def generators(e: Expr) -> list[str]:
    """Generator names in order of first appearance."""
    seen: list[str] = []

    def walk(node: Expr) -> None:
        if isinstance(node, Gen):
            if node.name not in seen:
                seen.append(node.name)
        elif isinstance(node, Neg):
            walk(node.arg)
        elif isinstance(node, (BinOp, Bracket, Brace)):
            walk(node.left)
            walk(node.right)
        elif isinstance(node, Call):
            for a in node.args:
                walk(a)

    walk(e)
    return seen


def _prec(e: Expr) -> int:
    if isinstance(e, BinOp):
        return 1 if e.op in "+-" else 2
    if isinstance(e, Neg):
        return 3
    return 4


def to_text(e: Expr) -> str:
    """Minimal-parenthesis rendering; ``parse(to_text(e)) == e``."""
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Gen):
        return e.name
    if isinstance(e, Neg):
        inner = to_text(e.arg)
        return "-" + (f"({inner})" if _prec(e.arg) < 3 else inner)
    if isinstance(e, BinOp):
        p = _prec(e)
        left = to_text(e.left)
        right = to_text(e.right)
        if _prec(e.left) < p:
            left = f"({left})"
        if _prec(e.right) <= p:
            right = f"({right})"
        sep = f" {e.op} " if p == 1 else e.op
        return left + sep + right
    if isinstance(e, Bracket):
        return f"[{to_text(e.left)},{to_text(e.right)}]"
    if isinstance(e, Brace):
        return f"{{{to_text(e.left)},{to_text(e.right)}}}"
    if isinstance(e, Call):
        return f"{e.name}(" + ",".join(to_text(a) for a in e.args) + ")"
    raise TypeError(e)


def evaluate(e: Expr, alphabet: Alphabet, extend: bool = True) -> Zin | Fraction:
    """Evaluate to an element (or a bare scalar for constant subexpressions)."""
    from .tortkara import jacobiator

    def elt(v, what: str) -> Zin:
        if not isinstance(v, Zin):
            raise EvalError(f"{what} needs an element, got the scalar {v}")
        return v

    def ev(node: Expr):
        if isinstance(node, Num):
            return node.value
        if isinstance(node, Gen):
            idx = alphabet.add(node.name) if extend else alphabet.index(node.name)
            return Zin.gen(idx)
        if isinstance(node, Neg):
            v = ev(node.arg)
            return -v
        if isinstance(node, BinOp):
            a, b = ev(node.left), ev(node.right)
            if node.op in "+-":
                if isinstance(a, Zin) != isinstance(b, Zin):
                    raise EvalError("cannot add a scalar to an element (Zin(X) has no unit)")
                return a + b if node.op == "+" else a - b
            if node.op == "*":
                if isinstance(a, Zin) and isinstance(b, Zin):
                    return zin_mul(a, b)
                return b.scale(a) if isinstance(b, Zin) else (a.scale(b) if isinstance(a, Zin) else a * b)
            return shuffle_mul(elt(a, "#"), elt(b, "#"))
        if isinstance(node, Bracket):
            return commutator(elt(ev(node.left), "[,]"), elt(ev(node.right), "[,]"))
        if isinstance(node, Brace):
            return anticommutator(elt(ev(node.left), "{,}"), elt(ev(node.right), "{,}"))
        if isinstance(node, Call):
            args = [elt(ev(a), node.name) for a in node.args]
            if node.name == "p":
                return p_map(args[0])
            if node.name == "bar":
                return bar(args[0])
            if node.name == "D":
                return dynkin(args[0])
            return jacobiator(*args)
        raise TypeError(node)

    return ev(e)


def eval_text(text: str, alphabet: Alphabet | None = None) -> tuple[Zin, Alphabet]:
    """Parse and evaluate; a fresh alphabet follows first-appearance order."""
    tree = parse(text)
    if alphabet is None:
        alphabet = Alphabet(generators(tree))
        extend = True
    else:
        extend = False
    value = evaluate(tree, alphabet, extend=extend)
    if not isinstance(value, Zin):
        raise EvalError("expression is a bare scalar, not an element")
    return value, alphabet
