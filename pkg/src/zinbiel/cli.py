"""Command-line entry point.

Exit codes: 0 when every check passes (or a predicate holds), 1 when a check
fails (or a predicate is false), 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .analytic import check_remark1
from .core import Alphabet, MultiDegree, Zin, multidegree
from .criteria import dim_st, enumerate_skew_basis, is_jordan, is_lie
from .errors import ExprSyntaxError, ZinbielError
from .expr import EvalError, evaluate, generators, parse
from .report import Report
from .speciality import IdealPresentation, cohn_check, counterexample_certificate, multidegrees_up_to
from .suites import verify_core
from .tortkara import (
    format_ac_terms,
    free_tortkara_multilinear_dim,
    left_normed_rank,
    s_identity_scan,
    two_generator_st_dim,
)

PROG = "zinbiel"


class UsageError(Exception):
    pass


# --- helpers ------------------------------------------------------------------

def parse_alphabet(text: str | None) -> Alphabet | None:
    if text is None:
        return None
    return Alphabet([part.strip() for part in text.split(",") if part.strip()])


def parse_multidegree(text: str) -> MultiDegree:
    try:
        counts = [int(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"bad multidegree {text!r}: expected comma-separated integers") from None
    if any(c < 0 for c in counts):
        raise UsageError("multidegree entries must be non-negative")
    return MultiDegree.from_list(counts)


def eval_expression(text: str, alphabet: Alphabet | None) -> tuple[Zin, Alphabet]:
    tree = parse(text)
    extend = alphabet is None
    alphabet = alphabet if alphabet is not None else Alphabet(generators(tree))
    value = evaluate(tree, alphabet, extend=extend)
    if not isinstance(value, Zin):
        raise EvalError("expression is a bare scalar, not an element")
    return value, alphabet


def read_generators(path: str, alphabet: Alphabet | None) -> tuple[list[Zin], Alphabet, list[str]]:
    """One expression per line; blank lines and ``;`` comments are skipped."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    extend = alphabet is None
    alphabet = alphabet if alphabet is not None else Alphabet([])
    gens, sources = [], []
    for lineno, raw in enumerate(lines, 1):
        text = raw.split(";", 1)[0].strip()
        if not text:
            continue
        try:
            value = evaluate(parse(text), alphabet, extend=extend)
        except ExprSyntaxError as exc:
            raise UsageError(f"{path}:{lineno}: {exc}") from None
        if not isinstance(value, Zin):
            raise UsageError(f"{path}:{lineno}: expression is a bare scalar")
        gens.append(value)
        sources.append(text)
    if not gens:
        raise UsageError(f"{path}: no generators")
    return gens, alphabet, sources


def emit(args, report: Report) -> int:
    print(report.to_json() if args.format == "json" else report.render())
    return 0 if report.passed else 1


def emit_value(args, key: str, value, text: str) -> None:
    if args.format == "json":
        print(json.dumps({key: value}, indent=2))
    else:
        print(text)


def element_lines(f: Zin, alphabet: Alphabet) -> list[str]:
    return f.format(alphabet).splitlines()


# --- commands -----------------------------------------------------------------

def cmd_eval(args) -> int:
    f, alphabet = eval_expression(args.expr, parse_alphabet(args.alphabet))
    emit_value(args, "element", element_lines(f, alphabet), f.format(alphabet))
    return 0


def cmd_is_lie(args) -> int:
    f, _ = eval_expression(args.expr, parse_alphabet(args.alphabet))
    ok = is_lie(f)
    emit_value(args, "lie", ok, "true" if ok else "false")
    return 0 if ok else 1


def cmd_is_jordan(args) -> int:
    f, _ = eval_expression(args.expr, parse_alphabet(args.alphabet))
    ok = is_jordan(f)
    emit_value(args, "jordan", ok, "true" if ok else "false")
    return 0 if ok else 1


def _degree_alphabet(args, d: MultiDegree) -> Alphabet:
    alphabet = parse_alphabet(args.alphabet)
    size = max((g for g, _ in d.counts), default=0)
    if alphabet is None:
        return Alphabet.default(size)
    if len(alphabet) < size:
        raise UsageError(f"alphabet has {len(alphabet)} names but the multidegree needs {size}")
    return alphabet


def cmd_skew_basis(args) -> int:
    d = parse_multidegree(args.multidegree)
    alphabet = _degree_alphabet(args, d)
    words = [alphabet.format_word(w) for w in enumerate_skew_basis(d)]
    emit_value(args, "basis", words, "\n".join(words) if words else "(empty)")
    return 0


def cmd_dim_st(args) -> int:
    d = parse_multidegree(args.multidegree)
    value = dim_st(d)
    emit_value(args, "dim", value, str(value))
    return 0


def cmd_verify_core(args) -> int:
    return emit(args, verify_core(args.max_degree, args.trials, args.seed))


def cmd_tortkara_mdim(args) -> int:
    value = free_tortkara_multilinear_dim(args.n)
    emit_value(args, "dim", value, str(value))
    return 0


def cmd_tortkara_scan(args) -> int:
    scan = s_identity_scan(args.n)
    report = Report(f"tortkara scan (n={args.n})")
    report.note(f"ambient anticommutative multilinear dimension: {scan.ambient_dim}")
    report.note(f"rank of Tortkara consequences: {scan.consequence_rank}")
    report.check("free Tortkara multilinear dimension", scan.special_dim, scan.free_dim)
    report.check("rank of evaluation into Zin", scan.special_dim, scan.evaluation_rank)
    report.check("kernel modulo consequences (s-identities)", 0, len(scan.kernel))
    for terms in scan.kernel:
        report.note("kernel element: " + format_ac_terms(terms))
    return emit(args, report)


def cmd_tortkara_two_gen(args) -> int:
    if args.max_degree < 2:
        raise UsageError("--max-degree must be at least 2")
    report = Report(f"tortkara two-gen (max-degree={args.max_degree})")
    for n in range(2, args.max_degree + 1):
        rank = left_normed_rank(n)
        report.check(f"n={n} rank of left-normed brackets", 2 ** (n - 2), rank)
        report.check(f"n={n} dim of ST(x,y) in degree n", 2 ** (n - 2), two_generator_st_dim(n))
    return emit(args, report)


def cmd_speciality_cohn(args) -> int:
    if args.max_total < 1:
        raise UsageError("--max-total must be positive")
    gens, alphabet, sources = read_generators(args.gens, parse_alphabet(args.alphabet))
    try:
        pres = IdealPresentation(gens, alphabet)
    except ZinbielError as exc:
        raise UsageError(f"{args.gens}: {exc}") from None
    report = Report(f"speciality cohn (max-total={args.max_total})")
    report.note("generators: " + "; ".join(sources))
    report.note("alphabet: " + ",".join(alphabet.names))
    report.note(f"bounded check: multidegrees of total 2..{args.max_total} only")
    min_gen = min(multidegree(g).total for g in gens)
    for d in multidegrees_up_to(len(alphabet), args.max_total, max(2, min_gen)):
        verdict = cohn_check(pres, d)
        report.check(f"cohn inclusion at {d.format(alphabet)}", "holds", verdict.label)
        if verdict.witness is not None:
            report.note("witness:\n" + verdict.witness.format(alphabet))
    return emit(args, report)


def cmd_speciality_counterexample(args) -> int:
    return emit(args, counterexample_certificate(strict=False))


def cmd_remark1(args) -> int:
    return emit(args, check_remark1(args.cap, args.trials, args.seed))


# --- parser -------------------------------------------------------------------

def _add_common(parser: argparse.ArgumentParser, default) -> None:
    parser.add_argument("--format", choices=["text", "json"], default="text" if default is None else default,
                        help="output format (default: text)")
    parser.add_argument("--alphabet", default=default, metavar="A,B,C",
                        help="generator order, overriding first appearance")


def build_parser() -> argparse.ArgumentParser:
    # Separate action objects: argparse parents share them, and defaults would leak.
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Exact computations in free Zinbiel algebras and their Tortkara and Jordan structures.",
    )
    _add_common(parser, None)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(parent, name, func, help_text):
        p = parent.add_parser(name, help=help_text, description=help_text, parents=[common])
        p.set_defaults(func=func)
        return p

    p = add(sub, "eval", cmd_eval, "evaluate an expression and print it in canonical form")
    p.add_argument("expr")
    p = add(sub, "is-lie", cmd_is_lie, "test p(f) = -f (exit 0 if Lie)")
    p.add_argument("expr")
    p = add(sub, "is-jordan", cmd_is_jordan, "test D(f) = n! f on each degree-n part (exit 0 if Jordan)")
    p.add_argument("expr")
    p = add(sub, "skew-basis", cmd_skew_basis, "list skew words (last two letters ascending) of a multidegree")
    p.add_argument("--multidegree", required=True, metavar="M1,M2,...")
    p = add(sub, "dim-st", cmd_dim_st, "dimension of the special Tortkara component of a multidegree")
    p.add_argument("--multidegree", required=True, metavar="M1,M2,...")

    verify = sub.add_parser("verify", help="verification suites")
    vsub = verify.add_subparsers(dest="suite", metavar="SUITE")
    vsub.required = True
    p = add(vsub, "core", cmd_verify_core, "identity, shuffle and skew-product checks")
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)

    tort = sub.add_parser("tortkara", help="free Tortkara algebra computations")
    tsub = tort.add_subparsers(dest="action", metavar="ACTION")
    tsub.required = True
    p = add(tsub, "mdim", cmd_tortkara_mdim, "dimension of the multilinear free Tortkara component")
    p.add_argument("-n", type=int, required=True)
    p = add(tsub, "scan", cmd_tortkara_scan, "search degree n for special identities")
    p.add_argument("-n", type=int, required=True)
    p = add(tsub, "two-gen", cmd_tortkara_two_gen, "independence of left-normed brackets in x, y")
    p.add_argument("--max-degree", type=int, default=9)

    special = sub.add_parser("speciality", help="speciality of quotients of ST(X)")
    ssub = special.add_subparsers(dest="action", metavar="ACTION")
    ssub.required = True
    p = add(ssub, "cohn", cmd_speciality_cohn, "bounded Cohn-criterion check for an ideal given by generators")
    p.add_argument("--gens", required=True, metavar="FILE")
    p.add_argument("--max-total", type=int, default=6)
    add(ssub, "counterexample", cmd_speciality_counterexample,
        "certificate that a three-generator quotient is not special")

    p = add(sub, "remark1", cmd_remark1, "checks on the integration products of polynomials")
    p.add_argument("--cap", type=int, default=12)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ExprSyntaxError as exc:
        source = getattr(args, "expr", None)
        print(f"{PROG}: syntax error: {exc}", file=sys.stderr)
        if source is not None:
            print(f"  {source}\n  {' ' * exc.pos}^", file=sys.stderr)
        return 2
    except (UsageError, ZinbielError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
