"""Command-line front end.

Exit codes: 0 success; 1 validation failure (inequivalence, failed
oracle verification); 2 parse/usage error; 3 a bound check reported a
VIOLATION.  All output is deterministic for identical invocations.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .boolean import complement, intersection_product, union_product
from .bounds import (
    DEFAULT_PAIRS,
    DEFAULT_SEED,
    Relation,
    check_bound,
    render_report_line,
    render_report_table,
    run_suite,
)
from .core import Alphabet, DfaParseError, PartialDfa, parse_dfa, render_dfa, render_dot, transition_counts
from .minimize import complexity, equivalent, minimize
from .oracle import brute_min_transitions, verify_lemma1
from .witnesses import WitnessFamily, WitnessSpec, build_witness


def _load(path: str) -> PartialDfa:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from None
    return parse_dfa(text)


def _write(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")


def _counts_line(label: str, dfa: PartialDfa) -> str:
    counts = transition_counts(dfa)
    per = " ".join(f"tc[{sym}]={counts.per_symbol[sym]}" for sym in dfa.alphabet)
    return f"{label} states={dfa.state_count} tc={counts.total} {per}"


def cmd_analyze(args: argparse.Namespace) -> int:
    dfa = _load(args.file)
    report = complexity(dfa)
    print(f"sc={report.sc}")
    print(f"tc={report.tc}")
    for sym in dfa.alphabet:
        print(f"tc[{sym}]={report.tc_per_symbol[sym]}")
    print(f"classes={report.nerode_classes}")
    _write(args.dot, render_dot(minimize(dfa)))
    return 0


def cmd_op(args: argparse.Namespace) -> int:
    a = _load(args.file)
    if args.op == "complement":
        result = complement(a)
    else:
        b = _load(args.file2)
        build = union_product if args.op == "union" else intersection_product
        result = build(a, b)
    minimized = minimize(result)
    print(_counts_line("constructed", result))
    print(_counts_line("minimized", minimized))
    _write(args.out, render_dfa(result))
    _write(args.min_out, render_dfa(minimized))
    _write(args.dot, render_dot(result))
    return 0


def _witness_spec(args: argparse.Namespace) -> WitnessSpec:
    family = WitnessFamily(args.family)
    alphabet = Alphabet(tuple(args.alphabet)) if args.alphabet else None
    params: dict = {}

    def need(flag: str, value):
        if value is None:
            raise ValueError(f"witness family {family.value!r} requires --{flag}")
        return value

    if family is WitnessFamily.UNION_SYMBOL:
        params = {"n": need("n", args.n), "k": need("k", args.k), "b": args.b, "c": args.c}
    elif family is WitnessFamily.UNION_MULTI:
        k_map = {}
        for item in args.loop or []:
            sym, _, count = item.partition("=")
            if not count or len(sym) != 1:
                raise ValueError(f"--loop expects SYMBOL=COUNT, got {item!r}")
            k_map[sym] = int(count)
        params = {"n": need("n", args.n), "k_map": k_map, "c": args.c}
    elif family is WitnessFamily.UNION_TOTAL:
        params = {"n": need("n", args.n), "loop_sym": args.loop_sym, "cycle_sym": args.cycle_sym}
    elif family is WitnessFamily.UNARY_CYCLE:
        return WitnessSpec(family, {"n": need("n", args.n)})  # fixed unary alphabet
    elif family is WitnessFamily.UNARY_SINGLETON:
        params = {"n": need("n", args.n)}
    elif family is WitnessFamily.CHAIN_STAR:
        params = {"m": need("m", args.m)}
    else:  # EPSILON
        params = {}
    if alphabet is not None:
        params["alphabet"] = alphabet
    return WitnessSpec(family, params)


def cmd_witness(args: argparse.Namespace) -> int:
    dfa = build_witness(_witness_spec(args))
    text = render_dfa(dfa)
    if args.out:
        _write(args.out, text)
    else:
        print(text, end="")
    _write(args.dot, render_dot(dfa))
    return 0


_CHECK_PARAM_FLAGS = (
    "n1", "n2", "k1", "k2", "ka1", "kb1", "ka2", "kb2",
    "n", "m", "sigma", "pairs", "seed", "max_states",
)


def cmd_check(args: argparse.Namespace) -> int:
    if args.all:
        reports = run_suite(max_n=args.max_n, seed=args.seed, pairs=args.pairs)
    else:
        if not args.bound:
            raise ValueError("pass a bound id or --all")
        params = {
            flag: getattr(args, flag)
            for flag in _CHECK_PARAM_FLAGS
            if getattr(args, flag) is not None
        }
        reports = [check_bound(args.bound, params)]
    if args.format == "lines":
        for report in reports:
            print(render_report_line(report))
    else:
        print(render_report_table(reports), end="")
    return 3 if any(r.relation is Relation.VIOLATION for r in reports) else 0


def cmd_oracle(args: argparse.Namespace) -> int:
    if args.oracle_cmd == "min-transitions":
        dfa = _load(args.file)
        result = brute_min_transitions(dfa, args.max_states)
        print(f"min_total={result.min_total}")
        for sym in dfa.alphabet:
            print(f"min[{sym}]={result.min_per_symbol[sym]}")
        _write(args.out, render_dfa(result.witness_dfa))
        return 0
    if args.oracle_cmd == "verify-lemma1":
        report = verify_lemma1(args.max_states, Alphabet(tuple(args.alphabet)))
        verdict = "pass" if report.ok else "fail"
        print(
            f"verify-lemma1 max_states={report.max_states} "
            f"alphabet={''.join(report.alphabet)} dfas={report.dfas_checked} "
            f"languages={report.languages} counterexamples={len(report.counterexamples)} "
            f"verdict={verdict}"
        )
        for item in report.counterexamples:
            print(item)
        return 0 if report.ok else 1
    # equiv
    a = _load(args.file)
    b = _load(args.file2)
    if equivalent(a, b):
        print("equivalent")
        return 0
    print("not equivalent")
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pdfa",
        description="Incomplete-DFA transition complexity toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="print sc/tc/per-symbol complexity of a .pdfa file")
    p_analyze.add_argument("file")
    p_analyze.add_argument("--dot", help="write the minimized DFA as DOT")
    p_analyze.set_defaults(func=cmd_analyze)

    for op, help_text in (
        ("union", "padded cross product recognizing the union"),
        ("intersect", "cross product recognizing the intersection"),
        ("complement", "accepting-sink completion recognizing the complement"),
    ):
        p = sub.add_parser(op, help=help_text)
        p.add_argument("file")
        if op != "complement":
            p.add_argument("file2")
        p.add_argument("--out", help="write the constructed DFA here")
        p.add_argument("--min-out", dest="min_out", help="write the minimized result here")
        p.add_argument("--dot", help="write the constructed DFA as DOT")
        p.set_defaults(func=cmd_op, op=op)

    p_wit = sub.add_parser("witness", help="emit a witness-family DFA as .pdfa")
    p_wit.add_argument("family", choices=[f.value for f in WitnessFamily])
    p_wit.add_argument("--n", type=int)
    p_wit.add_argument("--k", type=int)
    p_wit.add_argument("--m", type=int)
    p_wit.add_argument("--b", default="b", help="self-loop symbol (union-symbol)")
    p_wit.add_argument("--c", default="c", help="cycle symbol")
    p_wit.add_argument("--loop", action="append", metavar="SYM=K", help="union-multi loop counts")
    p_wit.add_argument("--loop-sym", dest="loop_sym", default="a")
    p_wit.add_argument("--cycle-sym", dest="cycle_sym", default="c")
    p_wit.add_argument("--alphabet", help="symbols in order, e.g. 'abc'")
    p_wit.add_argument("--out", help="write the witness here instead of stdout")
    p_wit.add_argument("--dot", help="write the witness as DOT")
    p_wit.set_defaults(func=cmd_witness)

    p_check = sub.add_parser("check", help="evaluate one bound or the whole suite")
    p_check.add_argument("bound", nargs="?", help="bound id, e.g. union-symbol-tight")
    p_check.add_argument("--all", action="store_true", help="run the full tightness+soundness suite")
    p_check.add_argument("--max-n", dest="max_n", type=int, default=5, help="grid limit for --all")
    for flag in _CHECK_PARAM_FLAGS:
        if flag in ("seed", "pairs"):
            continue
        p_check.add_argument(f"--{flag.replace('_', '-')}", dest=flag, type=int)
    p_check.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_check.add_argument("--pairs", type=int, default=DEFAULT_PAIRS)
    p_check.add_argument("--format", choices=["table", "lines"], default="table")
    p_check.set_defaults(func=cmd_check)

    p_oracle = sub.add_parser("oracle", help="brute-force enumeration checks")
    oracle_sub = p_oracle.add_subparsers(dest="oracle_cmd", required=True)
    p_min = oracle_sub.add_parser("min-transitions", help="exhaustive minimum transition counts")
    p_min.add_argument("file")
    p_min.add_argument("--max-states", dest="max_states", type=int, default=0,
                       help="search cap; 0 = sc+1 automatically")
    p_min.add_argument("--out", help="write a minimum-transition witness here")
    p_min.set_defaults(func=cmd_oracle)
    p_ver = oracle_sub.add_parser("verify-lemma1", help="certify the minimizer exhaustively")
    p_ver.add_argument("--max-states", dest="max_states", type=int, required=True)
    p_ver.add_argument("--alphabet", required=True, help="symbols in order, e.g. 'ab'")
    p_ver.set_defaults(func=cmd_oracle)
    p_eq = oracle_sub.add_parser("equiv", help="language equivalence of two .pdfa files")
    p_eq.add_argument("file")
    p_eq.add_argument("file2")
    p_eq.set_defaults(func=cmd_oracle)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DfaParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
