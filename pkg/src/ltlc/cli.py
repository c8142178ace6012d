"""``ltlc``: command-line front end.

Exit codes: 0 success, 1 negative verdict (not Sahlqvist, failed check),
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import os
import sys
from collections.abc import Sequence

from ltlc import __version__, fo, ltl
from ltlc import classify as cl
from ltlc.engine import correspondent
from ltlc.oracle import MAX_STATES
from ltlc.parser import ParseError, parse_ltl
from ltlc.printer import print_fo, print_ltl, print_ltlprime
from ltlc.serialize import (
    classify_to_json,
    correspond_to_json,
    dumps,
    error_to_json,
    shape_to_json,
)
from ltlc.standard import so_closure, st_ltl
from ltlc.suites import SUITES, check_formula
from ltlc.translate import tau

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2
MAX_ATOMS = 3


class _Style:
    def __init__(self, enabled: bool):
        self.enabled = enabled

    def _wrap(self, code: str, text: str) -> str:
        return f"\x1b[{code}m{text}\x1b[0m" if self.enabled else text

    def good(self, text: str) -> str:
        return self._wrap("32", text)

    def bad(self, text: str) -> str:
        return self._wrap("31", text)

    def dim(self, text: str) -> str:
        return self._wrap("2", text)


def _style(stream) -> _Style:
    flag = os.environ.get("LTLC_COLOR")
    if flag in ("0", "1"):
        return _Style(flag == "1")
    return _Style(hasattr(stream, "isatty") and stream.isatty())


class _Usage(Exception):
    pass


def _read_formula(args) -> str:
    text = args.formula
    if text is None or text == "-":
        text = sys.stdin.read()
    text = text.strip()
    if not text:
        raise _Usage("no formula given")
    args.text = text
    return text


def _report_parse_error(text: str, exc: ParseError, out) -> None:
    print(f"error: {exc}", file=out)
    print(f"  {text}", file=out)
    width = max(exc.span.end - exc.span.start, 1)
    print("  " + " " * exc.span.start + "^" * width, file=out)


def _emit(args, doc: dict, text_lines: list[str]) -> None:
    if args.json:
        print(dumps(doc))
    else:
        for line in text_lines:
            print(line)


def _shape_lines(shape, indent: str) -> list[str]:
    doc = shape_to_json(shape)
    return _shape_doc_lines(doc, indent)


def _shape_doc_lines(doc: dict, indent: str) -> list[str]:
    kind = doc["kind"]
    if kind in ("boxed", "negative"):
        return [f"{indent}{kind} {doc['formula']}"]
    if kind == "and":
        return [f"{indent}and"] + _shape_doc_lines(doc["left"], indent + "  ") + _shape_doc_lines(doc["right"], indent + "  ")
    if kind == "until":
        return (
            [f"{indent}until"]
            + _shape_doc_lines(doc["guard"], indent + "  guard: ")
            + _shape_doc_lines(doc["tail"], indent + "  ")
        )
    if kind == "fx":
        return [f"{indent}Fx[{doc['var']}]"] + _shape_doc_lines(doc["body"], indent + "  ")
    if kind == "next":
        return [f"{indent}X"] + _shape_doc_lines(doc["body"], indent + "  ")
    return [f"{indent}Gh[{doc['lo']},{doc['hi']}]"] + _shape_doc_lines(doc["body"], indent + "  ")


def cmd_classify(args) -> int:
    text = _read_formula(args)
    phi = parse_ltl(text)
    verdict = cl.sahlqvist_verdict(phi)
    style = _style(sys.stdout)
    if isinstance(verdict, cl.NotSahlqvistError):
        _emit(args, classify_to_json(text, verdict), [
            f"{print_ltl(phi)}: {style.bad('not Sahlqvist')}",
            f"  offender: {print_ltl(verdict.conjunct)}",
            f"  reason: {verdict.reason}",
        ])
        return EXIT_NEGATIVE
    lines = [f"{print_ltl(phi)}: {style.good('Sahlqvist')}, {len(verdict)} untied conjunct(s)"]
    for i, shape in enumerate(verdict, 1):
        lines.append(f"conjunct {i}:")
        lines.extend(_shape_lines(shape, "  "))
    _emit(args, classify_to_json(text, verdict), lines)
    return EXIT_OK


def cmd_translate(args) -> int:
    text = _read_formula(args)
    image = print_ltlprime(tau(parse_ltl(text)))
    _emit(args, {"command": "translate", "input": text, "tau": image}, [image])
    return EXIT_OK


def cmd_st(args) -> int:
    text = _read_formula(args)
    phi = parse_ltl(text)
    st = st_ltl(phi)
    out = print_fo(so_closure(st)) if args.so else print_fo(st)
    _emit(args, {"command": "st", "input": text, "st": out, "second_order": bool(args.so)}, [out])
    return EXIT_OK


def cmd_correspond(args) -> int:
    text = _read_formula(args)
    phi = parse_ltl(text)
    verdict = cl.sahlqvist_verdict(phi)
    if isinstance(verdict, cl.NotSahlqvistError):
        print(f"error: not Sahlqvist: offender {print_ltl(verdict.conjunct)} ({verdict.reason})", file=sys.stderr)
        if args.json:
            print(dumps(error_to_json("correspond", text, verdict)))
        return EXIT_NEGATIVE
    result = correspondent(phi, simplify=args.simplify)
    final = result.simplified if args.simplify else result.correspondent
    lines: list[str] = []
    if args.trace:
        style = _style(sys.stdout)
        for i, r in enumerate(result.conjunct_reports, 1):
            lines.append(style.dim(f"conjunct {i}: !({print_ltl(r.untied)})"))
            lines.append(f"  tau: {print_ltlprime(r.tau)}")
            lines.append(f"  st: {print_fo(r.st)}")
            m = r.minimal
            for atom in sorted(fo.atom_name(p) for p in fo.predicates(r.st)):
                lines.append(f"  minimal: {fo.pred_name(atom)}0({m.param}) ≡ {print_fo(m.get(atom).body)}")
            lines.append(f"  substituted: {print_fo(r.substituted)}")
        lines.append(f"correspondent: {print_fo(final)}")
    else:
        lines.append(print_fo(final))
    _emit(args, correspond_to_json(text, result, args.simplify), lines)
    return EXIT_OK


def _check_bounds(args) -> None:
    if not 1 <= args.max_states <= MAX_STATES:
        raise _Usage(f"--max-states must be between 1 and {MAX_STATES}")
    if not 1 <= args.atoms <= MAX_ATOMS:
        raise _Usage(f"--atoms must be between 1 and {MAX_ATOMS}")
    if args.random is not None and args.random < 0:
        raise _Usage("--random must be non-negative")
    if args.depth is not None and args.depth < 0:
        raise _Usage("--depth must be non-negative")


def _suite_kwargs(args) -> dict:
    name = args.suite
    kw: dict = {}
    if name != "boxed":
        kw["count"] = args.random
        kw["seed"] = args.seed
    if args.depth is not None:
        kw["max_ops" if name == "boxed" else "depth"] = args.depth
    if name not in ("roundtrip",):
        kw["n_max"] = args.max_states
    if name not in ("boxed", "simplifier"):
        kw["atoms"] = args.atoms
    return kw


def cmd_verify(args) -> int:
    _check_bounds(args)
    style = _style(sys.stdout)
    if args.formula is None and args.random is None and args.suite == "boxed":
        args.random = 0
    if args.random is not None:
        if args.formula is not None:
            raise _Usage("give either a formula or --random, not both")
        report = SUITES[args.suite](**_suite_kwargs(args))
        doc = {"command": "verify", "input": None, **report.to_json()}
        lines = [report.summary().replace("pass", style.good("pass"), 1).replace("FAIL", style.bad("FAIL"), 1)]
        for f in report.failures[:5]:
            lines.append(f"  counterexample for {f.subject}: {dumps(f.counterexample.to_json()) if f.counterexample else '-'}")
        _emit(args, doc, lines)
        return EXIT_OK if report.ok else EXIT_NEGATIVE
    text = _read_formula(args)
    phi = parse_ltl(text)
    if len(ltl.atoms(phi)) > MAX_ATOMS:
        raise _Usage(f"formula has more than {MAX_ATOMS} atoms")
    verdict = cl.sahlqvist_verdict(phi)
    if args.suite == "correspondence" and isinstance(verdict, cl.NotSahlqvistError):
        print(f"error: not Sahlqvist: offender {print_ltl(verdict.conjunct)} ({verdict.reason})", file=sys.stderr)
        if args.json:
            print(dumps(error_to_json("verify", text, verdict)))
        return EXIT_NEGATIVE
    try:
        rep = check_formula(args.suite, phi, args.max_states)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    doc = {"command": "verify", "input": text, "suite": args.suite, "ok": rep.passed, "report": rep.to_json()}
    verdict_word = style.good("pass") if rep.passed else style.bad("FAIL")
    lines = [f"{args.suite}: {verdict_word} ({rep.cases} cases, frames up to {args.max_states} states)"]
    if args.suite == "correspondence":
        corr = correspondent(phi).simplified
        doc["correspondent"] = print_fo(corr)
        lines.append(f"  correspondent: {print_fo(corr)}")
    if rep.counterexample is not None:
        lines.append(f"  counterexample: {dumps(rep.counterexample.to_json())}")
        lines.append(f"  detail: {rep.counterexample.detail}")
    _emit(args, doc, lines)
    return EXIT_OK if rep.passed else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ltlc", description="LTL Sahlqvist formulas and their first-order correspondents.")
    parser.add_argument("--version", action="version", version=f"ltlc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("formula", nargs="?", help="LTL formula; read from stdin when omitted or '-'")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    add("classify", cmd_classify, "Sahlqvist verdict and untied decomposition")
    add("translate", cmd_translate, "LTL' image of a formula")
    p = add("st", cmd_st, "standard translation to first-order logic")
    p.add_argument("--so", action="store_true", help="close universally over the predicates")
    p = add("correspond", cmd_correspond, "first-order correspondent of a Sahlqvist formula")
    p.add_argument("--trace", action="store_true", help="show each conjunct's intermediate results")
    p.add_argument("--simplify", action=argparse.BooleanOptionalAction, default=True)
    p = add("verify", cmd_verify, "check against the frame oracle")
    p.add_argument("--max-states", type=int, default=3, metavar="K")
    p.add_argument("--atoms", type=int, default=2, metavar="k")
    p.add_argument("--random", type=int, metavar="N", help="run a seeded random suite of N items")
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p.add_argument("--depth", type=int, metavar="D")
    p.add_argument("--suite", choices=sorted(SUITES), default="correspondence")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        text = getattr(args, "text", None)
        if args.json:
            print(dumps(error_to_json(args.command, text, exc)))
        _report_parse_error(text or "", exc, sys.stderr)
        return EXIT_USAGE
    except _Usage as exc:
        print(f"ltlc {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
