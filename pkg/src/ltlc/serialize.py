"""JSON views of shapes, results and reports.

Every document carries a ``command`` key; the shipped schema
(``ltlc.schema.json``) dispatches on it.
"""

from __future__ import annotations

import json
from importlib import resources

from ltlc import classify as cl
from ltlc import ltl, prime
from ltlc.engine import ConjunctReport, CorrespondenceResult
from ltlc.parser import ParseError
from ltlc.printer import print_fo, print_ltl, print_ltlprime, print_term


def _text(phi) -> str:
    if isinstance(phi, ltl.Ltl):
        return print_ltl(phi)
    if isinstance(phi, prime.Prime):
        return print_ltlprime(phi)
    return print_fo(phi)


def shape_to_json(shape: cl.UntiedShape) -> dict:
    if isinstance(shape, cl.Boxed):
        return {"kind": "boxed", "formula": _text(shape.formula)}
    if isinstance(shape, cl.Negative):
        return {"kind": "negative", "formula": _text(shape.formula)}
    if isinstance(shape, cl.ConjNode):
        return {"kind": "and", "left": shape_to_json(shape.left), "right": shape_to_json(shape.right)}
    if isinstance(shape, cl.UntilNode):
        return {"kind": "until", "guard": shape_to_json(shape.guard), "tail": shape_to_json(shape.tail)}
    if isinstance(shape, cl.FxNode):
        return {"kind": "fx", "var": shape.var, "body": shape_to_json(shape.body)}
    if isinstance(shape, cl.NextNode):
        return {"kind": "next", "body": shape_to_json(shape.body)}
    if isinstance(shape, cl.GhatNode):
        return {
            "kind": "ghat",
            "lo": print_term(shape.lo, "@"),
            "hi": print_term(shape.hi, "@"),
            "body": shape_to_json(shape.body),
        }
    raise TypeError(f"not an untied shape: {shape!r}")


def classify_to_json(text: str, verdict) -> dict:
    if isinstance(verdict, cl.NotSahlqvistError):
        return {
            "command": "classify",
            "input": text,
            "sahlqvist": False,
            "offender": _text(verdict.conjunct),
            "reason": verdict.reason,
        }
    return {
        "command": "classify",
        "input": text,
        "sahlqvist": True,
        "conjuncts": [shape_to_json(s) for s in verdict],
    }


def conjunct_to_json(report: ConjunctReport) -> dict:
    minimal = report.minimal
    return {
        "untied": _text(report.untied),
        "tau": _text(report.tau),
        "shape": shape_to_json(report.analysis.shape),
        "st": _text(report.st),
        "minimal": {
            "param": minimal.param,
            "predicates": {atom: _text(d.body) for atom, d in minimal.defs.items()},
        },
        "substituted": _text(report.substituted),
    }


def correspond_to_json(text: str, result: CorrespondenceResult, simplified: bool) -> dict:
    final = result.simplified if simplified else result.correspondent
    return {
        "command": "correspond",
        "input": text,
        "simplified": simplified,
        "correspondent": _text(final),
        "conjuncts": [conjunct_to_json(r) for r in result.conjunct_reports],
    }


def error_to_json(command: str, text: str | None, exc: Exception) -> dict:
    err: dict = {"message": getattr(exc, "message", str(exc))}
    if isinstance(exc, ParseError):
        err["span"] = [exc.span.start, exc.span.end]
        err["expected"] = sorted(exc.expected)
    return {"command": command, "input": text, "error": err}


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)


def load_schema() -> dict:
    with resources.files("ltlc").joinpath("ltlc.schema.json").open(encoding="utf-8") as fh:
        return json.load(fh)
