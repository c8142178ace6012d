"""Acceptance suite: one test per criterion, each printing a single verdict line.

Run ``pytest tests/test_acceptance.py -v`` (the lines appear even under
capture) or ``python tests/test_acceptance.py`` for just the verdicts.
"""

from __future__ import annotations

import io
import sys
import time
from contextlib import redirect_stdout

import pytest

from ltlc import fo
from ltlc.checks import check_correspondence
from ltlc.cli import main as cli_main
from ltlc.engine import correspondent
from ltlc.oracle import FoEval, ValuationSpace, enumerate_lasso_frames, valid_states
from ltlc.parser import parse_ltl
from ltlc.suites import (
    boxed_suite,
    correspondence_suite,
    main_lemma_suite,
    monotonicity_suite,
    roundtrip_suite,
    simplifier_suite,
    translation_suite,
)
from ltlc.terms import EVAL, Succ

_LINES: list[str] = []


def _verdict(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}: {detail}"
    _LINES.append(line)
    print(line, flush=True)


def _truth(frame, phi: fo.Fo, s: int) -> bool:
    return bool(FoEval(ValuationSpace.single(frame, {})).eval(phi, {"w": s}))


def criterion_1() -> bool:
    start = time.perf_counter()
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli_main(["correspond", "!((!q) U q)"])
    text = buf.getvalue().strip()
    phi = parse_ltl("!((!q) U q)")
    corr = correspondent(phi).simplified
    states = equivalent = valid_somewhere = 0
    for frame in enumerate_lasso_frames(4):
        valid = valid_states(frame, phi)
        for s in range(frame.n):
            states += 1
            equivalent += not _truth(frame, corr, s)
            valid_somewhere += valid[s]
    report = check_correspondence(phi, 4, corr=corr)
    elapsed = time.perf_counter() - start
    ok = (
        code == 0 and text == "false" and equivalent == states and valid_somewhere == 0
        and report.passed and elapsed < 1.0
    )
    _verdict(1, "golden !((!q) U q)", ok,
             f"correspondent {text!r}, equivalent to false at {equivalent}/{states} states, "
             f"frame-valid nowhere, {elapsed:.2f}s (limit 1s)")
    return ok


def criterion_2() -> bool:
    rep = correspondence_suite(count=500, seed=7, depth=4, n_max=3, atoms=2)
    ok = rep.ok and rep.total == 500 and rep.seconds < 300
    _verdict(2, "correspondence theorem, 500 random Sahlqvist formulas", ok,
             f"{rep.passed}/{rep.total} pass, {len(rep.failures)} counterexamples, {rep.seconds:.1f}s (limit 300s)")
    return ok


def criterion_3() -> bool:
    rep = translation_suite(count=200, seed=7, depth=4, n_max=4, atoms=2)
    ok = rep.ok and rep.total == 200 and rep.seconds < 120
    _verdict(3, "translation equivalence, 200 random LTL formulas", ok,
             f"{rep.passed}/{rep.total} agree over {rep.cases} (frame, state) points, "
             f"{len(rep.failures)} discrepancies, {rep.seconds:.1f}s (limit 120s)")
    return ok


def criterion_4() -> bool:
    rep = boxed_suite(max_ops=3, n_max=4)
    ok = rep.ok and rep.total > 0
    _verdict(4, "boxed lemma, every boxed formula with up to 3 operators", ok,
             f"{rep.passed}/{rep.total} formulas agree on {rep.cases} (frame, state) points, "
             f"{len(rep.failures)} discrepancies, {rep.seconds:.1f}s")
    return ok


def criterion_5() -> bool:
    rep = monotonicity_suite(count=200, seed=7, depth=4, n_max=4, atoms=2)
    ok = rep.ok and rep.total == 400
    _verdict(5, "monotonicity of positive and antitonicity of negative formulas", ok,
             f"{rep.passed}/{rep.total} formulas, {len(rep.failures)} violations, {rep.seconds:.1f}s")
    return ok


def criterion_6() -> bool:
    rep = main_lemma_suite(count=100, seed=7, depth=4, n_max=3, atoms=2)
    ok = rep.ok and rep.total == 100
    _verdict(6, "main lemma, 100 satisfiable untied shapes", ok,
             f"{rep.passed}/{rep.total} shapes, {rep.cases} witnessed states, "
             f"{len(rep.failures)} violations, {rep.seconds:.1f}s")
    return ok


def criterion_7() -> bool:
    targets = [("!(X q & !q)", fo.Eq(EVAL, Succ(EVAL))), ("!(G q & F !q)", fo.Top())]
    parts, ok = [], True
    for text, target in targets:
        phi = parse_ltl(text)
        corr = correspondent(phi).simplified
        same = all(
            _truth(frame, corr, s) == _truth(frame, target, s)
            for frame in enumerate_lasso_frames(4) for s in range(frame.n)
        )
        report = check_correspondence(phi, 4, corr=corr)
        # the target itself must also pass, so equality with it is exact
        report_target = check_correspondence(phi, 4, corr=target)
        good = same and report.passed and report_target.passed
        ok &= good
        parts.append(f"{text} => {corr} ({'exact' if good else 'MISMATCH'})")
    _verdict(7, "derived correspondents at up to 4 states", ok, "; ".join(parts))
    return ok


def criterion_8() -> bool:
    rt = roundtrip_suite(count=1000, seed=7)
    simp = simplifier_suite(count=200, seed=7, n_max=4)
    ok = rt.ok and rt.total == 1000 and simp.ok and simp.total == 200
    _verdict(8, "parser round trip and simplifier soundness", ok,
             f"round trip {rt.passed}/{rt.total}; simplifier {simp.passed}/{simp.total} sound "
             f"over {simp.cases} (frame, assignment) points")
    return ok


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 9)])
def test_acceptance(criterion, capsys):
    # verdict lines go straight to the terminal, past pytest's capture
    with capsys.disabled():
        ok = criterion()
    assert ok


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
