"""Seeded batch runs of the checks, shared by ``ltlc verify`` and the tests."""

from __future__ import annotations

import random
import time
from collections.abc import Callable
from dataclasses import dataclass, field

from ltlc import ltl, prime
from ltlc.checks import (
    CheckReport,
    check_boxed_lemma,
    check_correspondence,
    check_inclusion_random,
    check_main_lemma,
    check_simplifier,
    check_tau_equivalence,
)
from ltlc.generate import (
    atom_pool,
    enumerate_boxed,
    random_fo,
    random_ltl,
    random_prime_negative,
    random_prime_positive,
    random_prime_untied,
    random_sahlqvist,
)
from ltlc.oracle import enumerate_lasso_frames
from ltlc.parser import parse_ltl, parse_ltlprime
from ltlc.printer import print_ltl, print_ltlprime

MAX_DRAWS_PER_ITEM = 50


@dataclass
class SuiteReport:
    suite: str
    total: int = 0
    passed: int = 0
    cases: int = 0
    failures: list[CheckReport] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures and self.passed == self.total

    def record(self, report: CheckReport) -> None:
        self.total += 1
        self.cases += report.cases
        if report.passed:
            self.passed += 1
        else:
            self.failures.append(report)

    def summary(self) -> str:
        verdict = "pass" if self.ok else "FAIL"
        return f"{self.suite}: {verdict}, {self.passed}/{self.total} ({self.cases} cases, {self.seconds:.1f}s)"

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "total": self.total,
            "passed": self.passed,
            "cases": self.cases,
            "seconds": round(self.seconds, 3),
            "failures": [f.to_json() for f in self.failures],
        }


def _timed(run: Callable[[SuiteReport], None], name: str) -> SuiteReport:
    report = SuiteReport(name)
    start = time.perf_counter()
    run(report)
    report.seconds = time.perf_counter() - start
    return report


def correspondence_suite(count=500, seed=7, depth=4, n_max=3, atoms=2) -> SuiteReport:
    names = atom_pool(atoms)

    def run(rep):
        rng = random.Random(seed)
        for _ in range(count):
            rep.record(check_correspondence(random_sahlqvist(rng, depth, names), n_max, names))

    return _timed(run, "correspondence")


def translation_suite(count=200, seed=7, depth=4, n_max=4, atoms=2) -> SuiteReport:
    names = atom_pool(atoms)

    def run(rep):
        rng = random.Random(seed)
        frames = list(enumerate_lasso_frames(n_max))
        for _ in range(count):
            rep.record(check_tau_equivalence(random_ltl(rng, depth, names), n_max, names, frames))

    return _timed(run, "translation")


def boxed_suite(max_ops=3, n_max=4) -> SuiteReport:
    def run(rep):
        frames = list(enumerate_lasso_frames(n_max))
        for A in enumerate_boxed(max_ops):
            merged = CheckReport("boxed", str(A))
            for frame in frames:
                r = check_boxed_lemma(A, frame)
                merged.cases += r.cases
                if not r.passed:
                    merged.fail(r.counterexample)
                    break
            rep.record(merged)

    return _timed(run, "boxed")


def monotonicity_suite(count=200, seed=7, depth=4, n_max=4, atoms=2, pairs=64) -> SuiteReport:
    """``count`` positive formulas (monotone) and ``count`` negative ones (antitone)."""
    names = atom_pool(atoms)

    def run(rep):
        rng = random.Random(seed)
        for i in range(count):
            phi = random_prime_positive(rng, depth, names)
            rep.record(check_inclusion_random(phi, n_max, pairs, seed=seed * 100003 + 2 * i))
            N = random_prime_negative(rng, depth, names)
            rep.record(check_inclusion_random(N, n_max, pairs, seed=seed * 100003 + 2 * i + 1, decreasing=True))

    return _timed(run, "monotonicity")


def main_lemma_suite(count=100, seed=7, depth=4, n_max=3, atoms=2) -> SuiteReport:
    """Shapes with no satisfying valuation on any frame are redrawn."""
    names = atom_pool(atoms)

    def run(rep):
        rng = random.Random(seed)
        draws = 0
        while rep.total < count:
            draws += 1
            if draws > MAX_DRAWS_PER_ITEM * count:
                raise RuntimeError("could not draw enough satisfiable untied shapes")
            r = check_main_lemma(random_prime_untied(rng, depth, names), n_max, names)
            if r.passed and r.cases == 0:
                continue
            rep.record(r)

    return _timed(run, "main-lemma")


def simplifier_suite(count=200, seed=7, depth=5, n_max=4) -> SuiteReport:
    def run(rep):
        rng = random.Random(seed)
        frames = list(enumerate_lasso_frames(n_max))
        for _ in range(count):
            rep.record(check_simplifier(random_fo(rng, depth, ("Q", "P")), n_max, frames))

    return _timed(run, "simplifier")


def roundtrip_suite(count=1000, seed=7, depth=5, atoms=3) -> SuiteReport:
    """``parse(print(phi)) == phi`` for LTL and LTL' syntax trees."""
    names = atom_pool(atoms)

    def run(rep):
        rng = random.Random(seed)
        for i in range(count):
            if i % 2 == 0:
                phi = random_ltl(rng, depth, names)
                text = print_ltl(phi)
                back = parse_ltl(text)
            else:
                phi = _random_prime(rng, depth, names)
                text = print_ltlprime(phi)
                back = parse_ltlprime(text)
            r = CheckReport("roundtrip", text, cases=1)
            r.passed = back == phi
            rep.record(r)

    return _timed(run, "roundtrip")


def _random_prime(rng: random.Random, depth: int, names) -> prime.Prime:
    roll = rng.random()
    if roll < 0.4:
        return random_prime_positive(rng, depth, names)
    if roll < 0.7:
        return random_prime_negative(rng, depth, names)
    return random_prime_untied(rng, depth, names)


SUITES = {
    "correspondence": correspondence_suite,
    "translation": translation_suite,
    "boxed": boxed_suite,
    "monotonicity": monotonicity_suite,
    "main-lemma": main_lemma_suite,
    "simplifier": simplifier_suite,
    "roundtrip": roundtrip_suite,
}


def check_formula(suite: str, phi: ltl.Ltl, n_max: int, atoms: list[str] | None = None) -> CheckReport:
    """Single-formula variants used when ``verify`` gets an explicit formula."""
    if suite == "correspondence":
        return check_correspondence(phi, n_max, atoms)
    if suite == "translation":
        return check_tau_equivalence(phi, n_max, atoms)
    raise ValueError(f"suite {suite!r} needs --random")
