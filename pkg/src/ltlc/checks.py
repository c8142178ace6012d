"""Exhaustive checks of the correspondence pipeline against the frame oracle.

Each check returns a :class:`CheckReport`; a failing report carries the
first counterexample found, in frame-enumeration order.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from ltlc import fo, ltl, prime
from ltlc.classify import UntiedShape, classify_ltlprime_untied, is_ltlprime_boxed, shape_formula
from ltlc.engine import analyse_untied, boxed_accessibility, correspondent, replace_negatives_with_top
from ltlc.oracle import (
    FoEval,
    LassoFrame,
    PrimeEval,
    ValuationSpace,
    enumerate_lasso_frames,
    first_bit,
    ltl_ext,
)
from ltlc.simplify import simplify_fo
from ltlc.terms import EVAL, Var, VarSupply
from ltlc.translate import tau


@dataclass
class Counterexample:
    frame: LassoFrame
    state: int
    valuation: dict[str, list[int]] = field(default_factory=dict)
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "n": self.frame.n,
            "succ": list(self.frame.succ),
            "valuation": {a: list(s) for a, s in self.valuation.items()},
            "state": self.state,
        }


@dataclass
class CheckReport:
    check: str
    subject: str
    passed: bool = True
    cases: int = 0
    skipped: int = 0
    counterexample: Counterexample | None = None

    def fail(self, cex: Counterexample) -> CheckReport:
        self.passed = False
        self.counterexample = cex
        return self

    def to_json(self) -> dict:
        out = {
            "check": self.check,
            "subject": self.subject,
            "passed": self.passed,
            "cases": self.cases,
            "skipped": self.skipped,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_json()
            out["detail"] = self.counterexample.detail
        return out


def _atoms_for(phi_atoms: Sequence[str], atoms: Sequence[str] | None) -> list[str]:
    out = list(atoms) if atoms is not None else []
    for a in phi_atoms:
        if a not in out:
            out.append(a)
    return out


def _frames(n_max: int, frames: Iterable[LassoFrame] | None) -> Iterable[LassoFrame]:
    return enumerate_lasso_frames(n_max) if frames is None else frames


def _truth_space(frame: LassoFrame) -> ValuationSpace:
    return ValuationSpace.single(frame, {})


def check_correspondence(
    phi: ltl.Ltl,
    n_max: int = 3,
    atoms: Sequence[str] | None = None,
    corr: fo.Fo | None = None,
    frames: Iterable[LassoFrame] | None = None,
) -> CheckReport:
    """Frame validity of ``phi`` at ``w`` against the first-order correspondent at ``w``."""
    if corr is None:
        corr = correspondent(phi).simplified
    if fo.predicates(corr):
        raise ValueError(f"correspondent still mentions predicates: {corr}")
    atoms = _atoms_for(ltl.atoms(phi), atoms)
    report = CheckReport("correspondence", str(phi))
    for frame in _frames(n_max, frames):
        space = ValuationSpace.exhaustive(frame, atoms)
        ext = ltl_ext(space, phi)
        fo_ev = FoEval(_truth_space(frame))
        for s in range(frame.n):
            report.cases += 1
            valid = ext[s] == space.full
            holds = bool(fo_ev.eval(corr, {"w": s}))
            if valid != holds:
                val = {} if valid else space.valuation(first_bit(space.full ^ ext[s]))
                detail = f"frame-valid={valid} correspondent={holds}"
                return report.fail(Counterexample(frame, s, val, detail))
    return report


def check_tau_equivalence(
    phi: ltl.Ltl,
    n_max: int = 4,
    atoms: Sequence[str] | None = None,
    frames: Iterable[LassoFrame] | None = None,
) -> CheckReport:
    """``phi`` and its LTL' image agree at every frame, valuation and state."""
    image = tau(phi)
    atoms = _atoms_for(ltl.atoms(phi), atoms)
    report = CheckReport("translation", str(phi))
    for frame in _frames(n_max, frames):
        space = ValuationSpace.exhaustive(frame, atoms)
        lhs, rhs = ltl_ext(space, phi), PrimeEval(space).ext(image)
        for s in range(frame.n):
            report.cases += 1
            diff = lhs[s] ^ rhs[s]
            if diff:
                bad = space.valuation(first_bit(diff))
                return report.fail(Counterexample(frame, s, bad, f"tau image: {image}"))
    return report


def _pair_space(
    frame: LassoFrame, atoms: Sequence[str], rng: random.Random, pairs: int
) -> tuple[ValuationSpace, ValuationSpace]:
    """``pairs`` random valuation pairs ``h1 <= h2``, one pair per bit."""
    lo, hi = {}, {}
    for a in atoms:
        lo[a] = [rng.getrandbits(pairs) for _ in range(frame.n)]
        # the extra bits are sparse half the time so near-equal pairs also occur
        hi[a] = [c | (rng.getrandbits(pairs) & rng.getrandbits(pairs)) for c in lo[a]]
    return ValuationSpace(frame, lo, pairs), ValuationSpace(frame, hi, pairs)


def _pair_valuations(h1: ValuationSpace, h2: ValuationSpace, bit: int) -> dict[str, list[int]]:
    out = {}
    for a in h1.atoms:
        out[a] = [s for s in range(h1.frame.n) if h1.col(a, s) >> bit & 1]
        out[a + "'"] = [s for s in range(h2.frame.n) if h2.col(a, s) >> bit & 1]
    return out


def check_monotonicity(
    phi: prime.Prime,
    frame: LassoFrame,
    h1: dict[str, Iterable[int]],
    h2: dict[str, Iterable[int]],
) -> CheckReport:
    """``h1 <= h2`` implies ``h1(phi) <= h2(phi)`` for positive ``phi``."""
    return _inclusion("monotonicity", phi, frame, h1, h2, decreasing=False)


def check_antitonicity(
    N: prime.Prime,
    frame: LassoFrame,
    h1: dict[str, Iterable[int]],
    h2: dict[str, Iterable[int]],
) -> CheckReport:
    """``h1 <= h2`` implies ``h2(N) <= h1(N)`` for negative ``N``."""
    return _inclusion("antitonicity", N, frame, h1, h2, decreasing=True)


def _inclusion(name, phi, frame, h1, h2, decreasing) -> CheckReport:
    for a in prime.atoms(phi):
        if not set(h1.get(a, ())) <= set(h2.get(a, ())):
            raise ValueError(f"valuations are not ordered at atom {a!r}")
    atoms = prime.atoms(phi)
    s1 = ValuationSpace.single(frame, {a: set(h1.get(a, ())) for a in atoms})
    s2 = ValuationSpace.single(frame, {a: set(h2.get(a, ())) for a in atoms})
    return _inclusion_spaces(name, phi, s1, s2, decreasing)


def _inclusion_spaces(name, phi, s1, s2, decreasing, report=None) -> CheckReport:
    report = report or CheckReport(name, str(phi))
    e1, e2 = PrimeEval(s1).ext(phi), PrimeEval(s2).ext(phi)
    for s in range(s1.frame.n):
        report.cases += 1
        small, big = (e2[s], e1[s]) if decreasing else (e1[s], e2[s])
        bad = small & ~big
        if bad:
            val = _pair_valuations(s1, s2, first_bit(bad))
            return report.fail(Counterexample(s1.frame, s, val, "primed atoms give the larger valuation"))
    return report


def check_inclusion_random(
    phi: prime.Prime,
    n_max: int = 4,
    pairs: int = 64,
    seed: int = 0,
    decreasing: bool = False,
) -> CheckReport:
    """Monotonicity (or antitonicity) on ``pairs`` random ordered pairs per frame."""
    rng = random.Random(seed)
    atoms = prime.atoms(phi) or ["q"]
    report = CheckReport("antitonicity" if decreasing else "monotonicity", str(phi))
    for frame in enumerate_lasso_frames(n_max):
        s1, s2 = _pair_space(frame, atoms, rng, pairs)
        _inclusion_spaces(report.check, phi, s1, s2, decreasing, report)
        if not report.passed:
            break
    return report


def boxed_relation(A: prime.Prime) -> fo.Fo:
    """``R(w, v)`` for a closed boxed formula; the free variable is ``v``."""
    return boxed_accessibility(A, EVAL, "v", VarSupply(reserved={"v"}))


def check_boxed_lemma(
    A: prime.Prime,
    frame: LassoFrame,
    val: dict[str, Iterable[int]] | None = None,
) -> CheckReport:
    """``w |= A`` iff every ``v`` with ``R(w, v)`` satisfies the atom of ``A``.

    Without ``val`` every valuation of the atom is tried.
    """
    if not is_ltlprime_boxed(A):
        raise ValueError(f"not a boxed formula: {A}")
    atom = prime.atoms(A)[0]
    space = (
        ValuationSpace.exhaustive(frame, [atom])
        if val is None
        else ValuationSpace.single(frame, {atom: set(val.get(atom, ()))})
    )
    rel = boxed_relation(A)
    truth = FoEval(_truth_space(frame))
    lhs = PrimeEval(space).ext(A)
    report = CheckReport("boxed", str(A))
    for w in range(frame.n):
        report.cases += 1
        rhs = space.full
        for v in range(frame.n):
            if truth.eval(rel, {"w": w, "v": v}):
                rhs &= space.col(atom, v)
        diff = lhs[w] ^ rhs
        if diff:
            return report.fail(Counterexample(frame, w, space.valuation(first_bit(diff)) if val is None
                                              else {atom: sorted(val.get(atom, ()))}, f"R(w, v) = {rel}"))
    return report


def main_lemma_condition(shape: UntiedShape) -> fo.Fo:
    """Condition (a): some choice of the Fx witnesses puts every minimal
    extension inside the valuation, ``exists x.. (guards & forall y (Q0(y) -> Q(y)) ..)``."""
    analysis = analyse_untied(shape, EVAL, VarSupply())
    minimal = analysis.minimal
    y = minimal.param
    guards = [fo.Le(lower, Var(name)) for name, lower in analysis.binders]
    atoms = prime.atoms(shape_formula(shape))
    inclusions = [
        fo.Forall(y, fo.Implies(minimal.get(a).body, fo.PredApp(fo.pred_name(a), Var(y))))
        for a in atoms
    ]
    return analysis.prenex(fo.conj(guards + inclusions))


def check_main_lemma(
    E: prime.Prime | UntiedShape,
    n_max: int = 3,
    atoms: Sequence[str] | None = None,
    frames: Iterable[LassoFrame] | None = None,
) -> CheckReport:
    """Where some valuation makes ``E`` true at ``w``, (a) iff (b) for every ``h``:
    (a) the minimal extensions are inside ``h``; (b) ``E`` with negatives
    replaced by true holds at ``w`` under ``h``."""
    shape = classify_ltlprime_untied(E) if isinstance(E, prime.Prime) else E
    if not shape:
        raise ValueError(f"not untied: {shape.offender} ({shape.reason})")
    formula = shape_formula(shape)
    B = shape_formula(replace_negatives_with_top(shape))
    cond_a = main_lemma_condition(shape)
    atoms = _atoms_for(prime.atoms(formula), atoms)
    report = CheckReport("main-lemma", str(formula))
    for frame in _frames(n_max, frames):
        space = ValuationSpace.exhaustive(frame, atoms)
        ev = PrimeEval(space)
        fo_ev = FoEval(space)
        ext_e, ext_b = ev.ext(formula), ev.ext(B)
        for w in range(frame.n):
            if not ext_e[w]:
                report.skipped += 1
                continue
            report.cases += 1
            diff = ext_b[w] ^ fo_ev.eval(cond_a, {"w": w})
            if diff:
                bad = space.valuation(first_bit(diff))
                return report.fail(Counterexample(frame, w, bad, f"condition (a): {cond_a}"))
    return report


def check_simplifier(
    phi: fo.Fo,
    n_max: int = 4,
    frames: Iterable[LassoFrame] | None = None,
) -> CheckReport:
    """``simplify_fo(phi)`` and ``phi`` agree under every valuation of their
    predicates and every assignment of their free variables."""
    simple = simplify_fo(phi)
    atoms = sorted({fo.atom_name(p) for p in fo.predicates(phi)})
    free = sorted(fo.free_vars(phi) | fo.free_vars(simple))
    report = CheckReport("simplifier", str(phi))
    for frame in _frames(n_max, frames):
        space = ValuationSpace.exhaustive(frame, atoms)
        ev = FoEval(space)
        for env in _assignments(frame.n, ["w"] + free):
            report.cases += 1
            diff = ev.eval(phi, env) ^ ev.eval(simple, env)
            if diff:
                bad = space.valuation(first_bit(diff))
                return report.fail(Counterexample(frame, env["w"], bad, f"env {env}; simplified: {simple}"))
    return report


def _assignments(n: int, names: Sequence[str]) -> Iterable[dict[str, int]]:
    if not names:
        yield {}
        return
    head, rest = names[0], names[1:]
    for s in range(n):
        for env in _assignments(n, rest):
            yield {head: s, **env}
