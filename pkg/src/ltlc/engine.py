"""First-order correspondents of LTL Sahlqvist formulas.

Pipeline for ``!E_1 & ... & !E_m``: each untied ``E_i`` is translated to
LTL', classified, standard-translated with its Fx witnesses pulled into one
existential prefix, and every predicate is replaced by its minimal
instance.  The minimal predicates mention the witnesses, so they are
substituted inside that prefix.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ltlc import fo, ltl, prime
from ltlc.classify import (
    Boxed,
    ConjNode,
    FxNode,
    GhatNode,
    Negative,
    NextNode,
    NotSahlqvistError,
    UntiedShape,
    UntilNode,
    classify_ltlprime_untied,
    decompose_sahlqvist,
    is_ltlprime_boxed,
)
from ltlc.fo import And, Eq, Exists, Le, Lt, PredicateDef, Var
from ltlc.simplify import simplify_fo
from ltlc.standard import _st_prime, resolve
from ltlc.terms import EVAL, PathTerm, Succ, VarSupply
from ltlc.translate import tau


@dataclass(frozen=True)
class MinimalAssignment:
    """Minimal predicate for each atom, all sharing the parameter ``param``.

    Atoms without an entry get the empty predicate.
    """

    param: str
    defs: dict[str, PredicateDef] = field(default_factory=dict)

    def get(self, atom: str) -> PredicateDef:
        return self.defs.get(atom, PredicateDef(self.param, fo.Bottom()))


def boxed_accessibility(
    A: prime.Prime,
    w: PathTerm,
    v: str,
    supply: VarSupply,
    anchor: PathTerm | None = None,
    env: dict[str, str] | None = None,
) -> fo.Fo:
    """The relation ``R(w, v)`` with ``w |= A`` iff ``R(w, v)`` implies ``v |= q``."""
    if not is_ltlprime_boxed(A):
        raise ValueError(f"not a boxed formula: {A}")
    anchor = w if anchor is None else anchor
    env = env or {}

    def rel(phi: prime.Prime, cur: PathTerm) -> fo.Fo:
        if isinstance(phi, prime.Atom):
            return Eq(cur, Var(v))
        if isinstance(phi, prime.X):
            return rel(phi.arg, Succ(cur))
        u = supply.fresh("u")
        if isinstance(phi, prime.G):
            guard = Le(cur, Var(u))
        else:
            lo, hi = resolve(phi.lo, anchor, env), resolve(phi.hi, anchor, env)
            guard = And(Le(lo, Var(u)), Lt(Var(u), hi))
        return Exists(u, And(guard, rel(phi.arg, Var(u))))

    return rel(A, w)


def _boxed_atom(A: prime.Prime) -> str:
    while not isinstance(A, prime.Atom):
        A = A.arg
    return A.name


def minimal_assignment(
    shape: UntiedShape,
    at: PathTerm = EVAL,
    supply: VarSupply | None = None,
    anchor: PathTerm | None = None,
    rename: dict[str, str] | None = None,
    param: str | None = None,
) -> MinimalAssignment:
    """Minimal assignment of an LTL' untied shape evaluated at ``at``.

    ``rename`` maps Fx variables to the names the standard translation gave
    them, so the predicates talk about the same witnesses.
    """
    if supply is None:
        supply = VarSupply()
    if param is None:
        param = supply.fresh("y")
    anchor = at if anchor is None else anchor
    defs = _minimal(shape, at, anchor, dict(rename or {}), param, supply)
    return MinimalAssignment(param, {a: PredicateDef(param, body) for a, body in defs.items()})


def _minimal(shape, at, anchor, rename, param, supply) -> dict[str, fo.Fo]:
    if isinstance(shape, Boxed):
        A = shape.formula
        return {_boxed_atom(A): boxed_accessibility(A, at, param, supply, anchor, rename)}
    if isinstance(shape, Negative):
        return {a: fo.Bottom() for a in prime.atoms(shape.formula)}
    if isinstance(shape, ConjNode):
        left = _minimal(shape.left, at, anchor, rename, param, supply)
        right = _minimal(shape.right, at, anchor, rename, param, supply)
        out = dict(left)
        for a, body in right.items():
            out[a] = _union(out[a], body) if a in out else body
        return out
    if isinstance(shape, FxNode):
        x = rename.setdefault(shape.var, shape.var)
        v = supply.fresh("v")
        inner = _minimal(shape.body, Var(v), at, rename, param, supply)
        return {a: fo.subst_path_term(b, Var(v), Var(x)) for a, b in inner.items()}
    if isinstance(shape, NextNode):
        v = supply.fresh("v")
        inner = _minimal(shape.body, Var(v), anchor, rename, param, supply)
        return {a: fo.subst_path_term(b, Var(v), Succ(at)) for a, b in inner.items()}
    if isinstance(shape, GhatNode):
        v = supply.fresh("v")
        lo, hi = resolve(shape.lo, anchor, rename), resolve(shape.hi, anchor, rename)
        inner = _minimal(shape.body, Var(v), anchor, rename, param, supply)
        out = {}
        for a, body in inner.items():
            if isinstance(body, fo.Bottom):
                out[a] = body
                continue
            x = supply.fresh("x")
            guard = And(Le(lo, Var(x)), Lt(Var(x), hi))
            out[a] = Exists(x, And(guard, fo.subst_path_term(body, Var(v), Var(x))))
        return out
    if isinstance(shape, UntilNode):
        raise ValueError("minimal assignments are computed on LTL' shapes; translate first")
    raise TypeError(f"not an untied shape: {shape!r}")


def _union(a: fo.Fo, b: fo.Fo) -> fo.Fo:
    if isinstance(a, fo.Bottom):
        return b
    if isinstance(b, fo.Bottom):
        return a
    return fo.Or(a, b)


def replace_negatives_with_top(shape: UntiedShape) -> UntiedShape:
    if isinstance(shape, Negative):
        is_ltl = isinstance(shape.formula, ltl.Ltl)
        return Negative(ltl.Top() if is_ltl else prime.Top())
    if isinstance(shape, Boxed):
        return shape
    if isinstance(shape, ConjNode):
        return ConjNode(replace_negatives_with_top(shape.left), replace_negatives_with_top(shape.right))
    if isinstance(shape, UntilNode):
        return UntilNode(replace_negatives_with_top(shape.guard), replace_negatives_with_top(shape.tail))
    if isinstance(shape, FxNode):
        return FxNode(shape.var, replace_negatives_with_top(shape.body))
    if isinstance(shape, NextNode):
        return NextNode(replace_negatives_with_top(shape.body))
    if isinstance(shape, GhatNode):
        return GhatNode(shape.lo, shape.hi, replace_negatives_with_top(shape.body))
    raise TypeError(f"not an untied shape: {shape!r}")


@dataclass
class UntiedAnalysis:
    """Standard translation of an untied LTL' shape, in nested and prenex form."""

    shape: UntiedShape
    st: fo.Fo
    binders: list[tuple[str, PathTerm]]
    leaves: list[fo.Fo]
    rename: dict[str, str]
    minimal: MinimalAssignment

    @property
    def matrix(self) -> fo.Fo:
        guards = [Le(lower, Var(name)) for name, lower in self.binders]
        return fo.conj(guards + self.leaves)

    def prenex(self, matrix: fo.Fo | None = None) -> fo.Fo:
        return fo.exists_many([name for name, _ in self.binders], self.matrix if matrix is None else matrix)


def analyse_untied(shape: UntiedShape, at: PathTerm = EVAL, supply: VarSupply | None = None) -> UntiedAnalysis:
    if supply is None:
        supply = VarSupply()
    binders: list[tuple[str, PathTerm]] = []
    leaves: list[fo.Fo] = []
    rename: dict[str, str] = {}

    def walk(node, cur, anchor) -> fo.Fo:
        if isinstance(node, (Boxed, Negative)):
            st = _st_prime(node.formula, cur, anchor, dict(rename), supply)
            leaves.append(st)
            return st
        if isinstance(node, ConjNode):
            return And(walk(node.left, cur, anchor), walk(node.right, cur, anchor))
        if isinstance(node, FxNode):
            name = supply.fresh(node.var)
            rename[node.var] = name
            binders.append((name, cur))
            return Exists(name, And(Le(cur, Var(name)), walk(node.body, Var(name), cur)))
        raise ValueError(f"cannot prenex {type(node).__name__}; expected an LTL' untied shape")

    st = walk(shape, at, at)
    minimal = minimal_assignment(shape, at, supply, rename=rename)
    return UntiedAnalysis(shape, st, binders, leaves, rename, minimal)


def substitute_minimal(analysis: UntiedAnalysis, supply: VarSupply) -> fo.Fo:
    """The prenexed standard translation with every predicate made minimal."""
    matrix = analysis.matrix
    atoms = {fo.atom_name(p) for p in fo.predicates(matrix)}
    for atom in sorted(atoms):
        matrix = fo.beta_reduce_predicate(matrix, fo.pred_name(atom), analysis.minimal.get(atom), supply)
    return analysis.prenex(matrix)


@dataclass
class ConjunctReport:
    untied: ltl.Ltl
    tau: prime.Prime
    analysis: UntiedAnalysis
    substituted: fo.Fo

    @property
    def st(self) -> fo.Fo:
        return self.analysis.st

    @property
    def minimal(self) -> MinimalAssignment:
        return self.analysis.minimal


@dataclass
class CorrespondenceResult:
    input: ltl.Ltl
    conjunct_reports: list[ConjunctReport]
    correspondent: fo.Fo
    simplified: fo.Fo


def correspondent(phi: ltl.Ltl, at: PathTerm = EVAL, simplify: bool = True) -> CorrespondenceResult:
    """First-order local correspondent of an LTL Sahlqvist formula at ``at``."""
    phi_d = ltl.desugar(phi)
    untied = decompose_sahlqvist(phi_d)
    supply = VarSupply()
    reports = []
    for E in untied:
        image = tau(E)
        shape = classify_ltlprime_untied(image)
        if not shape:
            raise NotSahlqvistError(E, f"translation is not untied at {shape.offender}")
        analysis = analyse_untied(shape, at, supply)
        reports.append(ConjunctReport(E, image, analysis, substitute_minimal(analysis, supply)))
    result = fo.conj([fo.Not(r.substituted) for r in reports])
    return CorrespondenceResult(phi, reports, result, simplify_fo(result) if simplify else result)
