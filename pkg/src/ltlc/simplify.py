"""Sound simplification of first-order formulas over the path signature.

Only facts that hold in every frame are used: ``<=`` is reflexive and
contains the successor steps, ``<`` is irreflexive and ``t < u`` implies
``t != u``.  ``<=`` is not antisymmetric (two loop states reach each other).
"""

from __future__ import annotations

from dataclasses import dataclass

from ltlc import fo
from ltlc.fo import And, Bottom, CaptureError, Eq, Exists, Forall, Implies, Le, Lt, Not, Or, Top
from ltlc.printer import print_term
from ltlc.terms import EvalPoint, PathTerm, Succ, Var, term_base, term_depth, term_vars

MAX_ROUNDS = 25
MAX_WITNESSES = 4


def simplify_fo(phi: fo.Fo) -> fo.Fo:
    for _ in range(MAX_ROUNDS):
        nxt = _simp(phi, _NO_FACTS)
        if nxt == phi:
            break
        phi = nxt
    return phi


def _term_key(t: PathTerm) -> tuple:
    base = term_base(t)
    return (term_depth(t), 0 if isinstance(base, EvalPoint) else 1, print_term(t))


def _eq(a: PathTerm, b: PathTerm) -> fo.Fo:
    if a == b:
        return Top()
    return Eq(a, b) if _term_key(a) <= _term_key(b) else Eq(b, a)


def _is_literal(phi: fo.Fo) -> bool:
    return isinstance(phi, fo.RELATIONS + (fo.PredApp,)) or (
        isinstance(phi, Not) and isinstance(phi.arg, fo.RELATIONS + (fo.PredApp,))
    )


@dataclass(frozen=True)
class _Facts:
    true: frozenset = frozenset()
    false: frozenset = frozenset()

    def add(self, literal: fo.Fo) -> _Facts:
        true, false = set(self.true), set(self.false)
        if isinstance(literal, Not):
            atom = literal.arg
            false.add(atom)
            if isinstance(atom, Le):
                false.add(Lt(atom.left, atom.right))
                false.add(_eq(atom.left, atom.right))
        else:
            true.add(literal)
            if isinstance(literal, Lt):
                true.add(Le(literal.left, literal.right))
                false.add(_eq(literal.left, literal.right))
        return _Facts(frozenset(true), frozenset(false))

    def without(self, var: str) -> _Facts:
        def keep(atom):
            return var not in fo.free_vars(atom)

        return _Facts(frozenset(filter(keep, self.true)), frozenset(filter(keep, self.false)))

    def __bool__(self) -> bool:
        return bool(self.true or self.false)


_NO_FACTS = _Facts()


def _atom(phi: fo.Fo) -> fo.Fo:
    if isinstance(phi, Eq):
        return _eq(phi.left, phi.right)
    if isinstance(phi, Le):
        if phi.left == phi.right:
            return Top()
        t = phi.right
        while isinstance(t, Succ):
            t = t.arg
            if t == phi.left:
                return Top()
    if isinstance(phi, Lt) and phi.left == phi.right:
        return Bottom()
    return phi


def _negate(phi: fo.Fo) -> fo.Fo:
    if isinstance(phi, Top):
        return Bottom()
    if isinstance(phi, Bottom):
        return Top()
    if isinstance(phi, Not):
        return phi.arg
    return Not(phi)


def _simp(phi: fo.Fo, facts: _Facts) -> fo.Fo:
    if isinstance(phi, fo.ATOMIC):
        phi = _atom(phi)
        if phi in facts.true:
            return Top()
        if phi in facts.false:
            return Bottom()
        return phi
    if isinstance(phi, Not):
        return _negate(_simp(phi.arg, facts))
    if isinstance(phi, And):
        return _junction(phi, facts, conj=True)
    if isinstance(phi, Or):
        return _junction(phi, facts, conj=False)
    if isinstance(phi, Implies):
        return _implies(phi, facts)
    if isinstance(phi, Exists):
        return _exists(phi.var, _simp(phi.body, facts.without(phi.var)), facts)
    if isinstance(phi, Forall):
        return _forall(phi.var, _simp(phi.body, facts.without(phi.var)), facts)
    raise TypeError(f"not a first-order formula: {phi!r}")


def _flatten(phi: fo.Fo, cls) -> list[fo.Fo]:
    if isinstance(phi, cls):
        return _flatten(phi.left, cls) + _flatten(phi.right, cls)
    return [phi]


def _junction(phi: fo.Fo, facts: _Facts, conj: bool) -> fo.Fo:
    cls, unit, zero = (And, Top, Bottom) if conj else (Or, Bottom, Top)
    parts = [_simp(p, facts) for p in _flatten(phi, cls)]
    # Literals of a conjunction may be assumed true in the other conjuncts;
    # literals of a disjunction may be assumed false in the other disjuncts.
    # Rewriting one part at a time against the current others keeps this
    # sound even when two parts are equal.
    if len(parts) > 1:
        for i in range(len(parts)):
            ctx = facts
            for j, lit in enumerate(parts):
                if j != i and _is_literal(lit):
                    ctx = ctx.add(lit if conj else _negate(lit))
            if ctx is not facts:
                parts[i] = _simp(parts[i], ctx)
    flat: list[fo.Fo] = []
    for p in parts:
        flat.extend(_flatten(p, cls))
    kept: list[fo.Fo] = []
    for p in flat:
        if isinstance(p, zero):
            return zero()
        if isinstance(p, unit) or p in kept:
            continue
        if _negate(p) in kept:
            return zero()
        kept.append(p)
    if not kept:
        return unit()
    return fo.conj(kept) if conj else fo.disj(kept)


def _implies(phi: Implies, facts: _Facts) -> fo.Fo:
    a = _simp(phi.left, facts)
    if isinstance(a, Bottom):
        return Top()
    if isinstance(a, Top):
        return _simp(phi.right, facts)
    ctx = facts
    for lit in _flatten(a, And):
        if _is_literal(lit):
            ctx = ctx.add(lit)
    b = _simp(phi.right, ctx)
    if isinstance(b, Top) or a == b:
        return Top()
    if isinstance(b, Bottom):
        return _negate(a)
    return Implies(a, b)


def _try_subst(phi: fo.Fo, var: str, t: PathTerm) -> fo.Fo | None:
    try:
        return fo.subst_path_term(phi, Var(var), t)
    except CaptureError:
        return None


def _defining_term(lit: fo.Fo, var: str) -> PathTerm | None:
    """``t`` when ``lit`` is ``var = t`` (either side) and ``t`` avoids ``var``."""
    if not isinstance(lit, Eq):
        return None
    for mine, other in ((lit.left, lit.right), (lit.right, lit.left)):
        if mine == Var(var) and var not in term_vars(other):
            return other
    return None


def _witnesses(body: fo.Fo, var: str, scope: set[str]) -> list[PathTerm]:
    """Candidate instances for ``var``: terms of ``body`` built from ``scope``.

    Lower bounds ``t <= var`` come first since they are the likeliest witnesses.
    """
    guards, others = [], []
    for p in fo.subformulas(body):
        if isinstance(p, fo.RELATIONS) and Var(var) in (p.left, p.right):
            for t in (p.left, p.right):
                if t != Var(var) and term_vars(t) <= scope:
                    (guards if isinstance(p, Le) and p.right == Var(var) else others).append(t)
    out: list[PathTerm] = []
    for t in guards + others + [EvalPoint()]:
        if t not in out:
            out.append(t)
    return out[:MAX_WITNESSES]


def _exists(var: str, body: fo.Fo, facts: _Facts) -> fo.Fo:
    if var not in fo.free_vars(body):
        return body
    if isinstance(body, Top) or isinstance(body, Bottom):
        return body
    parts = _flatten(body, And)
    for i, p in enumerate(parts):
        t = _defining_term(p, var)
        if t is not None:
            rest = _try_subst(fo.conj(parts[:i] + parts[i + 1:]), var, t)
            if rest is not None:
                return _simp(rest, facts)
    for t in _witnesses(body, var, fo.free_vars(body) - {var}):
        witness = _try_subst(body, var, t)
        if witness is not None and isinstance(_simp(witness, facts), Top):
            return Top()
    outside = [p for p in parts if var not in fo.free_vars(p)]
    if outside:
        inside = [p for p in parts if var in fo.free_vars(p)]
        return fo.conj(outside + [Exists(var, fo.conj(inside))])
    return Exists(var, body)


def _forall(var: str, body: fo.Fo, facts: _Facts) -> fo.Fo:
    if var not in fo.free_vars(body):
        return body
    if isinstance(body, Implies):
        guard = _flatten(body.left, And)
        for i, p in enumerate(guard):
            t = _defining_term(p, var)
            if t is not None:
                rest = _try_subst(Implies(fo.conj(guard[:i] + guard[i + 1:]), body.right), var, t)
                if rest is not None:
                    return _simp(rest, facts)
    for t in _witnesses(body, var, fo.free_vars(body) - {var}):
        witness = _try_subst(body, var, t)
        if witness is not None and isinstance(_simp(witness, facts), Bottom):
            return Bottom()
    return Forall(var, body)
