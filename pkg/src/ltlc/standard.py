"""Standard translations of LTL and LTL' into first-order logic."""

from __future__ import annotations

from ltlc import fo, ltl, prime
from ltlc.fo import And, Exists, Forall, Implies, Le, Lt, PredApp, pred_name
from ltlc.terms import EVAL, EvalPoint, PathTerm, Succ, Var, VarSupply


def resolve(t: PathTerm, anchor: PathTerm, env: dict[str, str]) -> PathTerm:
    """Turn an LTL' bound into a first-order term."""
    if isinstance(t, EvalPoint):
        return anchor
    if isinstance(t, Var):
        return Var(env.get(t.name, t.name))
    return Succ(resolve(t.arg, anchor, env))


def st_ltlprime(
    phi: prime.Prime,
    at: PathTerm = EVAL,
    supply: VarSupply | None = None,
    free: frozenset[str] | set[str] = frozenset(),
) -> fo.Fo:
    """ST_at(phi).  ``free`` names Ĝ-bound variables supplied by the caller."""
    prime.check_well_scoped(phi, free)
    if supply is None:
        supply = VarSupply()
    supply.reserve(free)
    return _st_prime(phi, at, at, {}, supply)


def _st_prime(phi, at, anchor, env, supply) -> fo.Fo:
    if isinstance(phi, prime.Atom):
        return PredApp(pred_name(phi.name), at)
    if isinstance(phi, prime.Top):
        return fo.Top()
    if isinstance(phi, prime.Bottom):
        return fo.Bottom()
    if isinstance(phi, prime.Not):
        return fo.Not(_st_prime(phi.arg, at, anchor, env, supply))
    if isinstance(phi, prime.And):
        return fo.And(_st_prime(phi.left, at, anchor, env, supply), _st_prime(phi.right, at, anchor, env, supply))
    if isinstance(phi, prime.Or):
        return fo.Or(_st_prime(phi.left, at, anchor, env, supply), _st_prime(phi.right, at, anchor, env, supply))
    if isinstance(phi, prime.G):
        v = supply.fresh("v")
        return Forall(v, Implies(Le(at, Var(v)), _st_prime(phi.arg, Var(v), anchor, env, supply)))
    if isinstance(phi, prime.X):
        return _st_prime(phi.arg, Succ(at), anchor, env, supply)
    if isinstance(phi, prime.Fx):
        x = supply.fresh(phi.var)
        body = _st_prime(phi.arg, Var(x), at, {**env, phi.var: x}, supply)
        return Exists(x, And(Le(at, Var(x)), body))
    if isinstance(phi, prime.Ghat):
        lo, hi = resolve(phi.lo, anchor, env), resolve(phi.hi, anchor, env)
        v = supply.fresh("v")
        guard = And(Le(lo, Var(v)), Lt(Var(v), hi))
        return Forall(v, Implies(guard, _st_prime(phi.arg, Var(v), anchor, env, supply)))
    raise TypeError(f"not an LTL' formula: {phi!r}")


def st_ltl(phi: ltl.Ltl, at: PathTerm = EVAL, supply: VarSupply | None = None) -> fo.Fo:
    """Direct standard translation of LTL, Until included."""
    if supply is None:
        supply = VarSupply()
    return _st_ltl(phi, at, supply)


def _st_ltl(phi, at, supply) -> fo.Fo:
    if isinstance(phi, ltl.Atom):
        return PredApp(pred_name(phi.name), at)
    if isinstance(phi, ltl.Top):
        return fo.Top()
    if isinstance(phi, ltl.Bottom):
        return fo.Bottom()
    if isinstance(phi, ltl.Not):
        return fo.Not(_st_ltl(phi.arg, at, supply))
    if isinstance(phi, ltl.And):
        return fo.And(_st_ltl(phi.left, at, supply), _st_ltl(phi.right, at, supply))
    if isinstance(phi, ltl.Or):
        return fo.Or(_st_ltl(phi.left, at, supply), _st_ltl(phi.right, at, supply))
    if isinstance(phi, ltl.Implies):
        return fo.Implies(_st_ltl(phi.left, at, supply), _st_ltl(phi.right, at, supply))
    if isinstance(phi, ltl.Iff):
        return _st_ltl(ltl.desugar(phi), at, supply)
    if isinstance(phi, ltl.G):
        v = supply.fresh("v")
        return Forall(v, Implies(Le(at, Var(v)), _st_ltl(phi.arg, Var(v), supply)))
    if isinstance(phi, ltl.F):
        x = supply.fresh("x")
        return Exists(x, And(Le(at, Var(x)), _st_ltl(phi.arg, Var(x), supply)))
    if isinstance(phi, ltl.X):
        return _st_ltl(phi.arg, Succ(at), supply)
    if isinstance(phi, ltl.Until):
        u = supply.fresh("u")
        goal = _st_ltl(phi.right, Var(u), supply)
        v = supply.fresh("v")
        guard = Forall(v, Implies(And(Le(at, Var(v)), Lt(Var(v), Var(u))), _st_ltl(phi.left, Var(v), supply)))
        return Exists(u, And(And(Le(at, Var(u)), goal), guard))
    raise TypeError(f"not an LTL formula: {phi!r}")


def so_closure(phi: fo.Fo, quantifier: fo.Quantifier = "forall") -> fo.SoFormula:
    """Quantify every predicate symbol of ``phi``, in first-occurrence order."""
    return fo.SoFormula(tuple((quantifier, p) for p in fo.predicates(phi)), phi)
