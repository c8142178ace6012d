"""The translation from LTL into LTL'.

``a U b`` becomes ``Fx[x] (b' & Gh[@,x] a')``; ``F a`` becomes ``Fx[x] a'``.
Every introduced variable is fresh, so bound variables are pairwise distinct.
"""

from __future__ import annotations

from ltlc import ltl, prime
from ltlc.terms import EVAL, PathTerm, Var, VarSupply


def tau(phi: ltl.Ltl, at: PathTerm | None = EVAL, supply: VarSupply | None = None) -> prime.Prime:
    """Translate a desugared LTL formula evaluated at ``at``.

    ``at`` is the term naming the current evaluation point when one is
    available (``None`` under G and inside Ĝ guards, where the point is
    anonymous).  It only decides how the lower Ĝ bound of an Until is
    spelled: a variable when the Until sits at an Fx-bound point, ``@``
    otherwise.
    """
    if supply is None:
        supply = VarSupply()
    return _tau(ltl.desugar(phi), at, supply)


def _tau(phi: ltl.Ltl, at: PathTerm | None, supply: VarSupply) -> prime.Prime:
    if isinstance(phi, ltl.Atom):
        return prime.Atom(phi.name)
    if isinstance(phi, ltl.Top):
        return prime.Top()
    if isinstance(phi, ltl.Bottom):
        return prime.Bottom()
    if isinstance(phi, ltl.Not):
        return prime.Not(_tau(phi.arg, at, supply))
    if isinstance(phi, ltl.And):
        return prime.And(_tau(phi.left, at, supply), _tau(phi.right, at, supply))
    if isinstance(phi, ltl.Or):
        return prime.Or(_tau(phi.left, at, supply), _tau(phi.right, at, supply))
    if isinstance(phi, ltl.G):
        return prime.G(_tau(phi.arg, None, supply))
    if isinstance(phi, ltl.X):
        return prime.X(_tau(phi.arg, None, supply))
    if isinstance(phi, ltl.F):
        x = supply.fresh("x")
        return prime.Fx(x, _tau(phi.arg, Var(x), supply))
    if isinstance(phi, ltl.Until):
        x = supply.fresh("x")
        lo = at if isinstance(at, Var) else EVAL
        goal = _tau(phi.right, Var(x), supply)
        guard = _tau(phi.left, None, supply)
        return prime.Fx(x, prime.And(goal, prime.Ghat(lo, Var(x), guard)))
    raise TypeError(f"cannot translate {phi!r}")
