"""Abstract syntax of LTL', the auxiliary language with indexed ``F_x`` and
bounded ``Ĝ``.

Scoping of path terms: a ``Var`` is bound by the nearest enclosing ``Fx`` of
the same name; ``EvalPoint`` (``@``) denotes the top-level evaluation point,
or, inside the body of an ``Fx``, the point at which that ``Fx`` is
evaluated.  ``Fx[x] (b & Gh[@,x] a)`` is therefore ``a U b`` wherever it
occurs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ltlc.terms import EVAL, EvalPoint, PathTerm, Succ, Var, subst_term, term_base, term_vars


class ScopeError(ValueError):
    pass


class Prime:
    __slots__ = ()

    def __str__(self) -> str:
        from ltlc.printer import print_ltlprime

        return print_ltlprime(self)


@dataclass(frozen=True)
class Atom(Prime):
    name: str


@dataclass(frozen=True)
class Top(Prime):
    pass


@dataclass(frozen=True)
class Bottom(Prime):
    pass


@dataclass(frozen=True)
class Not(Prime):
    arg: Prime


@dataclass(frozen=True)
class And(Prime):
    left: Prime
    right: Prime


@dataclass(frozen=True)
class Or(Prime):
    left: Prime
    right: Prime


@dataclass(frozen=True)
class G(Prime):
    arg: Prime


@dataclass(frozen=True)
class X(Prime):
    arg: Prime


@dataclass(frozen=True)
class Fx(Prime):
    var: str
    arg: Prime


@dataclass(frozen=True)
class Ghat(Prime):
    lo: PathTerm
    hi: PathTerm
    arg: Prime

    def __post_init__(self) -> None:
        if self.lo == self.hi:
            raise ValueError("Ĝ needs syntactically distinct bounds")


UNARY = (Not, G, X, Fx, Ghat)
BINARY = (And, Or)


def children(phi: Prime) -> tuple[Prime, ...]:
    if isinstance(phi, UNARY):
        return (phi.arg,)
    if isinstance(phi, BINARY):
        return (phi.left, phi.right)
    return ()


def subformulas(phi: Prime) -> Iterator[Prime]:
    yield phi
    for c in children(phi):
        yield from subformulas(c)


def atoms(phi: Prime) -> list[str]:
    seen: dict[str, None] = {}
    for sub in subformulas(phi):
        if isinstance(sub, Atom):
            seen.setdefault(sub.name)
    return list(seen)


def size(phi: Prime) -> int:
    return sum(1 for _ in subformulas(phi))


def bound_vars(phi: Prime) -> set[str]:
    return {s.var for s in subformulas(phi) if isinstance(s, Fx)}


def free_vars(phi: Prime) -> set[str]:
    """Variables used in Ĝ bounds that no enclosing Fx binds."""
    if isinstance(phi, Ghat):
        return term_vars(phi.lo) | term_vars(phi.hi) | free_vars(phi.arg)
    if isinstance(phi, Fx):
        return free_vars(phi.arg) - {phi.var}
    out: set[str] = set()
    for c in children(phi):
        out |= free_vars(c)
    return out


def uses_anchor(phi: Prime) -> bool:
    """Whether ``@`` occurs in a bound outside every nested Fx."""
    if isinstance(phi, Ghat):
        if any(isinstance(term_base(t), EvalPoint) for t in (phi.lo, phi.hi)):
            return True
        return uses_anchor(phi.arg)
    if isinstance(phi, Fx):
        return False
    return any(uses_anchor(c) for c in children(phi))


def check_well_scoped(phi: Prime, free: frozenset[str] | set[str] = frozenset()) -> None:
    """Raise ScopeError unless every bound variable is bound or declared free."""
    stray = free_vars(phi) - set(free)
    if stray:
        raise ScopeError(f"unbound path variable(s): {', '.join(sorted(stray))}")


def is_well_scoped(phi: Prime, free: frozenset[str] | set[str] = frozenset()) -> bool:
    try:
        check_well_scoped(phi, free)
    except ScopeError:
        return False
    return True


def subst_path_term(phi: Prime, old: PathTerm, new: PathTerm) -> Prime:
    """Replace every occurrence of ``old`` by ``new`` in Ĝ bounds.

    Stops below an ``Fx`` that rebinds a variable of ``old`` (every Fx
    rebinds ``@``); raises
    ScopeError if an ``Fx`` would capture a variable of ``new``.
    """
    old_vars, new_vars = term_vars(old), term_vars(new)
    if isinstance(phi, Ghat):
        lo, hi = subst_term(phi.lo, old, new), subst_term(phi.hi, old, new)
        if lo == hi:
            raise ScopeError("substitution makes the Ĝ bounds coincide")
        return Ghat(lo, hi, subst_path_term(phi.arg, old, new))
    if isinstance(phi, Fx):
        if phi.var in old_vars or isinstance(term_base(old), EvalPoint):
            return phi
        if phi.var in new_vars and _occurs(phi.arg, old):
            raise ScopeError(f"variable capture: {phi.var}")
        return Fx(phi.var, subst_path_term(phi.arg, old, new))
    if isinstance(phi, (Not, G, X)):
        return type(phi)(subst_path_term(phi.arg, old, new))
    if isinstance(phi, BINARY):
        return type(phi)(subst_path_term(phi.left, old, new), subst_path_term(phi.right, old, new))
    return phi


def _occurs(phi: Prime, t: PathTerm) -> bool:
    """Whether ``t`` occurs in a bound of ``phi`` where a substitution would reach it."""

    def in_term(u: PathTerm) -> bool:
        return u == t or (isinstance(u, Succ) and in_term(u.arg))

    if isinstance(phi, Ghat):
        return in_term(phi.lo) or in_term(phi.hi) or _occurs(phi.arg, t)
    if isinstance(phi, Fx):
        if phi.var in term_vars(t) or isinstance(term_base(t), EvalPoint):
            return False
        return _occurs(phi.arg, t)
    return any(_occurs(c, t) for c in children(phi))


def conjuncts(phi: Prime) -> list[Prime]:
    if isinstance(phi, And):
        return conjuncts(phi.left) + conjuncts(phi.right)
    return [phi]


__all__ = [
    "Prime", "Atom", "Top", "Bottom", "Not", "And", "Or", "G", "X", "Fx", "Ghat",
    "ScopeError", "EVAL", "Var", "Succ", "EvalPoint",
    "check_well_scoped", "is_well_scoped", "subst_path_term", "free_vars", "atoms",
]
