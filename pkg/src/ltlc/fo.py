"""First- and second-order formulas over the path signature.

Terms are path terms (variables, the evaluation point ``w`` and the
successor ``S``); atoms are ``<=``, ``<``, ``=`` and unary predicate
applications ``Q(t)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal

from ltlc.terms import PathTerm, Var, VarSupply, subst_term, term_vars


class CaptureError(ValueError):
    pass


class Fo:
    __slots__ = ()

    def __str__(self) -> str:
        from ltlc.printer import print_fo

        return print_fo(self)


@dataclass(frozen=True)
class PredApp(Fo):
    pred: str
    term: PathTerm


@dataclass(frozen=True)
class Le(Fo):
    left: PathTerm
    right: PathTerm


@dataclass(frozen=True)
class Lt(Fo):
    left: PathTerm
    right: PathTerm


@dataclass(frozen=True)
class Eq(Fo):
    left: PathTerm
    right: PathTerm


@dataclass(frozen=True)
class Top(Fo):
    pass


@dataclass(frozen=True)
class Bottom(Fo):
    pass


@dataclass(frozen=True)
class Not(Fo):
    arg: Fo


@dataclass(frozen=True)
class And(Fo):
    left: Fo
    right: Fo


@dataclass(frozen=True)
class Or(Fo):
    left: Fo
    right: Fo


@dataclass(frozen=True)
class Implies(Fo):
    left: Fo
    right: Fo


@dataclass(frozen=True)
class Forall(Fo):
    var: str
    body: Fo


@dataclass(frozen=True)
class Exists(Fo):
    var: str
    body: Fo


Quantifier = Literal["forall", "exists"]

RELATIONS = (Le, Lt, Eq)
ATOMIC = (PredApp, Le, Lt, Eq, Top, Bottom)
BINARY = (And, Or, Implies)
QUANTIFIED = (Forall, Exists)


@dataclass(frozen=True)
class SoFormula:
    prefix: tuple[tuple[Quantifier, str], ...]
    matrix: Fo

    def __post_init__(self) -> None:
        names = [p for _, p in self.prefix]
        if len(set(names)) != len(names):
            raise ValueError("predicate quantified twice")

    def __str__(self) -> str:
        from ltlc.printer import print_fo

        return print_fo(self)


@dataclass(frozen=True)
class PredicateDef:
    """A one-parameter predicate given by a predicate-free body."""

    param: str
    body: Fo

    def __post_init__(self) -> None:
        if predicates(self.body):
            raise ValueError("predicate definition bodies must be predicate-free")


def pred_name(atom: str) -> str:
    """Predicate symbol for an atom: ``q`` -> ``Q``, ``q1`` -> ``Q1``."""
    return atom[:1].upper() + atom[1:]


def atom_name(pred: str) -> str:
    return pred[:1].lower() + pred[1:]


def children(phi: Fo) -> tuple[Fo, ...]:
    if isinstance(phi, Not):
        return (phi.arg,)
    if isinstance(phi, BINARY):
        return (phi.left, phi.right)
    if isinstance(phi, QUANTIFIED):
        return (phi.body,)
    return ()


def subformulas(phi: Fo) -> Iterator[Fo]:
    yield phi
    for c in children(phi):
        yield from subformulas(c)


def size(phi: Fo) -> int:
    return sum(1 for _ in subformulas(phi))


def predicates(phi: Fo) -> list[str]:
    seen: dict[str, None] = {}
    for sub in subformulas(phi):
        if isinstance(sub, PredApp):
            seen.setdefault(sub.pred)
    return list(seen)


def atom_terms(phi: Fo) -> tuple[PathTerm, ...]:
    if isinstance(phi, PredApp):
        return (phi.term,)
    if isinstance(phi, RELATIONS):
        return (phi.left, phi.right)
    return ()


def free_vars(phi: Fo) -> set[str]:
    if isinstance(phi, QUANTIFIED):
        return free_vars(phi.body) - {phi.var}
    out: set[str] = set()
    for t in atom_terms(phi):
        out |= term_vars(t)
    for c in children(phi):
        out |= free_vars(c)
    return out


def all_vars(phi: Fo) -> set[str]:
    out: set[str] = set()
    for sub in subformulas(phi):
        if isinstance(sub, QUANTIFIED):
            out.add(sub.var)
        for t in atom_terms(sub):
            out |= term_vars(t)
    return out


def _map_atom_terms(phi: Fo, fn) -> Fo:
    if isinstance(phi, PredApp):
        return PredApp(phi.pred, fn(phi.term))
    if isinstance(phi, RELATIONS):
        return type(phi)(fn(phi.left), fn(phi.right))
    return phi


def subst_path_term(phi: Fo, old: PathTerm, new: PathTerm) -> Fo:
    """Replace every free occurrence of ``old`` by ``new``.

    Raises CaptureError when a quantifier would capture a variable of ``new``.
    """
    old_vars, new_vars = term_vars(old), term_vars(new)
    if isinstance(phi, ATOMIC):
        return _map_atom_terms(phi, lambda t: subst_term(t, old, new))
    if isinstance(phi, QUANTIFIED):
        if phi.var in old_vars:
            return phi
        body = subst_path_term(phi.body, old, new)
        if body != phi.body and phi.var in new_vars:
            raise CaptureError(f"variable capture: {phi.var}")
        return type(phi)(phi.var, body)
    if isinstance(phi, Not):
        return Not(subst_path_term(phi.arg, old, new))
    return type(phi)(subst_path_term(phi.left, old, new), subst_path_term(phi.right, old, new))


def rename_bound(phi: Fo, supply: VarSupply) -> Fo:
    """Alpha-rename every quantified variable to a fresh name from ``supply``."""
    if isinstance(phi, QUANTIFIED):
        name = supply.fresh(phi.var)
        body = rename_bound(phi.body, supply)
        if name != phi.var:
            body = subst_path_term(body, Var(phi.var), Var(name))
        return type(phi)(name, body)
    if isinstance(phi, Not):
        return Not(rename_bound(phi.arg, supply))
    if isinstance(phi, BINARY):
        return type(phi)(rename_bound(phi.left, supply), rename_bound(phi.right, supply))
    return phi


def instantiate(pdef: PredicateDef, arg: PathTerm, supply: VarSupply | None = None) -> Fo:
    body = pdef.body
    if supply is not None:
        body = rename_bound(body, supply)
    return subst_path_term(body, Var(pdef.param), arg)


def beta_reduce_predicate(
    phi: Fo, sym: str, pdef: PredicateDef, supply: VarSupply | None = None
) -> Fo:
    """Replace every ``sym(t)`` by the definition body applied to ``t``."""
    if supply is None:
        supply = VarSupply(reserved=all_vars(phi) | all_vars(pdef.body))
    ambient = free_vars(pdef.body) - {pdef.param}
    return _beta(phi, sym, pdef, supply, ambient, frozenset())


def _beta(phi, sym, pdef, supply, ambient, binders) -> Fo:
    if isinstance(phi, PredApp):
        if phi.pred != sym:
            return phi
        captured = ambient & binders
        if captured:
            raise CaptureError(f"variable capture: {', '.join(sorted(captured))}")
        return instantiate(pdef, phi.term, supply)
    if isinstance(phi, ATOMIC):
        return phi
    if isinstance(phi, QUANTIFIED):
        return type(phi)(phi.var, _beta(phi.body, sym, pdef, supply, ambient, binders | {phi.var}))
    if isinstance(phi, Not):
        return Not(_beta(phi.arg, sym, pdef, supply, ambient, binders))
    return type(phi)(
        _beta(phi.left, sym, pdef, supply, ambient, binders),
        _beta(phi.right, sym, pdef, supply, ambient, binders),
    )


def conj(items: list[Fo]) -> Fo:
    if not items:
        return Top()
    out = items[0]
    for item in items[1:]:
        out = And(out, item)
    return out


def disj(items: list[Fo]) -> Fo:
    if not items:
        return Bottom()
    out = items[0]
    for item in items[1:]:
        out = Or(out, item)
    return out


def exists_many(names: list[str], body: Fo) -> Fo:
    for name in reversed(names):
        body = Exists(name, body)
    return body
