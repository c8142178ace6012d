"""Abstract syntax of user-facing LTL."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


class Ltl:
    __slots__ = ()

    def __str__(self) -> str:
        from ltlc.printer import print_ltl

        return print_ltl(self)


@dataclass(frozen=True)
class Atom(Ltl):
    name: str

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("atom name must be nonempty")


@dataclass(frozen=True)
class Top(Ltl):
    pass


@dataclass(frozen=True)
class Bottom(Ltl):
    pass


@dataclass(frozen=True)
class Not(Ltl):
    arg: Ltl


@dataclass(frozen=True)
class And(Ltl):
    left: Ltl
    right: Ltl


@dataclass(frozen=True)
class Or(Ltl):
    left: Ltl
    right: Ltl


@dataclass(frozen=True)
class Implies(Ltl):
    left: Ltl
    right: Ltl


@dataclass(frozen=True)
class Iff(Ltl):
    left: Ltl
    right: Ltl


@dataclass(frozen=True)
class G(Ltl):
    arg: Ltl


@dataclass(frozen=True)
class F(Ltl):
    arg: Ltl


@dataclass(frozen=True)
class X(Ltl):
    arg: Ltl


@dataclass(frozen=True)
class Until(Ltl):
    left: Ltl
    right: Ltl


UNARY = (Not, G, F, X)
BINARY = (And, Or, Implies, Iff, Until)


def children(phi: Ltl) -> tuple[Ltl, ...]:
    if isinstance(phi, UNARY):
        return (phi.arg,)
    if isinstance(phi, BINARY):
        return (phi.left, phi.right)
    return ()


def subformulas(phi: Ltl) -> Iterator[Ltl]:
    yield phi
    for c in children(phi):
        yield from subformulas(c)


def atoms(phi: Ltl) -> list[str]:
    """Atom names in first-occurrence order."""
    seen: dict[str, None] = {}
    for sub in subformulas(phi):
        if isinstance(sub, Atom):
            seen.setdefault(sub.name)
    return list(seen)


def size(phi: Ltl) -> int:
    return sum(1 for _ in subformulas(phi))


def desugar(phi: Ltl) -> Ltl:
    """Eliminate ``->`` and ``<->`` in favour of ``!``, ``&`` and ``|``."""
    if isinstance(phi, Implies):
        return Or(Not(desugar(phi.left)), desugar(phi.right))
    if isinstance(phi, Iff):
        a, b = desugar(phi.left), desugar(phi.right)
        return And(Or(Not(a), b), Or(Not(b), a))
    if isinstance(phi, UNARY):
        arg = desugar(phi.arg)
        return phi if arg is phi.arg else type(phi)(arg)
    if isinstance(phi, BINARY):
        left, right = desugar(phi.left), desugar(phi.right)
        if left is phi.left and right is phi.right:
            return phi
        return type(phi)(left, right)
    return phi


def is_desugared(phi: Ltl) -> bool:
    return not any(isinstance(s, (Implies, Iff)) for s in subformulas(phi))


def conjuncts(phi: Ltl) -> list[Ltl]:
    """Flatten a conjunction tree, left to right."""
    if isinstance(phi, And):
        return conjuncts(phi.left) + conjuncts(phi.right)
    return [phi]


def conjoin(items: list[Ltl]) -> Ltl:
    if not items:
        return Top()
    out = items[0]
    for item in items[1:]:
        out = And(out, item)
    return out
