"""Path terms and the fresh-name supply shared by every formula kind."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Union


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class EvalPoint:
    """The distinguished evaluation point.

    Printed as ``w`` in first-order output and ``@`` in LTL' debug syntax.
    Inside the body of an ``Fx`` it denotes the point at which that ``Fx``
    is evaluated.
    """


@dataclass(frozen=True)
class Succ:
    arg: PathTerm


PathTerm = Union[Var, EvalPoint, Succ]

EVAL = EvalPoint()

# Names never handed out by a supply: ``w`` is how EvalPoint prints.
RESERVED = frozenset({"w"})


def term_vars(t: PathTerm) -> set[str]:
    while isinstance(t, Succ):
        t = t.arg
    return {t.name} if isinstance(t, Var) else set()


def term_depth(t: PathTerm) -> int:
    d = 0
    while isinstance(t, Succ):
        t, d = t.arg, d + 1
    return d


def term_base(t: PathTerm) -> Var | EvalPoint:
    while isinstance(t, Succ):
        t = t.arg
    return t


def subst_term(t: PathTerm, old: PathTerm, new: PathTerm) -> PathTerm:
    if t == old:
        return new
    if isinstance(t, Succ):
        inner = subst_term(t.arg, old, new)
        return t if inner is t.arg else Succ(inner)
    return t


def succ_n(t: PathTerm, n: int) -> PathTerm:
    for _ in range(n):
        t = Succ(t)
    return t


_TRAILING_DIGITS = re.compile(r"\d+$")


@dataclass
class VarSupply:
    """Deterministic fresh-name generator.

    ``fresh("x")`` returns ``x`` when it is free, otherwise ``x1``, ``x2``, ...
    """

    reserved: set[str] = field(default_factory=set)
    issued: set[str] = field(default_factory=set)

    def __post_init__(self) -> None:
        self.reserved = set(self.reserved) | RESERVED

    def reserve(self, names: Iterable[str]) -> None:
        self.reserved.update(names)

    def taken(self, name: str) -> bool:
        return name in self.reserved or name in self.issued

    def fresh(self, hint: str) -> str:
        base = _TRAILING_DIGITS.sub("", hint) or "v"
        if not self.taken(hint):
            self.issued.add(hint)
            return hint
        k = 1
        while self.taken(f"{base}{k}"):
            k += 1
        name = f"{base}{k}"
        self.issued.add(name)
        return name


def fresh_var(supply: VarSupply, hint: str) -> str:
    return supply.fresh(hint)
