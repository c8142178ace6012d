"""Seeded random generators for the property suites.

Every generator takes a :class:`random.Random` so runs are reproducible.
``depth`` bounds the height of the produced syntax tree.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterator, Sequence

from ltlc import fo, ltl, prime
from ltlc.terms import EVAL, EvalPoint, PathTerm, Succ, Var

DEFAULT_ATOMS = ("q", "p", "r")


def atom_pool(k: int) -> list[str]:
    if not 1 <= k <= len(DEFAULT_ATOMS):
        raise ValueError(f"atom count must be between 1 and {len(DEFAULT_ATOMS)}, got {k}")
    return list(DEFAULT_ATOMS[:k])


# -- LTL ----------------------------------------------------------------------


def random_ltl(rng: random.Random, depth: int, atoms: Sequence[str]) -> ltl.Ltl:
    """Arbitrary LTL over the full connective set."""
    if depth <= 0 or rng.random() < 0.2:
        roll = rng.random()
        if roll < 0.06:
            return ltl.Top()
        if roll < 0.12:
            return ltl.Bottom()
        return ltl.Atom(rng.choice(atoms))
    kind = rng.choice(["not", "and", "or", "implies", "iff", "until", "G", "F", "X"])
    sub = lambda: random_ltl(rng, depth - 1, atoms)  # noqa: E731
    if kind == "not":
        return ltl.Not(sub())
    if kind in ("G", "F", "X"):
        return {"G": ltl.G, "F": ltl.F, "X": ltl.X}[kind](sub())
    cls = {"and": ltl.And, "or": ltl.Or, "implies": ltl.Implies, "iff": ltl.Iff, "until": ltl.Until}[kind]
    return cls(sub(), sub())


def random_ltl_positive(rng: random.Random, depth: int, atoms: Sequence[str]) -> ltl.Ltl:
    if depth <= 0 or rng.random() < 0.25:
        return ltl.Atom(rng.choice(atoms)) if rng.random() < 0.9 else ltl.Top()
    kind = rng.choice(["and", "or", "until", "G", "F", "X"])
    sub = lambda: random_ltl_positive(rng, depth - 1, atoms)  # noqa: E731
    if kind in ("G", "F", "X"):
        return {"G": ltl.G, "F": ltl.F, "X": ltl.X}[kind](sub())
    return {"and": ltl.And, "or": ltl.Or, "until": ltl.Until}[kind](sub(), sub())


def random_ltl_boxed(rng: random.Random, depth: int, atoms: Sequence[str]) -> ltl.Ltl:
    phi: ltl.Ltl = ltl.Atom(rng.choice(atoms))
    for _ in range(rng.randint(0, max(depth, 0))):
        phi = rng.choice([ltl.G, ltl.X])(phi)
    return phi


def random_ltl_negative(rng: random.Random, depth: int, atoms: Sequence[str]) -> ltl.Ltl:
    roll = rng.random()
    if roll < 0.1:
        return ltl.Top()
    if roll < 0.3 and depth > 1:
        return ltl.G(random_ltl_negative(rng, depth - 1, atoms))
    return ltl.Not(random_ltl_positive(rng, max(depth - 1, 0), atoms))


def _ltl_leaf(rng: random.Random, depth: int, atoms: Sequence[str]) -> ltl.Ltl:
    if rng.random() < 0.5:
        return random_ltl_boxed(rng, depth, atoms)
    return random_ltl_negative(rng, depth, atoms)


def random_ltl_untied(rng: random.Random, depth: int, atoms: Sequence[str]) -> ltl.Ltl:
    """Untied LTL: boxed and negative leaves combined by ``&``, ``U`` and ``F``."""
    if depth <= 1 or rng.random() < 0.25:
        return _ltl_leaf(rng, depth, atoms)
    kind = rng.choice(["and", "until", "until", "F"])
    if kind == "and":
        return ltl.And(random_ltl_untied(rng, depth - 1, atoms), random_ltl_untied(rng, depth - 1, atoms))
    if kind == "F":
        return ltl.F(random_ltl_untied(rng, depth - 1, atoms))
    return ltl.Until(_ltl_leaf(rng, depth - 1, atoms), random_ltl_untied(rng, depth - 1, atoms))


def random_sahlqvist(
    rng: random.Random, depth: int, atoms: Sequence[str], max_conjuncts: int = 2
) -> ltl.Ltl:
    """``!E_1 & ... & !E_m`` with every ``E_i`` untied of height at most ``depth``."""
    m = rng.randint(1, max_conjuncts)
    return ltl.conjoin([ltl.Not(random_ltl_untied(rng, depth, atoms)) for _ in range(m)])


# -- LTL' ---------------------------------------------------------------------


class _Scope:
    """Fresh Fx names plus the variables visible at the current position."""

    def __init__(self) -> None:
        self.counter = itertools.count()

    def fresh(self) -> str:
        k = next(self.counter)
        return "x" if k == 0 else f"x{k}"


def _bound_pair(rng: random.Random, visible: Sequence[str]) -> tuple[PathTerm, PathTerm]:
    bases: list[PathTerm] = [EVAL] + [Var(v) for v in visible]
    candidates = bases + [Succ(b) for b in bases]
    lo, hi = rng.sample(candidates, 2)
    return lo, hi


def random_prime_positive(
    rng: random.Random, depth: int, atoms: Sequence[str], visible: Sequence[str] = (), scope: _Scope | None = None
) -> prime.Prime:
    scope = scope or _Scope()
    if depth <= 0 or rng.random() < 0.25:
        roll = rng.random()
        if roll < 0.05:
            return prime.Top()
        if roll < 0.1:
            return prime.Bottom()
        return prime.Atom(rng.choice(atoms))
    kind = rng.choice(["and", "or", "G", "X", "Fx", "Gh"])
    sub = lambda vis=visible: random_prime_positive(rng, depth - 1, atoms, vis, scope)  # noqa: E731
    if kind == "and":
        return prime.And(sub(), sub())
    if kind == "or":
        return prime.Or(sub(), sub())
    if kind == "G":
        return prime.G(sub())
    if kind == "X":
        return prime.X(sub())
    if kind == "Fx":
        x = scope.fresh()
        return prime.Fx(x, sub(tuple(visible) + (x,)))
    lo, hi = _bound_pair(rng, visible)
    return prime.Ghat(lo, hi, sub())


def random_prime_negative(
    rng: random.Random, depth: int, atoms: Sequence[str], visible: Sequence[str] = (), scope: _Scope | None = None
) -> prime.Prime:
    scope = scope or _Scope()
    roll = rng.random()
    if roll < 0.08:
        return prime.Top()
    if roll < 0.22 and depth > 1:
        return prime.G(random_prime_negative(rng, depth - 1, atoms, visible, scope))
    if roll < 0.36 and depth > 1:
        lo, hi = _bound_pair(rng, visible)
        return prime.Ghat(lo, hi, random_prime_negative(rng, depth - 1, atoms, visible, scope))
    return prime.Not(random_prime_positive(rng, max(depth - 1, 0), atoms, visible, scope))


def random_prime_boxed(
    rng: random.Random, depth: int, atoms: Sequence[str], visible: Sequence[str] = ()
) -> prime.Prime:
    phi: prime.Prime = prime.Atom(rng.choice(atoms))
    for _ in range(rng.randint(0, max(depth, 0))):
        kind = rng.choice(["G", "X", "Gh"])
        if kind == "G":
            phi = prime.G(phi)
        elif kind == "X":
            phi = prime.X(phi)
        else:
            lo, hi = _bound_pair(rng, visible)
            phi = prime.Ghat(lo, hi, phi)
    return phi


def random_prime_untied(
    rng: random.Random, depth: int, atoms: Sequence[str], visible: Sequence[str] = (), scope: _Scope | None = None
) -> prime.Prime:
    """Untied LTL': boxed and negative leaves combined by ``&`` and ``Fx``."""
    scope = scope or _Scope()
    if depth <= 1 or rng.random() < 0.25:
        if rng.random() < 0.5:
            return random_prime_boxed(rng, depth, atoms, visible)
        return random_prime_negative(rng, depth, atoms, visible, scope)
    if rng.random() < 0.5:
        left = random_prime_untied(rng, depth - 1, atoms, visible, scope)
        return prime.And(left, random_prime_untied(rng, depth - 1, atoms, visible, scope))
    x = scope.fresh()
    return prime.Fx(x, random_prime_untied(rng, depth - 1, atoms, tuple(visible) + (x,), scope))


def enumerate_boxed(
    max_ops: int, atom: str = "q", bounds: Sequence[tuple[PathTerm, PathTerm]] | None = None
) -> Iterator[prime.Prime]:
    """Every boxed formula with at most ``max_ops`` operators over one atom."""
    if bounds is None:
        terms = [EVAL, Succ(EVAL), Succ(Succ(EVAL))]
        bounds = [(a, b) for a in terms for b in terms if a != b]
    wraps = [prime.G, prime.X] + [
        (lambda lo, hi: lambda phi: prime.Ghat(lo, hi, phi))(lo, hi) for lo, hi in bounds
    ]
    for k in range(max_ops + 1):
        for ops in itertools.product(wraps, repeat=k):
            phi: prime.Prime = prime.Atom(atom)
            for op in reversed(ops):
                phi = op(phi)
            yield phi


# -- first order --------------------------------------------------------------


def _random_term(rng: random.Random, visible: Sequence[str]) -> PathTerm:
    t: PathTerm = Var(rng.choice(visible)) if visible and rng.random() < 0.7 else EvalPoint()
    while rng.random() < 0.25:
        t = Succ(t)
    return t


def random_fo(
    rng: random.Random, depth: int, preds: Sequence[str] = ("Q",), visible: Sequence[str] = ()
) -> fo.Fo:
    """FO over the path signature, biased towards the shapes correspondents take."""
    if depth <= 0 or rng.random() < 0.2:
        roll = rng.random()
        if roll < 0.05:
            return fo.Top()
        if roll < 0.1:
            return fo.Bottom()
        if roll < 0.35 and preds:
            return fo.PredApp(rng.choice(list(preds)), _random_term(rng, visible))
        rel = rng.choice([fo.Le, fo.Lt, fo.Eq])
        return rel(_random_term(rng, visible), _random_term(rng, visible))
    kind = rng.choice(["not", "and", "or", "implies", "exists", "forall", "guarded_exists", "guarded_forall"])
    sub = lambda vis=visible: random_fo(rng, depth - 1, preds, vis)  # noqa: E731
    if kind == "not":
        return fo.Not(sub())
    if kind in ("and", "or", "implies"):
        return {"and": fo.And, "or": fo.Or, "implies": fo.Implies}[kind](sub(), sub())
    v = rng.choice(["u", "v", "x", "y"])
    inner = tuple(visible) + (v,)
    if kind == "exists":
        return fo.Exists(v, sub(inner))
    if kind == "forall":
        return fo.Forall(v, sub(inner))
    guard = rng.choice([fo.Le, fo.Eq, fo.Lt])(_random_term(rng, visible), Var(v))
    if kind == "guarded_exists":
        return fo.Exists(v, fo.And(guard, sub(inner)))
    return fo.Forall(v, fo.Implies(guard, sub(inner)))
