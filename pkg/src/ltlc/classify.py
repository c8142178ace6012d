"""Syntactic classes: boxed, positive, negative, untied and Sahlqvist.

``true`` counts as negative (it is the negation of ``false``), which is what
lets ``F phi`` be read as ``true U phi``.  A ``G`` over a negative formula is
also accepted as negative; it is antitone in every atom.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ltlc import ltl, prime


@dataclass(frozen=True)
class Boxed:
    formula: object


@dataclass(frozen=True)
class Negative:
    formula: object


@dataclass(frozen=True)
class UntilNode:
    guard: Boxed | Negative
    tail: UntiedShape


@dataclass(frozen=True)
class ConjNode:
    left: UntiedShape
    right: UntiedShape


@dataclass(frozen=True)
class FxNode:
    var: str
    body: UntiedShape


# Wrappers the engine understands but the untied grammar never produces.
@dataclass(frozen=True)
class NextNode:
    body: UntiedShape


@dataclass(frozen=True)
class GhatNode:
    lo: object
    hi: object
    body: UntiedShape


UntiedShape = Union[Boxed, Negative, UntilNode, ConjNode, FxNode, NextNode, GhatNode]
LEAVES = (Boxed, Negative)


@dataclass(frozen=True)
class NotUntied:
    """Verdict for a formula outside the untied grammar."""

    offender: object
    reason: str

    def __bool__(self) -> bool:
        return False


class NotSahlqvistError(ValueError):
    def __init__(self, conjunct, reason: str):
        self.conjunct = conjunct
        self.reason = reason
        super().__init__(f"not Sahlqvist: {conjunct}: {reason}")


def shape_leaves(shape: UntiedShape) -> list[Boxed | Negative]:
    if isinstance(shape, LEAVES):
        return [shape]
    if isinstance(shape, UntilNode):
        return [shape.guard] + shape_leaves(shape.tail)
    if isinstance(shape, ConjNode):
        return shape_leaves(shape.left) + shape_leaves(shape.right)
    return shape_leaves(shape.body)


# -- LTL --------------------------------------------------------------------


def is_ltl_boxed(phi: ltl.Ltl) -> bool:
    while isinstance(phi, (ltl.G, ltl.X)):
        phi = phi.arg
    return isinstance(phi, ltl.Atom)


def is_ltl_positive(phi: ltl.Ltl) -> bool:
    if isinstance(phi, (ltl.Atom, ltl.Top, ltl.Bottom)):
        return True
    if isinstance(phi, (ltl.G, ltl.F, ltl.X)):
        return is_ltl_positive(phi.arg)
    if isinstance(phi, (ltl.And, ltl.Or, ltl.Until)):
        return is_ltl_positive(phi.left) and is_ltl_positive(phi.right)
    return False


def is_ltl_negative(phi: ltl.Ltl) -> bool:
    if isinstance(phi, ltl.Top):
        return True
    if isinstance(phi, ltl.Not):
        return is_ltl_positive(phi.arg)
    if isinstance(phi, ltl.G):
        return is_ltl_negative(phi.arg)
    return False


def _ltl_leaf(phi: ltl.Ltl) -> Boxed | Negative | None:
    if is_ltl_boxed(phi):
        return Boxed(phi)
    if is_ltl_negative(phi):
        return Negative(phi)
    return None


def classify_ltl_untied(phi: ltl.Ltl) -> UntiedShape | NotUntied:
    leaf = _ltl_leaf(phi)
    if leaf is not None:
        return leaf
    if isinstance(phi, ltl.F):
        phi = ltl.Until(ltl.Top(), phi.arg)
    if isinstance(phi, ltl.Until):
        guard = _ltl_leaf(phi.left)
        if guard is None:
            return NotUntied(phi.left, "until guard is neither boxed nor negative")
        tail = classify_ltl_untied(phi.right)
        return UntilNode(guard, tail) if tail else tail
    if isinstance(phi, ltl.And):
        left = classify_ltl_untied(phi.left)
        if not left:
            return left
        right = classify_ltl_untied(phi.right)
        return ConjNode(left, right) if right else right
    return NotUntied(phi, "not built from boxed and negative formulas by U and &")


def sahlqvist_verdict(phi: ltl.Ltl) -> list[UntiedShape] | NotSahlqvistError:
    shapes = []
    for c in ltl.conjuncts(phi):
        if not isinstance(c, ltl.Not):
            return NotSahlqvistError(c, "conjunct is not a negation")
        shape = classify_ltl_untied(c.arg)
        if not shape:
            return NotSahlqvistError(shape.offender, shape.reason)
        shapes.append(shape)
    return shapes


def is_ltl_sahlqvist(phi: ltl.Ltl) -> bool:
    return not isinstance(sahlqvist_verdict(phi), NotSahlqvistError)


def decompose_sahlqvist(phi: ltl.Ltl) -> list[ltl.Ltl]:
    """The untied formulas ``E_i`` with ``phi = !E_1 & ... & !E_m``."""
    verdict = sahlqvist_verdict(phi)
    if isinstance(verdict, NotSahlqvistError):
        raise verdict
    return [c.arg for c in ltl.conjuncts(phi)]


# -- LTL' -------------------------------------------------------------------


def is_ltlprime_boxed(phi: prime.Prime) -> bool:
    while isinstance(phi, (prime.G, prime.X, prime.Ghat)):
        phi = phi.arg
    return isinstance(phi, prime.Atom)


def is_ltlprime_positive(phi: prime.Prime) -> bool:
    if isinstance(phi, (prime.Atom, prime.Top, prime.Bottom)):
        return True
    if isinstance(phi, (prime.G, prime.X, prime.Fx, prime.Ghat)):
        return is_ltlprime_positive(phi.arg)
    if isinstance(phi, (prime.And, prime.Or)):
        return is_ltlprime_positive(phi.left) and is_ltlprime_positive(phi.right)
    return False


def is_ltlprime_negative(phi: prime.Prime) -> bool:
    if isinstance(phi, prime.Top):
        return True
    if isinstance(phi, prime.Not):
        return is_ltlprime_positive(phi.arg)
    if isinstance(phi, (prime.Ghat, prime.G)):
        return is_ltlprime_negative(phi.arg)
    return False


def classify_ltlprime_untied(phi: prime.Prime) -> UntiedShape | NotUntied:
    if is_ltlprime_boxed(phi):
        return Boxed(phi)
    if is_ltlprime_negative(phi):
        return Negative(phi)
    if isinstance(phi, prime.Fx):
        body = classify_ltlprime_untied(phi.arg)
        return FxNode(phi.var, body) if body else body
    if isinstance(phi, prime.And):
        left = classify_ltlprime_untied(phi.left)
        if not left:
            return left
        right = classify_ltlprime_untied(phi.right)
        return ConjNode(left, right) if right else right
    return NotUntied(phi, "not built from boxed and negative formulas by Fx and &")


def shape_formula(shape: UntiedShape) -> prime.Prime:
    """Reassemble the LTL' formula an LTL'-side shape describes."""
    if isinstance(shape, LEAVES):
        return shape.formula
    if isinstance(shape, ConjNode):
        return prime.And(shape_formula(shape.left), shape_formula(shape.right))
    if isinstance(shape, FxNode):
        return prime.Fx(shape.var, shape_formula(shape.body))
    if isinstance(shape, NextNode):
        return prime.X(shape_formula(shape.body))
    if isinstance(shape, GhatNode):
        return prime.Ghat(shape.lo, shape.hi, shape_formula(shape.body))
    raise TypeError(f"not an LTL' shape: {shape!r}")


def is_ltlprime_sahlqvist(phi: prime.Prime) -> bool:
    return all(
        isinstance(c, prime.Not) and bool(classify_ltlprime_untied(c.arg))
        for c in prime.conjuncts(phi)
    )
