"""Pretty-printers for LTL, LTL' and first/second-order formulas."""

from __future__ import annotations

from ltlc import fo, ltl, prime
from ltlc.terms import EvalPoint, PathTerm, Succ, Var

# LTL binding strength, loosest first.
_IFF, _IMPL, _OR, _AND, _UNTIL, _UNARY, _ATOM = range(1, 8)


def print_ltl(phi: ltl.Ltl) -> str:
    return _ltl(phi, 0)


def _wrap(text: str, level: int, need: int) -> str:
    return f"({text})" if level < need else text


def _ltl(phi: ltl.Ltl, need: int) -> str:
    if isinstance(phi, ltl.Atom):
        return phi.name
    if isinstance(phi, ltl.Top):
        return "true"
    if isinstance(phi, ltl.Bottom):
        return "false"
    if isinstance(phi, ltl.Not):
        return _wrap("!" + _ltl(phi.arg, _UNARY), _UNARY, need)
    if isinstance(phi, (ltl.G, ltl.F, ltl.X)):
        op = type(phi).__name__
        return _wrap(f"{op} {_ltl(phi.arg, _UNARY)}", _UNARY, need)
    if isinstance(phi, ltl.Until):
        text = f"{_ltl(phi.left, _UNARY)} U {_ltl(phi.right, _UNTIL)}"
        return _wrap(text, _UNTIL, need)
    if isinstance(phi, ltl.And):
        return _wrap(f"{_ltl(phi.left, _AND)} & {_ltl(phi.right, _UNTIL)}", _AND, need)
    if isinstance(phi, ltl.Or):
        return _wrap(f"{_ltl(phi.left, _OR)} | {_ltl(phi.right, _AND)}", _OR, need)
    if isinstance(phi, ltl.Implies):
        return _wrap(f"{_ltl(phi.left, _OR)} -> {_ltl(phi.right, _IMPL)}", _IMPL, need)
    if isinstance(phi, ltl.Iff):
        return _wrap(f"{_ltl(phi.left, _IFF)} <-> {_ltl(phi.right, _IMPL)}", _IFF, need)
    raise TypeError(f"not an LTL formula: {phi!r}")


def print_term(t: PathTerm, eval_name: str = "w") -> str:
    if isinstance(t, EvalPoint):
        return eval_name
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Succ):
        return f"S({print_term(t.arg, eval_name)})"
    raise TypeError(f"not a path term: {t!r}")


def print_ltlprime(phi: prime.Prime) -> str:
    return _prime(phi, 0)


def _prime(phi: prime.Prime, need: int) -> str:
    if isinstance(phi, prime.Atom):
        return phi.name
    if isinstance(phi, prime.Top):
        return "true"
    if isinstance(phi, prime.Bottom):
        return "false"
    if isinstance(phi, prime.Not):
        return _wrap("!" + _prime(phi.arg, _UNARY), _UNARY, need)
    if isinstance(phi, prime.G):
        return _wrap(f"G {_prime(phi.arg, _UNARY)}", _UNARY, need)
    if isinstance(phi, prime.X):
        return _wrap(f"X {_prime(phi.arg, _UNARY)}", _UNARY, need)
    if isinstance(phi, prime.Fx):
        return _wrap(f"Fx[{phi.var}] {_prime(phi.arg, _UNARY)}", _UNARY, need)
    if isinstance(phi, prime.Ghat):
        lo, hi = print_term(phi.lo, "@"), print_term(phi.hi, "@")
        return _wrap(f"Gh[{lo},{hi}] {_prime(phi.arg, _UNARY)}", _UNARY, need)
    if isinstance(phi, prime.And):
        return _wrap(f"{_prime(phi.left, _AND)} & {_prime(phi.right, _UNARY)}", _AND, need)
    if isinstance(phi, prime.Or):
        return _wrap(f"{_prime(phi.left, _OR)} | {_prime(phi.right, _AND)}", _OR, need)
    raise TypeError(f"not an LTL' formula: {phi!r}")


# First-order binding strength, loosest first.  Quantifiers print their
# body bracketed, so they bind like negation.
_F_IMPL, _F_OR, _F_AND, _F_UNARY = range(1, 5)


def print_fo(phi: fo.Fo | fo.SoFormula) -> str:
    if isinstance(phi, fo.SoFormula):
        prefix = "".join(f"{q} {p}. " for q, p in phi.prefix)
        body = _fo(phi.matrix, 0)
        if prefix and not _self_delimiting(phi.matrix):
            body = f"({body})"
        return prefix + body
    return _fo(phi, 0)


def _self_delimiting(phi: fo.Fo) -> bool:
    return isinstance(phi, (fo.PredApp, fo.Top, fo.Bottom, fo.Not, fo.Forall, fo.Exists))


def _fo(phi: fo.Fo, need: int) -> str:
    if isinstance(phi, fo.PredApp):
        return f"{phi.pred}({print_term(phi.term)})"
    if isinstance(phi, fo.Le):
        return _wrap(f"{print_term(phi.left)} <= {print_term(phi.right)}", _F_UNARY, need)
    if isinstance(phi, fo.Lt):
        return _wrap(f"{print_term(phi.left)} < {print_term(phi.right)}", _F_UNARY, need)
    if isinstance(phi, fo.Eq):
        return _wrap(f"{print_term(phi.left)} = {print_term(phi.right)}", _F_UNARY, need)
    if isinstance(phi, fo.Top):
        return "true"
    if isinstance(phi, fo.Bottom):
        return "false"
    if isinstance(phi, fo.Not):
        arg = phi.arg
        inner = _fo(arg, _F_UNARY + 1) if isinstance(arg, fo.RELATIONS) else _fo(arg, _F_UNARY)
        return "!" + inner
    if isinstance(phi, (fo.Forall, fo.Exists)):
        q = "forall" if isinstance(phi, fo.Forall) else "exists"
        body = _fo(phi.body, _F_UNARY)
        if not _self_delimiting(phi.body):
            body = f"({_fo(phi.body, 0)})"
        return f"{q} {phi.var}. {body}"
    if isinstance(phi, fo.And):
        parts = [_fo(p, _F_AND + 1) for p in _flatten(phi, fo.And)]
        return _wrap(" & ".join(parts), _F_AND, need)
    if isinstance(phi, fo.Or):
        parts = [_fo(p, _F_OR + 1) for p in _flatten(phi, fo.Or)]
        return _wrap(" | ".join(parts), _F_OR, need)
    if isinstance(phi, fo.Implies):
        text = f"{_fo(phi.left, _F_OR)} -> {_fo(phi.right, _F_IMPL)}"
        return _wrap(text, _F_IMPL, need)
    raise TypeError(f"not a first-order formula: {phi!r}")


def _flatten(phi: fo.Fo, cls) -> list[fo.Fo]:
    if isinstance(phi, cls):
        return _flatten(phi.left, cls) + _flatten(phi.right, cls)
    return [phi]
