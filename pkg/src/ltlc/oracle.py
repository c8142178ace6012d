"""Brute-force semantics over finite deterministic serial transition systems.

Under determinism every state starts exactly one path, so paths and states
coincide: ``w <= v`` is reachability in zero or more steps, ``w < v`` is
``w <= v`` with ``w != v`` and ``S`` is the successor function.

Evaluation is bit-parallel over valuations.  A :class:`ValuationSpace` fixes
a frame and a batch of valuations; formula extensions are lists with one
int per state whose bit ``i`` says whether the formula holds there under
valuation ``i``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterator, Mapping

from ltlc import fo, ltl, prime
from ltlc.terms import EvalPoint, PathTerm, Succ, Var

MAX_STATES = 6


@dataclass(frozen=True)
class LassoFrame:
    succ: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.succ)
        if n == 0 or any(not 0 <= t < n for t in self.succ):
            raise ValueError(f"successor function must be total on 0..{n - 1}")

    @property
    def n(self) -> int:
        return len(self.succ)

    @cached_property
    def reach(self) -> tuple[tuple[int, ...], ...]:
        """States reachable from each state, itself included."""
        out = []
        for s in range(self.n):
            seen = [s]
            t = self.succ[s]
            while t not in seen:
                seen.append(t)
                t = self.succ[t]
            out.append(tuple(sorted(seen)))
        return tuple(out)

    @cached_property
    def reach_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(r) for r in self.reach)

    def le(self, a: int, b: int) -> bool:
        return b in self.reach_sets[a]

    def lt(self, a: int, b: int) -> bool:
        return a != b and b in self.reach_sets[a]

    @cached_property
    def le_table(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(b in self.reach_sets[a] for b in range(self.n)) for a in range(self.n))

    @cached_property
    def lt_table(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(a != b and self.le_table[a][b] for b in range(self.n)) for a in range(self.n))

    def between(self, lo: int, hi: int) -> list[int]:
        """Points ``u`` with ``lo <= u < hi``."""
        return [u for u in self.reach[lo] if u != hi and hi in self.reach_sets[u]]

    def to_json(self) -> dict:
        return {"n": self.n, "succ": list(self.succ)}


def enumerate_lasso_frames(n_max: int, n_min: int = 1) -> Iterator[LassoFrame]:
    """Every successor function on ``n_min..n_max`` states, in a fixed order."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if n_max > MAX_STATES:
        raise ValueError(f"refusing to enumerate frames beyond {MAX_STATES} states")
    for n in range(max(n_min, 1), n_max + 1):
        for succ in itertools.product(range(n), repeat=n):
            yield LassoFrame(succ)


def count_frames(n_max: int) -> int:
    return sum(n**n for n in range(1, n_max + 1))


Valuation = Mapping[str, "frozenset[int] | set[int]"]


class ValuationSpace:
    """A frame together with a batch of valuations of some atoms."""

    def __init__(self, frame: LassoFrame, columns: dict[str, list[int]], size: int):
        self.frame = frame
        self.columns = columns
        self.size = size
        self.full = (1 << size) - 1
        self.atoms = list(columns)

    @classmethod
    def exhaustive(cls, frame: LassoFrame, atoms: list[str]) -> ValuationSpace:
        """All ``2**(n*k)`` valuations; bit ``j*n + s`` of index ``i`` says
        whether atom ``j`` holds at state ``s``."""
        n = frame.n
        nbits = n * len(atoms)
        size = 1 << nbits
        full = (1 << size) - 1
        columns = {}
        for j, atom in enumerate(atoms):
            columns[atom] = [_bit_pattern(j * n + s, nbits, full) for s in range(n)]
        return cls(frame, columns, size)

    @classmethod
    def single(cls, frame: LassoFrame, val: Valuation) -> ValuationSpace:
        columns = {a: [1 if s in states else 0 for s in range(frame.n)] for a, states in val.items()}
        return cls(frame, columns, 1)

    def valuation(self, index: int) -> dict[str, list[int]]:
        n = self.frame.n
        return {
            a: [s for s in range(n) if (index >> (j * n + s)) & 1]
            for j, a in enumerate(self.atoms)
        }

    def col(self, atom: str, s: int) -> int:
        try:
            return self.columns[atom][s]
        except KeyError:
            raise KeyError(f"atom {atom!r} has no valuation") from None


def _bit_pattern(b: int, nbits: int, full: int) -> int:
    """Mask of indices ``i < 2**nbits`` with bit ``b`` set."""
    half = 1 << b
    block = ((1 << half) - 1) << half
    period = (1 << (2 * half)) - 1
    return (full // period) * block


def first_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


# -- LTL ----------------------------------------------------------------------


def ltl_ext(space: ValuationSpace, phi: ltl.Ltl) -> list[int]:
    return _LtlEval(space).ext(phi)


class _LtlEval:
    def __init__(self, space: ValuationSpace):
        self.space = space
        self.memo: dict[int, list[int]] = {}

    def ext(self, phi: ltl.Ltl) -> list[int]:
        key = id(phi)
        if key not in self.memo:
            self.memo[key] = self._ext(phi)
        return self.memo[key]

    def _ext(self, phi: ltl.Ltl) -> list[int]:
        sp, fr = self.space, self.space.frame
        n, full = fr.n, sp.full
        if isinstance(phi, ltl.Atom):
            return [sp.col(phi.name, s) for s in range(n)]
        if isinstance(phi, ltl.Top):
            return [full] * n
        if isinstance(phi, ltl.Bottom):
            return [0] * n
        if isinstance(phi, ltl.Not):
            return [full ^ c for c in self.ext(phi.arg)]
        if isinstance(phi, ltl.X):
            a = self.ext(phi.arg)
            return [a[fr.succ[s]] for s in range(n)]
        if isinstance(phi, ltl.G):
            a = self.ext(phi.arg)
            return [_all(a[t] for t in fr.reach[s]) & full for s in range(n)]
        if isinstance(phi, ltl.F):
            a = self.ext(phi.arg)
            return [_any(a[t] for t in fr.reach[s]) for s in range(n)]
        a, b = self.ext(phi.left), self.ext(phi.right)
        if isinstance(phi, ltl.And):
            return [x & y for x, y in zip(a, b)]
        if isinstance(phi, ltl.Or):
            return [x | y for x, y in zip(a, b)]
        if isinstance(phi, ltl.Implies):
            return [(full ^ x) | y for x, y in zip(a, b)]
        if isinstance(phi, ltl.Iff):
            return [full ^ (x ^ y) for x, y in zip(a, b)]
        if isinstance(phi, ltl.Until):
            out = []
            for s in range(n):
                acc = 0
                for u in fr.reach[s]:
                    # every v with s <= v < u must satisfy the guard
                    guard = full
                    for v in fr.reach[s]:
                        if v != u and fr.le(v, u):
                            guard &= a[v]
                    acc |= b[u] & guard
                out.append(acc)
            return out
        raise TypeError(f"not an LTL formula: {phi!r}")


def _all(items) -> int:
    acc = -1
    for x in items:
        acc &= x
    return acc


def _any(items) -> int:
    acc = 0
    for x in items:
        acc |= x
    return acc


def ltl_holds(frame: LassoFrame, val: Valuation, s: int, phi: ltl.Ltl) -> bool:
    return bool(ltl_ext(ValuationSpace.single(frame, val), phi)[s])


# -- LTL' ---------------------------------------------------------------------


class PrimeEval:
    """Evaluator for LTL' with Ĝ bounds resolved through an environment.

    ``@`` resolves to the anchor: the top-level evaluation point, or the
    point at which the innermost enclosing Fx is evaluated.
    """

    def __init__(self, space: ValuationSpace):
        self.space = space
        self.memo: dict[tuple, int] = {}
        self.deps: dict[int, tuple[tuple[str, ...], bool]] = {}

    def _deps(self, phi: prime.Prime) -> tuple[tuple[str, ...], bool]:
        key = id(phi)
        if key not in self.deps:
            self.deps[key] = (tuple(sorted(prime.free_vars(phi))), prime.uses_anchor(phi))
        return self.deps[key]

    def ext(self, phi: prime.Prime, env: Mapping[str, int] | None = None) -> list[int]:
        env = dict(env or {})
        return [self.at(phi, s, s, env) for s in range(self.space.frame.n)]

    def term(self, t: PathTerm, anchor: int, env: Mapping[str, int]) -> int:
        if isinstance(t, EvalPoint):
            return anchor
        if isinstance(t, Var):
            try:
                return env[t.name]
            except KeyError:
                raise KeyError(f"unresolved path variable {t.name!r}") from None
        return self.space.frame.succ[self.term(t.arg, anchor, env)]

    def at(self, phi: prime.Prime, s: int, anchor: int, env: Mapping[str, int]) -> int:
        names, anchored = self._deps(phi)
        key = (id(phi), s, anchor if anchored else -1, tuple(env.get(v, -1) for v in names))
        hit = self.memo.get(key)
        if hit is None:
            hit = self.memo[key] = self._at(phi, s, anchor, env)
        return hit

    def _at(self, phi, s, anchor, env) -> int:
        sp, fr = self.space, self.space.frame
        full = sp.full
        if isinstance(phi, prime.Atom):
            return sp.col(phi.name, s)
        if isinstance(phi, prime.Top):
            return full
        if isinstance(phi, prime.Bottom):
            return 0
        if isinstance(phi, prime.Not):
            return full ^ self.at(phi.arg, s, anchor, env)
        if isinstance(phi, prime.And):
            left = self.at(phi.left, s, anchor, env)
            return left and left & self.at(phi.right, s, anchor, env)
        if isinstance(phi, prime.Or):
            left = self.at(phi.left, s, anchor, env)
            return full if left == full else left | self.at(phi.right, s, anchor, env)
        if isinstance(phi, prime.X):
            return self.at(phi.arg, fr.succ[s], anchor, env)
        if isinstance(phi, prime.G):
            acc = full
            for t in fr.reach[s]:
                acc &= self.at(phi.arg, t, anchor, env)
                if not acc:
                    break
            return acc
        if isinstance(phi, prime.Fx):
            acc = 0
            for t in fr.reach[s]:
                acc |= self.at(phi.arg, t, s, {**env, phi.var: t})
                if acc == full:
                    break
            return acc
        if isinstance(phi, prime.Ghat):
            lo, hi = self.term(phi.lo, anchor, env), self.term(phi.hi, anchor, env)
            acc = full
            for u in fr.between(lo, hi):
                acc &= self.at(phi.arg, u, anchor, env)
                if not acc:
                    break
            return acc
        raise TypeError(f"not an LTL' formula: {phi!r}")


def prime_ext(space: ValuationSpace, phi: prime.Prime, env: Mapping[str, int] | None = None) -> list[int]:
    return PrimeEval(space).ext(phi, env)


def ltlprime_holds(
    frame: LassoFrame, val: Valuation, env: Mapping[str, int], s: int, phi: prime.Prime
) -> bool:
    """Truth of ``phi`` at ``s``; ``@`` outside any Fx is ``s`` itself."""
    ev = PrimeEval(ValuationSpace.single(frame, val))
    return bool(ev.at(phi, s, s, dict(env)))


# -- first and second order ---------------------------------------------------


class FoEval:
    """Tarskian evaluation over the path structure of a frame.

    Predicate ``Q`` is read as the atom ``q`` of the valuation space.  In
    environments the key ``w`` holds the evaluation point.  Formulas are
    compiled to closures once per evaluator.
    """

    def __init__(self, space: ValuationSpace):
        self.space = space
        self._compiled: dict[int, tuple[fo.Fo, Callable[[dict], int]]] = {}

    def term(self, t: PathTerm, env: Mapping[str, int]) -> int:
        return self._term(t)(env)

    def eval(self, phi: fo.Fo, env: Mapping[str, int]) -> int:
        hit = self._compiled.get(id(phi))
        if hit is None or hit[0] is not phi:
            hit = self._compiled[id(phi)] = (phi, self._compile(phi))
        return hit[1](dict(env))

    def _term(self, t: PathTerm) -> Callable[[dict], int]:
        if isinstance(t, Succ):
            inner, succ = self._term(t.arg), self.space.frame.succ
            return lambda env: succ[inner(env)]
        name = "w" if isinstance(t, EvalPoint) else t.name

        def lookup(env):
            try:
                return env[name]
            except KeyError:
                raise KeyError(f"unresolved variable {name!r}") from None

        return lookup

    def _compile(self, phi: fo.Fo) -> Callable[[dict], int]:
        sp, fr = self.space, self.space.frame
        full = sp.full
        if isinstance(phi, fo.PredApp):
            atom, at = fo.atom_name(phi.pred), self._term(phi.term)
            return lambda env: sp.col(atom, at(env))
        if isinstance(phi, fo.RELATIONS):
            a, b = self._term(phi.left), self._term(phi.right)
            if isinstance(phi, fo.Eq):
                return lambda env: full if a(env) == b(env) else 0
            table = fr.le_table if isinstance(phi, fo.Le) else fr.lt_table
            return lambda env: full if table[a(env)][b(env)] else 0
        if isinstance(phi, fo.Top):
            return lambda env: full
        if isinstance(phi, fo.Bottom):
            return lambda env: 0
        if isinstance(phi, fo.Not):
            arg = self._compile(phi.arg)
            return lambda env: full ^ arg(env)
        if isinstance(phi, fo.BINARY):
            left, right = self._compile(phi.left), self._compile(phi.right)
            if isinstance(phi, fo.And):
                def conj(env):
                    m = left(env)
                    return m and m & right(env)
                return conj
            negate = isinstance(phi, fo.Implies)

            def disj(env):
                m = left(env)
                if negate:
                    m ^= full
                return full if m == full else m | right(env)
            return disj
        if isinstance(phi, fo.QUANTIFIED):
            body, var, states = self._compile(phi.body), phi.var, range(fr.n)
            universal = isinstance(phi, fo.Forall)

            def quant(env):
                saved = env.get(var, _UNSET)
                acc = full if universal else 0
                for t in states:
                    env[var] = t
                    if universal:
                        acc &= body(env)
                        if not acc:
                            break
                    else:
                        acc |= body(env)
                        if acc == full:
                            break
                if saved is _UNSET:
                    del env[var]
                else:
                    env[var] = saved
                return acc
            return quant
        raise TypeError(f"not a first-order formula: {phi!r}")


_UNSET = object()


def fo_ext(space: ValuationSpace, phi: fo.Fo, env: Mapping[str, int] | None = None) -> list[int]:
    """Extension of ``phi`` with the evaluation point ``w`` ranging over states."""
    ev = FoEval(space)
    env = dict(env or {})
    return [ev.eval(phi, {**env, "w": s}) for s in range(space.frame.n)]


def fo_eval(
    frame: LassoFrame, preds: Mapping[str, "set[int] | frozenset[int]"], env: Mapping[str, int], phi: fo.Fo
) -> bool:
    """``preds`` maps predicate symbols (``Q``) to their extensions."""
    val = {fo.atom_name(p): states for p, states in preds.items()}
    return bool(FoEval(ValuationSpace.single(frame, val)).eval(phi, env))


def so_eval(
    frame: LassoFrame,
    env: Mapping[str, int],
    phi: fo.SoFormula,
    preds: Mapping[str, "set[int] | frozenset[int]"] | None = None,
) -> bool:
    """Quantify each prefixed predicate over all ``2**n`` subsets of states."""
    preds = dict(preds or {})
    if not phi.prefix:
        return fo_eval(frame, preds, env, phi.matrix)
    (q, sym), rest = phi.prefix[0], fo.SoFormula(phi.prefix[1:], phi.matrix)
    results = (
        so_eval(frame, env, rest, {**preds, sym: ext})
        for ext in _subsets(frame.n)
    )
    return all(results) if q == "forall" else any(results)


def _subsets(n: int) -> Iterator[frozenset[int]]:
    for mask in range(1 << n):
        yield frozenset(s for s in range(n) if mask >> s & 1)


def frame_valid(frame: LassoFrame, s: int, phi: ltl.Ltl, atoms: list[str] | None = None) -> bool:
    """Whether ``phi`` holds at ``s`` under every valuation of ``atoms``."""
    atoms = ltl.atoms(phi) if atoms is None else atoms
    space = ValuationSpace.exhaustive(frame, atoms)
    return ltl_ext(space, phi)[s] == space.full


def valid_states(frame: LassoFrame, phi: ltl.Ltl, atoms: list[str] | None = None) -> list[bool]:
    atoms = ltl.atoms(phi) if atoms is None else atoms
    space = ValuationSpace.exhaustive(frame, atoms)
    return [c == space.full for c in ltl_ext(space, phi)]
