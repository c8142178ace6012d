import random

import pytest

from ltlc import fo, prime
from ltlc.fo import Eq, Exists, Le, PredApp, SoFormula
from ltlc.generate import random_ltl
from ltlc.oracle import (
    LassoFrame,
    ValuationSpace,
    count_frames,
    enumerate_lasso_frames,
    fo_eval,
    frame_valid,
    ltl_ext,
    ltl_holds,
    ltlprime_holds,
    prime_ext,
    so_eval,
    valid_states,
)
from ltlc.parser import parse_ltl, parse_ltlprime
from ltlc.standard import so_closure, st_ltl
from ltlc.terms import EVAL, Succ, Var

CHAIN = LassoFrame((1, 1))          # 0 -> 1 -> 1
LOOP1 = LassoFrame((0,))            # single self-loop
TRIANGLE = LassoFrame((1, 2, 0))    # 0 -> 1 -> 2 -> 0


def test_frame_counts():
    assert count_frames(1) == len(list(enumerate_lasso_frames(1))) == 1
    assert len(list(enumerate_lasso_frames(2, n_min=2))) == 4
    assert len(list(enumerate_lasso_frames(3))) == 32
    assert count_frames(4) == 288


def test_frame_enumeration_guards():
    with pytest.raises(ValueError):
        list(enumerate_lasso_frames(0))
    with pytest.raises(ValueError):
        list(enumerate_lasso_frames(7))


def test_frame_enumeration_is_deterministic():
    assert list(enumerate_lasso_frames(3)) == list(enumerate_lasso_frames(3))


def test_path_structure_laws(frames4):
    for f in frames4:
        for s in range(f.n):
            assert f.le(s, s) and not f.lt(s, s)
            assert f.le(s, f.succ[s])
            for t in range(f.n):
                assert f.lt(s, t) == (f.le(s, t) and s != t)
                for u in range(f.n):
                    if f.le(s, t) and f.le(t, u):
                        assert f.le(s, u)


def test_ltl_holds_examples():
    assert ltl_holds(LOOP1, {"q": {0}}, 0, parse_ltl("G q"))
    assert ltl_holds(CHAIN, {"q": {1}}, 0, parse_ltl("X q"))
    assert not ltl_holds(CHAIN, {"q": {1}}, 0, parse_ltl("q"))
    assert ltl_holds(CHAIN, {"q": {1}}, 0, parse_ltl("!q U q"))


def test_until_guard_covers_every_state_that_reaches_the_witness():
    # on a cycle the guard interval before u contains every other cycle state
    val = {"p": {0}, "r": {1}}
    assert not ltl_holds(TRIANGLE, val, 0, parse_ltl("p U r"))
    assert ltl_holds(TRIANGLE, {"p": {0, 2}, "r": {1}}, 0, parse_ltl("p U r"))


def test_ltlprime_eventually_matches_ltl(frames3):
    for f in frames3:
        space = ValuationSpace.exhaustive(f, ["q"])
        assert prime_ext(space, parse_ltlprime("Fx[x] q")) == ltl_ext(space, parse_ltl("F q"))


def test_ghat_with_coinciding_bound_values_is_vacuous_off_cycles():
    phi = prime.Ghat(EVAL, Var("x"), prime.Atom("q"))
    for f in [CHAIN, LOOP1]:
        for s in range(f.n):
            assert ltlprime_holds(f, {"q": set()}, {"x": s}, s, phi)


def test_ghat_with_coinciding_bound_values_on_a_cycle():
    # {u | s <= u < s} holds the other cycle states, so this is not vacuous
    phi = prime.Ghat(EVAL, Var("x"), prime.Atom("q"))
    assert not ltlprime_holds(TRIANGLE, {"q": set()}, {"x": 0}, 0, phi)


def test_ltlprime_unresolved_variable():
    with pytest.raises(KeyError):
        ltlprime_holds(CHAIN, {"q": set()}, {}, 0, prime.Ghat(EVAL, Var("x"), prime.Atom("q")))


def test_fo_eval_examples():
    assert fo_eval(CHAIN, {}, {"w": 0, "v": 1}, Le(EVAL, Var("v")))
    assert fo_eval(LOOP1, {}, {"w": 0}, Eq(EVAL, Succ(EVAL)))
    assert not fo_eval(CHAIN, {}, {"w": 0}, Eq(EVAL, Succ(EVAL)))
    with pytest.raises(KeyError):
        fo_eval(CHAIN, {}, {"w": 0}, Le(EVAL, Var("v")))


def test_so_eval_existential_predicate():
    matrix = fo.And(PredApp("Q", EVAL), fo.Not(PredApp("Q", Var("v"))))
    phi = SoFormula((("exists", "Q"),), matrix)
    assert so_eval(CHAIN, {"w": 0, "v": 1}, phi)
    assert not so_eval(CHAIN, {"w": 1, "v": 1}, phi)


def test_so_eval_counts_extensions_on_two_states():
    # exactly one of the four extensions of Q on two states is {0}
    phi = SoFormula((("exists", "Q"),), fo.And(PredApp("Q", Var("a")), fo.Not(PredApp("Q", Var("b")))))
    frame = LassoFrame((0, 1))
    hits = [
        fo_eval(frame, {"Q": ext}, {"a": 0, "b": 1}, phi.matrix)
        for ext in [set(), {0}, {1}, {0, 1}]
    ]
    assert hits == [False, True, False, False]
    assert so_eval(frame, {"a": 0, "b": 1}, phi)


@pytest.mark.parametrize(
    "text, frame, state, expected",
    [
        ("!(!q U q)", LOOP1, 0, False),
        ("q | !q", TRIANGLE, 2, True),
        ("!(X q & !q)", LOOP1, 0, True),
        ("!(X q & !q)", CHAIN, 0, False),
    ],
)
def test_frame_valid_examples(text, frame, state, expected):
    assert frame_valid(frame, state, parse_ltl(text)) is expected


def test_frame_valid_everywhere(frames3):
    phi = parse_ltl("!(G q & F !q)")
    assert all(all(valid_states(f, phi)) for f in frames3)


def test_frame_validity_is_universal_second_order_closure(frames3):
    rng = random.Random(23)
    for _ in range(25):
        phi = random_ltl(rng, 3, ["q", "p"])
        closure = so_closure(st_ltl(phi))
        for f in frames3:
            for s in range(f.n):
                assert frame_valid(f, s, phi, ["q", "p"]) == so_eval(f, {"w": s}, closure)


def test_valuation_indexing():
    space = ValuationSpace.exhaustive(CHAIN, ["q", "p"])
    assert space.size == 16
    assert space.valuation(0b0110) == {"q": [1], "p": [0]}
    assert space.col("q", 1) >> 0b0110 & 1 == 1
