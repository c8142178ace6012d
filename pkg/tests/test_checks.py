import random

import pytest

from ltlc import fo
from ltlc.checks import (
    check_antitonicity,
    check_boxed_lemma,
    check_correspondence,
    check_inclusion_random,
    check_main_lemma,
    check_monotonicity,
    check_tau_equivalence,
    main_lemma_condition,
)
from ltlc.classify import Boxed, Negative, classify_ltlprime_untied
from ltlc.generate import random_prime_negative, random_prime_positive
from ltlc.oracle import LassoFrame, enumerate_lasso_frames, ltl_holds
from ltlc.parser import parse_ltl, parse_ltlprime
from ltlc.terms import EVAL
from ltlc.translate import tau

P = parse_ltlprime
CHAIN = LassoFrame((1, 1))


def _self_loop_states(n_max):
    return [(f, s) for f in enumerate_lasso_frames(n_max) for s in range(f.n) if f.succ[s] == s]


def test_golden_correspondence():
    report = check_correspondence(parse_ltl("!(!q U q)"), 3)
    assert report.passed and report.cases == 90


def test_next_correspondent_holds_exactly_at_self_loops():
    phi = parse_ltl("!(X q & !q)")
    report = check_correspondence(phi, 4)
    assert report.passed
    # 1 + 4 + 27 + 256 frames; a state is a self-loop in n**(n-1) of the n**n frames
    assert len(_self_loop_states(4)) == 1 + 2 * 2 + 3 * 9 + 4 * 64


def test_wrong_correspondent_yields_counterexample():
    report = check_correspondence(parse_ltl("!(X q & !q)"), 3, corr=fo.Top())
    assert not report.passed
    cex = report.counterexample.to_json()
    assert set(cex) == {"n", "succ", "valuation", "state"}
    frame = LassoFrame(tuple(cex["succ"]))
    assert frame.succ[cex["state"]] != cex["state"]
    # the reported valuation falsifies the formula there
    assert not ltl_holds(frame, {a: set(s) for a, s in cex["valuation"].items()}, cex["state"], parse_ltl("!(X q & !q)"))


def test_correspondence_refuses_predicates():
    with pytest.raises(ValueError):
        check_correspondence(parse_ltl("!(X q & !q)"), 2, corr=fo.PredApp("Q", EVAL))


def test_tau_check_counts_cases():
    report = check_tau_equivalence(parse_ltl("p U q"), 3)
    assert report.passed and report.cases == 90


def test_monotonicity_examples():
    phi = P("G Fx[x] q")
    assert check_monotonicity(phi, CHAIN, {"q": {1}}, {"q": {0, 1}}).passed
    assert check_monotonicity(phi, CHAIN, {"q": {1}}, {"q": {1}}).passed
    assert check_antitonicity(P("!q"), CHAIN, {"q": {1}}, {"q": {1}}).passed


def test_antitonicity_example():
    N = P("Gh[@,S(@)] !(q & p)")
    assert check_inclusion_random(N, 4, seed=1, decreasing=True).passed
    assert check_antitonicity(N, CHAIN, {"q": {1}, "p": set()}, {"q": {0, 1}, "p": {0, 1}}).passed


def test_monotonicity_detects_a_negative_formula():
    report = check_inclusion_random(P("!q"), 2, seed=0)
    assert not report.passed
    assert "q'" in report.counterexample.valuation


def test_unordered_valuations_are_rejected():
    with pytest.raises(ValueError):
        check_monotonicity(P("q"), CHAIN, {"q": {0}}, {"q": {1}})


def test_random_inclusions():
    rng = random.Random(8)
    for i in range(20):
        assert check_inclusion_random(random_prime_positive(rng, 4, ["q", "p"]), 3, seed=i).passed
        assert check_inclusion_random(random_prime_negative(rng, 4, ["q", "p"]), 3, seed=i, decreasing=True).passed


@pytest.mark.parametrize("text", ["q", "G q", "X G q", "Gh[S(@),@] X q"])
def test_boxed_lemma(text, frames3):
    for frame in frames3:
        assert check_boxed_lemma(P(text), frame).passed


def test_boxed_lemma_single_valuation():
    assert check_boxed_lemma(P("G q"), CHAIN, {"q": {1}}).passed


def test_main_lemma_examples():
    assert check_main_lemma(Boxed(P("G q")), 3).passed
    neg = check_main_lemma(Negative(P("!q")), 3)
    assert neg.passed and neg.cases == 90
    golden = check_main_lemma(tau(parse_ltl("!q U q")), 3)
    assert golden.passed and golden.cases > 0


def test_main_lemma_condition_for_boxed_leaf():
    cond = main_lemma_condition(Boxed(P("G q")))
    assert str(cond) == "forall y. (exists u. (w <= u & u = y) -> Q(y))"


def test_main_lemma_skips_states_without_witness():
    report = check_main_lemma(P("q & !q"), 2)
    assert report.passed and report.cases == 0 and report.skipped == 1 + 4 * 2


def test_main_lemma_rejects_non_untied():
    with pytest.raises(ValueError):
        check_main_lemma(P("Fx[x] !G !q"), 2)


def test_main_lemma_check_is_not_vacuous():
    """Swapping in a wrong minimal extension must be caught."""
    from ltlc import checks

    original = checks.main_lemma_condition
    try:
        checks.main_lemma_condition = lambda shape: fo.Top()
        assert not check_main_lemma(classify_ltlprime_untied(P("G q")), 2).passed
    finally:
        checks.main_lemma_condition = original
