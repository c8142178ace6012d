import random

import pytest

from ltlc import ltl, prime
from ltlc.classify import (
    Boxed,
    ConjNode,
    FxNode,
    Negative,
    NotSahlqvistError,
    NotUntied,
    UntilNode,
    classify_ltl_untied,
    classify_ltlprime_untied,
    decompose_sahlqvist,
    is_ltl_boxed,
    is_ltl_negative,
    is_ltl_positive,
    is_ltl_sahlqvist,
    is_ltlprime_boxed,
    is_ltlprime_negative,
    is_ltlprime_positive,
    is_ltlprime_sahlqvist,
    sahlqvist_verdict,
    shape_formula,
    shape_leaves,
)
from ltlc.generate import random_ltl_untied
from ltlc.parser import parse_ltl, parse_ltlprime
from ltlc.terms import EVAL, Var
from ltlc.translate import tau

P = parse_ltlprime


@pytest.mark.parametrize("text, expected", [("G X q", True), ("q", True), ("F q", False), ("X !q", False), ("G (p & q)", False)])
def test_ltl_boxed(text, expected):
    assert is_ltl_boxed(parse_ltl(text)) is expected


def test_ltl_positive_and_negative():
    assert is_ltl_positive(parse_ltl("G F (p | q U r)"))
    assert not is_ltl_positive(parse_ltl("!q"))
    assert is_ltl_negative(parse_ltl("!(p & G q)"))
    assert is_ltl_negative(parse_ltl("true"))
    assert is_ltl_negative(parse_ltl("G !q"))
    assert not is_ltl_negative(parse_ltl("!X !X q"))


@pytest.mark.parametrize(
    "text, expected",
    [("G Fx[x] q", True), ("Fx[x] (Gh[@,x] q & !p)", False), ("false", True), ("Fx[x] Gh[@,x] X (p | q)", True)],
)
def test_ltlprime_positive(text, expected):
    assert is_ltlprime_positive(P(text)) is expected


@pytest.mark.parametrize(
    "text, expected",
    [
        ("Fx[x] Fx[y] Gh[x,y] !(p & q)", True),
        ("!X !X q", False),
        ("G !q", True),
        ("true", True),
        ("Gh[@,S(@)] G !q", True),
    ],
)
def test_ltlprime_negative(text, expected):
    phi = P(text)
    # the bounded form under test is the innermost non-Fx formula
    while isinstance(phi, prime.Fx):
        phi = phi.arg
    assert is_ltlprime_negative(phi) is expected


def test_ltlprime_boxed():
    assert is_ltlprime_boxed(P("Gh[@,S(@)] G X q"))
    assert not is_ltlprime_boxed(P("Fx[x] q"))


def test_untied_until_shape():
    shape = classify_ltl_untied(parse_ltl("!q U q"))
    assert shape == UntilNode(Negative(parse_ltl("!q")), Boxed(parse_ltl("q")))


def test_untied_eventually_reads_as_true_until():
    shape = classify_ltl_untied(parse_ltl("G q & F !q"))
    assert shape == ConjNode(Boxed(parse_ltl("G q")), UntilNode(Negative(ltl.Top()), Negative(parse_ltl("!q"))))


def test_not_untied_reports_offender():
    verdict = classify_ltl_untied(parse_ltl("(F q) U q"))
    assert isinstance(verdict, NotUntied) and not verdict
    assert verdict.offender == parse_ltl("F q")


def test_sahlqvist_examples():
    assert is_ltl_sahlqvist(parse_ltl("!(!q U q)"))
    assert decompose_sahlqvist(parse_ltl("!(!q U q)")) == [parse_ltl("!q U q")]
    two = parse_ltl("!(G q & F !q) & !(X q & !q)")
    assert decompose_sahlqvist(two) == [parse_ltl("G q & F !q"), parse_ltl("X q & !q")]
    assert not is_ltl_sahlqvist(parse_ltl("!((F q) U q)"))


def test_decompose_refuses_with_failing_conjunct():
    with pytest.raises(NotSahlqvistError) as info:
        decompose_sahlqvist(parse_ltl("!(G q) & q"))
    assert info.value.conjunct == parse_ltl("q")


def test_implication_is_desugared_before_matching():
    # G q -> q becomes !G q | q, which is not a conjunction of negations
    assert not is_ltl_sahlqvist(ltl.desugar(parse_ltl("G q -> q")))
    assert isinstance(sahlqvist_verdict(parse_ltl("q")), NotSahlqvistError)


def test_decompose_reassembles_input():
    phi = parse_ltl("!(q U p) & (!(G q) & !(X p & !p))")
    again = ltl.conjoin([ltl.Not(e) for e in decompose_sahlqvist(phi)])
    assert ltl.conjuncts(again) == ltl.conjuncts(phi)


def test_ltlprime_untied_examples():
    shape = classify_ltlprime_untied(P("Fx[x] (q & Gh[@,x] !q)"))
    assert shape == FxNode("x", ConjNode(Boxed(P("q")), Negative(prime.Ghat(EVAL, Var("x"), P("!q")))))
    assert classify_ltlprime_untied(P("Gh[@,S(@)] G q")) == Boxed(P("Gh[@,S(@)] G q"))
    assert not classify_ltlprime_untied(P("Fx[x] !G !q"))


def test_ltlprime_sahlqvist():
    assert is_ltlprime_sahlqvist(P("!Fx[x] (q & Gh[@,x] !q)"))
    assert not is_ltlprime_sahlqvist(P("Fx[x] q"))


def test_shape_helpers():
    shape = classify_ltlprime_untied(P("Fx[x] (q & Gh[@,x] !q)"))
    assert shape_formula(shape) == P("Fx[x] (q & Gh[@,x] !q)")
    assert [type(leaf) for leaf in shape_leaves(shape)] == [Boxed, Negative]


def test_translation_preserves_untiedness():
    rng = random.Random(41)
    for _ in range(300):
        phi = random_ltl_untied(rng, 4, ["q", "p"])
        assert classify_ltl_untied(phi)
        assert classify_ltlprime_untied(tau(phi)), phi


def test_no_formula_is_both_boxed_and_negative():
    for text in ["q", "G q", "X G q", "!q", "true", "G !q"]:
        phi = parse_ltl(text)
        assert not (is_ltl_boxed(phi) and is_ltl_negative(phi))
