import pytest

from ltlc import fo, ltl, prime
from ltlc.fo import CaptureError, Eq, Exists, Forall, Implies, Le, PredApp, PredicateDef
from ltlc.terms import EVAL, Succ, Var, VarSupply, fresh_var, subst_term, succ_n, term_vars


def test_fresh_var_suffixes_reserved_hint():
    assert fresh_var(VarSupply(reserved={"x"}), "x") == "x1"


def test_fresh_var_successive_calls_are_distinct():
    supply = VarSupply(reserved={"x"})
    assert [supply.fresh("x"), supply.fresh("x")] == ["x1", "x2"]


def test_fresh_var_free_hint_is_used_as_is():
    assert VarSupply().fresh("v") == "v"


def test_fresh_var_never_issues_the_evaluation_point_name():
    assert VarSupply().fresh("w") == "w1"


def test_fresh_var_strips_digits_from_hint():
    supply = VarSupply(reserved={"x1"})
    assert supply.fresh("x1") == "x2"


def test_term_helpers():
    t = succ_n(Var("x"), 2)
    assert t == Succ(Succ(Var("x")))
    assert term_vars(t) == {"x"}
    assert subst_term(t, Var("x"), EVAL) == Succ(Succ(EVAL))


def test_fo_substitution_replaces_occurrences():
    phi = Le(EVAL, Var("x"))
    assert fo.subst_path_term(phi, Var("x"), Succ(EVAL)) == Le(EVAL, Succ(EVAL))


def test_fo_substitution_identity_when_absent():
    phi = Le(EVAL, Var("x"))
    assert fo.subst_path_term(phi, Var("z"), EVAL) == phi


def test_fo_substitution_minimal_assignment_style():
    assert fo.subst_path_term(Le(Var("v"), Var("y")), Var("v"), Var("x")) == Le(Var("x"), Var("y"))


def test_fo_substitution_detects_capture():
    phi = Exists("x", Le(Var("v"), Var("x")))
    with pytest.raises(CaptureError, match="variable capture"):
        fo.subst_path_term(phi, Var("v"), Var("x"))


def test_fo_substitution_stops_at_rebinding():
    phi = Exists("x", Le(EVAL, Var("x")))
    assert fo.subst_path_term(phi, Var("x"), EVAL) == phi


def test_prime_substitution_and_capture():
    phi = prime.Ghat(EVAL, Var("x"), prime.Atom("q"))
    out = prime.subst_path_term(phi, Var("x"), Succ(EVAL))
    assert out == prime.Ghat(EVAL, Succ(EVAL), prime.Atom("q"))
    captured = prime.Fx("y", prime.Ghat(Var("y"), Var("x"), prime.Atom("q")))
    with pytest.raises(prime.ScopeError, match="variable capture"):
        prime.subst_path_term(captured, Var("x"), Var("y"))


def test_substitution_round_trip_with_fresh_term():
    phi = Forall("v", Implies(Le(EVAL, Var("v")), Eq(Var("x"), Var("v"))))
    there = fo.subst_path_term(phi, Var("x"), Var("z"))
    assert fo.subst_path_term(there, Var("z"), Var("x")) == phi


def test_beta_reduce_single_site():
    phi = PredApp("Q", Succ(EVAL))
    out = fo.beta_reduce_predicate(phi, "Q", PredicateDef("y", Eq(Var("y"), Var("x"))))
    assert str(out) == "S(w) = x"


def test_beta_reduce_under_quantifier():
    phi = Forall("v", Implies(Le(EVAL, Var("v")), PredApp("Q", Var("v"))))
    out = fo.beta_reduce_predicate(phi, "Q", PredicateDef("y", Le(EVAL, Var("y"))))
    assert out == Forall("v", Implies(Le(EVAL, Var("v")), Le(EVAL, Var("v"))))
    assert "Q" not in fo.predicates(out)


def test_beta_reduce_absent_symbol_is_identity():
    phi = Le(EVAL, Var("x"))
    assert fo.beta_reduce_predicate(phi, "Q", PredicateDef("y", fo.Top())) == phi


def test_beta_reduce_renames_bound_variables_of_the_body():
    body = Exists("u", fo.And(Le(EVAL, Var("u")), Eq(Var("u"), Var("y"))))
    phi = Exists("u", PredApp("Q", Var("u")))
    out = fo.beta_reduce_predicate(phi, "Q", PredicateDef("y", body))
    assert "Q" not in fo.predicates(out)
    assert fo.free_vars(out) == set()


def test_beta_reduce_refuses_to_capture_ambient_variable():
    phi = Exists("x", PredApp("Q", Var("x")))
    with pytest.raises(CaptureError):
        fo.beta_reduce_predicate(phi, "Q", PredicateDef("y", Eq(Var("y"), Var("x"))))


def test_predicate_def_must_be_predicate_free():
    with pytest.raises(ValueError):
        PredicateDef("y", PredApp("Q", Var("y")))


def test_predicate_naming_is_a_bijection():
    for a in ["q", "p1", "long_name"]:
        assert fo.atom_name(fo.pred_name(a)) == a


def test_ghat_bounds_must_differ():
    with pytest.raises(ValueError):
        prime.Ghat(EVAL, EVAL, prime.Atom("q"))


def test_well_scoped_validator():
    ok = prime.Fx("x", prime.Ghat(EVAL, Var("x"), prime.Atom("q")))
    bad = prime.Ghat(EVAL, Var("x"), prime.Atom("q"))
    assert prime.is_well_scoped(ok)
    assert not prime.is_well_scoped(bad)
    assert prime.is_well_scoped(bad, free={"x"})


def test_desugar_removes_sugar():
    phi = ltl.Iff(ltl.Atom("p"), ltl.Implies(ltl.Atom("q"), ltl.Atom("p")))
    d = ltl.desugar(phi)
    assert ltl.is_desugared(d)
    assert ltl.desugar(ltl.Implies(ltl.Atom("a"), ltl.Atom("b"))) == ltl.Or(ltl.Not(ltl.Atom("a")), ltl.Atom("b"))


def test_atoms_in_first_occurrence_order():
    phi = ltl.And(ltl.Atom("r"), ltl.Until(ltl.Atom("p"), ltl.Atom("r")))
    assert ltl.atoms(phi) == ["r", "p"]
