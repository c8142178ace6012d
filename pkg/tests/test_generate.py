import random

from ltlc import fo, ltl, prime
from ltlc.classify import (
    classify_ltl_untied,
    classify_ltlprime_untied,
    is_ltl_boxed,
    is_ltl_negative,
    is_ltl_positive,
    is_ltl_sahlqvist,
    is_ltlprime_boxed,
    is_ltlprime_negative,
    is_ltlprime_positive,
)
from ltlc.generate import (
    atom_pool,
    enumerate_boxed,
    random_fo,
    random_ltl,
    random_ltl_boxed,
    random_ltl_negative,
    random_ltl_positive,
    random_ltl_untied,
    random_prime_boxed,
    random_prime_negative,
    random_prime_positive,
    random_prime_untied,
    random_sahlqvist,
)


def test_generators_are_seeded():
    a = [random_sahlqvist(random.Random(4), 4, ["q", "p"]) for _ in range(3)]
    b = [random_sahlqvist(random.Random(4), 4, ["q", "p"]) for _ in range(3)]
    assert a == b


def test_ltl_generators_hit_their_classes():
    rng = random.Random(1)
    atoms = ["q", "p"]
    for _ in range(200):
        assert is_ltl_boxed(random_ltl_boxed(rng, 3, atoms))
        assert is_ltl_positive(random_ltl_positive(rng, 4, atoms))
        assert is_ltl_negative(random_ltl_negative(rng, 4, atoms))
        assert classify_ltl_untied(random_ltl_untied(rng, 4, atoms))
        assert is_ltl_sahlqvist(random_sahlqvist(rng, 4, atoms))


def test_prime_generators_hit_their_classes():
    rng = random.Random(2)
    atoms = ["q", "p"]
    for _ in range(200):
        pos = random_prime_positive(rng, 4, atoms)
        neg = random_prime_negative(rng, 4, atoms)
        unt = random_prime_untied(rng, 4, atoms)
        assert is_ltlprime_positive(pos) and prime.is_well_scoped(pos)
        assert is_ltlprime_negative(neg) and prime.is_well_scoped(neg)
        assert classify_ltlprime_untied(unt) and prime.is_well_scoped(unt)
        assert is_ltlprime_boxed(random_prime_boxed(rng, 3, atoms))


def test_random_ltl_respects_depth_and_atoms():
    rng = random.Random(3)
    for _ in range(200):
        phi = random_ltl(rng, 4, ["q"])
        assert set(ltl.atoms(phi)) <= {"q"}
        assert _height(phi) <= 4


def _height(phi):
    kids = ltl.children(phi)
    return 0 if not kids else 1 + max(_height(k) for k in kids)


def test_boxed_enumeration_size():
    # G, X and the six ordered pairs of distinct bounds from {@, S(@), S(S(@))}
    formulas = list(enumerate_boxed(3))
    assert len(formulas) == 1 + 8 + 8 ** 2 + 8 ** 3
    assert len(set(formulas)) == len(formulas)
    assert all(is_ltlprime_boxed(A) for A in formulas)


def test_random_fo_is_closed_up_to_w():
    rng = random.Random(4)
    for _ in range(200):
        assert fo.free_vars(random_fo(rng, 5)) == set()


def test_atom_pool():
    assert atom_pool(2) == ["q", "p"]
