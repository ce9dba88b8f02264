import random
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conjquandle import checks as K
from conjquandle import perm as P
from conjquandle.errors import EquivalenceViolation, PointOutOfRange, PreconditionFailed
from conjquandle.groups import alternating, cyclic, dihedral, direct_product, load_group_file, symmetric
from conjquandle.quandle import ConjugationQuandle, product_quandle, quandle_of_class

DATA = Path(__file__).resolve().parent.parent / "data"


def naive_good(G, C):
    """Goodness straight from the definition, centrality tested against all of H."""
    H = G.generated_subgroup(C.members).elements()
    central = lambda x: all(G.mul(x, h) == G.mul(h, x) for h in H)  # noqa: E731
    for c in C.members:
        powers = [G.power(c, k) for k in range(G.element_order(c))]
        if not any(all(central(x) for x in powers if G.mul(x, z) == G.mul(z, x)) for z in C.members):
            return False
    return True


SMALL = [symmetric(3), symmetric(4), alternating(4), alternating(5), dihedral(8), dihedral(12), dihedral(18),
         cyclic(6), direct_product(symmetric(3), cyclic(4)), direct_product(symmetric(3), symmetric(3)),
         load_group_file(DATA / "quaternion.table")]


class TestRegularCycleStabilizer:
    def test_stabilizer(self):
        pi = P.parse_cycles("(1 2 3)(4 5)", 6)
        assert not K.stabilizer_trivial_at(pi, 1)
        assert not K.stabilizer_trivial_at(pi, 6)
        pi = P.parse_cycles("(1 2 3 4 5 6)(7 8)", 8)
        assert K.stabilizer_trivial_at(pi, 1) and not K.stabilizer_trivial_at(pi, 7)
        with pytest.raises(PointOutOfRange):
            K.stabilizer_trivial_at(pi, 9)

    def test_crosscheck_seeded_random(self):
        rng = random.Random(7)
        for _ in range(10_000):
            n = rng.randint(1, 50)
            img = list(range(1, n + 1))
            rng.shuffle(img)
            K.lemma3_crosscheck(P.Permutation(img))

    @settings(max_examples=300)
    @given(st.integers(1, 20).flatmap(lambda n: st.permutations(range(1, n + 1))))
    def test_crosscheck(self, img):
        K.lemma3_crosscheck(P.Permutation(img))


class TestCriterion:
    def test_prime_power(self):
        assert [m for m in range(1, 30) if K._is_prime_power(m)] == [
            2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]
        assert K.prime_power_shortcut(P.parse_cycles("(1 2 3 4)", 5))
        assert K.prime_power_shortcut(P.identity(3))
        assert not K.prime_power_shortcut(P.parse_cycles("(1 2 3)(4 5)", 5))

    def test_centralizer_criterion(self):
        G = symmetric(4)
        c = G.parse_element("(1 2)")
        H = G.generated_subgroup(G.conjugacy_class(c).members)
        assert not K.centralizer_criterion(c, G.parse_element("(3 4)"), H)
        assert K.centralizer_criterion(c, G.parse_element("(1 3)"), H)


class TestGoodness:
    @pytest.mark.parametrize("G", SMALL, ids=lambda G: G.name)
    def test_all_methods_agree_with_definition(self, G):
        for C in G.conjugacy_classes():
            want = naive_good(G, C)
            for rep in (K.good_class(G, C), K.good_class_fast(G, C), K.decide_goodness(G, C)):
                assert rep.good == want, (G.name, G.fmt(C.representative), rep.method)
                if rep.good:
                    assert set(rep.witnesses) == set(C.members)

    def test_decide_methods(self):
        G = symmetric(6)
        rep = K.decide_goodness(G, G.conjugacy_class(G.parse_element("(1 2 3)(4 5)")))
        assert rep.method == K.SYM_CONSTRUCTION and rep.good
        rep = K.decide_goodness(G, G.conjugacy_class(G.parse_element("(1 2 3 4)")))
        assert rep.method == K.PRIME_POWER and rep.good
        H = direct_product(symmetric(3), cyclic(2))
        rep = K.decide_goodness(H, H.conjugacy_class(H.parse_element("(1 2 3) | (1 2)")))
        assert rep.method == K.BRUTE_FORCE

    def test_bruteforce_witness_is_first_in_order(self):
        G = symmetric(4)
        e = G.parse_element("(1 2)")
        C = G.conjugacy_class(e)
        H = G.generated_subgroup(C.members)
        z = K.witness_bruteforce(e, C, G, H)
        # members run in image-tuple order: (3 4) commutes with (1 2), (2 3) does not
        assert C.members[:2] == (G.parse_element("(3 4)"), G.parse_element("(2 3)"))
        assert z == G.parse_element("(2 3)")

    def test_invalid_witness_rejected(self):
        G = symmetric(4)
        C = G.conjugacy_class(G.parse_element("(1 2)"))
        H = G.generated_subgroup(C.members)
        with pytest.raises(EquivalenceViolation):
            K._validated(G, C, H, "x", {C.members[0]: C.members[0]})

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 9, 10, 12])
    def test_dihedral(self, n):
        reps = K.dihedral_goodness(n)
        assert all(r.good and r.oracle_verdict == K.GOOD for r in reps)
        assert {r.method for r in reps} <= {K.ROTATION_CLASS, K.PRIME_POWER}

    def test_dihedral_precondition(self):
        with pytest.raises(PreconditionFailed):
            K.dihedral_goodness(2)


class TestAudits:
    @pytest.mark.parametrize("G", SMALL, ids=lambda G: G.name)
    def test_equivalent_conditions(self, G):
        for C in G.conjugacy_classes():
            a = K.corollary6_audit(G, C.representative)
            assert a.agreement and a.pointwise_consistent

    def test_three_cycles_in_s4_all_conditions_hold(self):
        G = symmetric(4)
        a = K.corollary6_audit(G, G.parse_element("(1 2 3)"))
        assert a.some_translation_regular and a.some_pair_criterion
        assert a.every_c_has_z and a.every_translation_regular and a.agreement

    def test_identity_class(self):
        G = dihedral(10)
        a = K.corollary6_audit(G, G.identity)
        assert a.every_translation_regular and a.every_c_has_z and a.agreement

    def test_generating_class_instances(self):
        for n in (3, 4, 5):
            G = symmetric(n)
            assert K.conjecture2_check(G, G.conjugacy_class(G.parse_element("(1 2)")))
        G = alternating(5)
        for C in G.conjugacy_classes()[1:]:
            assert K.conjecture2_check(G, C)
        S4 = symmetric(4)
        with pytest.raises(PreconditionFailed):
            K.conjecture2_check(S4, S4.conjugacy_class(S4.parse_element("(1 2 3)")))

    @pytest.mark.parametrize("G", SMALL, ids=lambda G: G.name)
    def test_lmlt_cardinality(self, G):
        for C in G.conjugacy_classes():
            lm, q = K.lmlt_cardinality(ConjugationQuandle(G, C.members))
            assert lm == q

    def test_product_cycle_lengths(self):
        Q1 = quandle_of_class(symmetric(4), P.parse_cycles("(1 2 3 4)", 4))
        Q2 = quandle_of_class(alternating(4), P.parse_cycles("(1 2 3)", 4))
        Qp = product_quandle(Q1, Q2)
        assert K.product_cycle_lengths_ok(Q1, Q2, Qp)
        assert Qp.has_hayashi_property()
