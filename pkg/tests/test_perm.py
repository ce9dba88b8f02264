import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conjquandle import perm as P
from conjquandle.errors import DegreeMismatch, MalformedCycle, PointOutOfRange, RepeatedPoint


def cyc(text, n):
    return P.parse_cycles(text, n)


@st.composite
def perms(draw, min_degree=1, max_degree=12):
    n = draw(st.integers(min_degree, max_degree))
    return P.Permutation([v + 1 for v in draw(st.permutations(range(n)))])


@st.composite
def perm_pairs(draw, max_degree=12):
    n = draw(st.integers(1, max_degree))
    a = draw(st.permutations(range(n)))
    b = draw(st.permutations(range(n)))
    return P.Permutation([v + 1 for v in a]), P.Permutation([v + 1 for v in b])


class TestParse:
    def test_identity(self):
        assert cyc("()", 4) == P.identity(4)

    def test_reading(self):
        p = cyc("(1 2 3)(4 5)", 5)
        assert [p(i) for i in range(1, 6)] == [2, 3, 1, 5, 4]

    def test_whitespace_and_commas(self):
        assert cyc("  ( 1,2 ,3 ) (4 5) ", 5) == cyc("(1 2 3)(4 5)", 5)

    def test_repeated_point(self):
        with pytest.raises(RepeatedPoint):
            cyc("(1 2)(2 3)", 3)

    def test_out_of_range(self):
        with pytest.raises(PointOutOfRange):
            cyc("(1 6)", 5)

    @pytest.mark.parametrize("text", ["", "(1 2", "1 2)", "(1 a)", "(1)(2 3)", "(1 2) x"])
    def test_malformed(self, text):
        with pytest.raises(MalformedCycle):
            cyc(text, 5)

    def test_canonical_format(self):
        assert P.format_cycles(cyc("(5 4)(3 1 2)", 6)) == "(1 2 3)(4 5)"
        assert P.format_cycles(P.identity(3)) == "()"

    @given(perms())
    def test_round_trip(self, p):
        assert P.parse_cycles(P.format_cycles(p), p.degree) == p


class TestArithmetic:
    def test_compose_identity(self):
        q = cyc("(1 3)(2 4)", 4)
        assert P.compose(P.identity(4), q) == q

    def test_compose_involution(self):
        assert P.compose(cyc("(1 2)", 3), cyc("(1 2)", 3)).is_identity()

    def test_compose_applies_right_factor_first(self):
        p, q = cyc("(1 2)", 3), cyc("(2 3)", 3)
        r = P.compose(p, q)
        # pointwise oracle: r(x) = p(q(x))
        assert [r(x) for x in (1, 2, 3)] == [p(q(x)) for x in (1, 2, 3)] == [2, 3, 1]
        assert r == cyc("(1 2 3)", 3)

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            P.compose(P.identity(3), P.identity(4))
        with pytest.raises(DegreeMismatch):
            P.conjugate(P.identity(3), P.identity(4))

    def test_inverse(self):
        assert P.inverse(P.identity(4)).is_identity()
        assert P.inverse(cyc("(1 2 3)", 3)) == cyc("(1 3 2)", 3)
        assert P.inverse(cyc("(1 2)(3 4)", 4)) == cyc("(1 2)(3 4)", 4)

    def test_conjugate(self):
        x = cyc("(1 2 3)", 3)
        assert P.conjugate(cyc("(1 2 3)", 3), P.identity(3)).is_identity()
        assert P.conjugate(P.identity(3), x) == x
        assert P.conjugate(cyc("(1 2)", 3), x) == cyc("(2 1 3)", 3)

    def test_power(self):
        p = cyc("(1 2 3)(4 5)", 5)
        assert P.power(p, 0).is_identity()
        assert P.power(cyc("(1 2 3)", 3), 3).is_identity()
        assert P.power(p, 2) == cyc("(1 3 2)", 5)
        assert P.power(p, -1) == P.inverse(p)

    def test_order(self):
        assert P.order(P.identity(3)) == 1
        assert P.order(cyc("(1 2 3)(4 5)", 5)) == 6
        assert P.order(cyc("(1 2)(3 4)", 4)) == 2

    def test_parity(self):
        assert P.parity(P.identity(3)) == "even"
        assert P.parity(cyc("(1 2)", 3)) == "odd"
        assert P.parity(cyc("(1 2 3)", 3)) == "even"

    @given(perm_pairs())
    def test_conjugate_matches_definition(self, pq):
        g, x = pq
        assert P.conjugate(g, x) == P.compose(g, P.compose(x, P.inverse(g)))

    @given(perms(), st.integers(-30, 30))
    def test_power_matches_repeated_composition(self, p, k):
        q = P.identity(p.degree)
        step = p if k >= 0 else P.inverse(p)
        for _ in range(abs(k)):
            q = P.compose(q, step)
        assert P.power(p, k) == q

    @given(perms())
    def test_inverse_law(self, p):
        assert P.compose(p, P.inverse(p)).is_identity()

    @given(perms())
    def test_parity_by_transposition_count(self, p):
        # oracle: count inversions
        img = p.images
        inv = sum(1 for i, j in itertools.combinations(range(len(img)), 2) if img[i] > img[j])
        assert P.parity(p) == ("even" if inv % 2 == 0 else "odd")


class TestCycleStructure:
    def test_examples(self):
        assert P.cycle_structure(P.identity(5)).entries == ((1, 5),)
        assert P.cycle_structure(cyc("(1 2 3)(4 5)", 5)).entries == ((2, 1), (3, 1))
        assert P.cycle_structure(cyc("(1 2 3)", 5)).entries == ((1, 2), (3, 1))

    def test_regular_cycle(self):
        assert P.has_regular_cycle(P.CycleStructure(((1, 2), (3, 1))))
        assert not P.has_regular_cycle(P.CycleStructure(((2, 1), (3, 1))))
        assert P.has_regular_cycle(P.CycleStructure(((1, 5),)))

    def test_invariant_enforced(self):
        with pytest.raises(ValueError):
            P.CycleStructure(((3, 1), (2, 1)))

    @given(perm_pairs())
    def test_conjugation_preserves_structure(self, pq):
        p, q = pq
        assert P.cycle_structure(P.conjugate(q, p)) == P.cycle_structure(p)

    @given(perms())
    def test_order_is_lcm(self, p):
        cs = P.cycle_structure(p)
        assert cs.degree == p.degree
        assert P.order(p) == math.lcm(*cs.lengths)
        assert P.power(p, P.order(p)).is_identity()

    @settings(max_examples=50)
    @given(perms())
    def test_order_is_least(self, p):
        m = P.order(p)
        assert all(not P.power(p, k).is_identity() for k in range(1, m))


def _regular_by_points(p):
    """Some point z whose cycle length L makes every power fixing z trivial (k <= L)."""
    for z in range(1, p.degree + 1):
        L = next(k for k in range(1, p.degree + 1) if P.power(p, k)(z) == z)
        if all(P.power(p, k).is_identity() for k in range(0, L + 1) if P.power(p, k)(z) == z):
            return True
    return False


@pytest.mark.parametrize("n", range(1, 7))
def test_regular_cycle_pointwise_oracle_exhaustive(n):
    for img in itertools.permutations(range(1, n + 1)):
        p = P.Permutation(img)
        assert P.has_regular_cycle(P.cycle_structure(p)) == _regular_by_points(p)
