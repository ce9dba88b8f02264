import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conjquandle import perm as P
from conjquandle.errors import DegreeTooSmall
from conjquandle.symwitness import commutation_transcript, construct_sym_witness, witness_sym


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield [k] + rest


def element_of_type(parts, n):
    cycles, start = [], 1
    for k in parts:
        if k > 1:
            cycles.append(tuple(range(start, start + k)))
        start += k
    return P.Permutation.from_cycles(cycles, n)


def independent_check(e, z):
    """z is conjugate to e and no nontrivial power of e commutes with z."""
    assert P.cycle_structure(z) == P.cycle_structure(e)
    ek = e
    for _ in range(1, P.order(e)):
        assert P.compose(z, ek) != P.compose(ek, z)
        ek = P.compose(ek, e)


@pytest.mark.parametrize("n", range(5, 10))
def test_every_cycle_type(n):
    for parts in partitions(n):
        e = element_of_type(parts, n)
        w = construct_sym_witness(e, n)
        assert w.sigma_parity == "even"
        assert P.conjugate(w.sigma, e) == w.z
        independent_check(e, w.z)
        assert len(w.checks) == P.order(e) - 1


@pytest.mark.parametrize("text,case", [
    ("()", "t=1, lambda=1"),
    ("(1 2)(3 4)(5 6)", "t=1, lambda=2"),
    ("(1 2 3)(4 5 6)", "t=1, lambda=3"),
    ("(1 2 3 4 5 6)", "t=1, lambda>=4"),
    ("(1 2 3)(4 5)", "t>1, sigma=rho*pi"),
    ("(1 2 3)", "t>1, sigma=(x1 x2)*rho*pi"),
    ("(1 2)(3 4)", "t>1, sigma=(y1 y2)*rho*pi"),
])
def test_cases(text, case):
    e = P.parse_cycles(text, 6)
    assert construct_sym_witness(e, 6).case == case


def test_known_witnesses():
    # frozen from hand evaluation of the construction on S6
    e = P.parse_cycles("(1 2 3 4 5 6)", 6)
    w = construct_sym_witness(e, 6)
    assert w.sigma == P.parse_cycles("(1 2 3)", 6)
    assert w.z == P.parse_cycles("(1 4 5 6 2 3)", 6)
    e = P.parse_cycles("(1 2)(3 4)(5 6)", 6)
    assert witness_sym(e, 6) == P.parse_cycles("(1 3)(2 5)(4 6)", 6)


def test_relabelled_input():
    # elements not already in the normal form of their cycle type
    e = P.parse_cycles("(2 7)(3 5 4)", 8)
    w = construct_sym_witness(e, 8)
    independent_check(e, w.z)
    assert w.sigma_parity == "even"


def test_degree_too_small():
    with pytest.raises(DegreeTooSmall):
        construct_sym_witness(P.parse_cycles("(1 2 3)", 4))


def test_transcript():
    e = P.parse_cycles("(1 2 3)", 5)
    z = witness_sym(e)
    t = commutation_transcript(e, z)
    assert [c.k for c in t] == [1, 2]
    assert all(c.z_ek != c.ek_z for c in t)


@settings(max_examples=300, deadline=None)
@given(st.integers(5, 30).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_random_elements(img):
    e = P.Permutation(img)
    w = construct_sym_witness(e)
    assert w.sigma_parity == "even"
    independent_check(e, w.z)
