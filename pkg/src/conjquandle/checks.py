"""Regular-cycle and centralizer criteria, goodness of classes, and their oracles.

A finite class C of G is *good* when every c in C has some z in C such that
every power of c commuting with z is central in H = ⟨C⟩.  The centralizer
test is plain commutation, so it does not matter whether it is read in G or
in H: all powers of c already lie in H.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from . import perm as P
from .errors import BoundExceeded, EquivalenceViolation, PointOutOfRange, PreconditionFailed
from .groups import ConjClass, FiniteGroup, dihedral
from .quandle import ConjugationQuandle, inner_quotient_order, quandle_of_class
from .symwitness import construct_sym_witness

GOOD, NOT_GOOD, UNDECIDED = "good", "not_good", "undecided"

BRUTE_FORCE = "brute_force"
PRIME_POWER = "prime_power_shortcut"
SYM_CONSTRUCTION = "sym_construction"
TRANSPORTED = "transported"
ROTATION_CLASS = "dihedral_rotation_class"


# regular cycle <=> some point with trivial stabilizer in <pi>

def stabilizer_trivial_at(pi: P.Permutation, z: int) -> bool:
    """No nontrivial power of pi fixes z."""
    if not 1 <= z <= pi.degree:
        raise PointOutOfRange(f"point {z} outside 1..{pi.degree}")
    m = P.order(pi)
    x = z
    for _ in range(1, m):
        x = pi(x)
        if x == z:
            return False
    return True


def lemma3_crosscheck(pi: P.Permutation) -> bool:
    regular = P.has_regular_cycle(P.cycle_structure(pi))
    pointwise = any(stabilizer_trivial_at(pi, z) for z in range(1, pi.degree + 1))
    if regular != pointwise:
        raise EquivalenceViolation(f"regular cycle={regular} but trivial stabilizer point={pointwise} for {pi}")
    return regular


# centralizer criterion

class _Powers:
    """Powers of c, tested through divisors of its order.

    The powers of c that are central in H form a subgroup ⟨c^d⟩ of ⟨c⟩, and
    those commuting with a given z form another, ⟨c^e⟩; d and e are the least
    divisors of the order with that property.  Every power commuting with z
    is central iff ⟨c^e⟩ ⊆ ⟨c^d⟩, i.e. iff d divides e.
    """

    def __init__(self, c, H: FiniteGroup):
        self.c = c
        self.H = H
        m = H.element_order(c)
        self.divisors = [k for k in range(1, m + 1) if m % k == 0]
        self._pow: dict[int, object] = {}
        self.d = next(k for k in self.divisors if H.is_central(self.power(k)))

    def power(self, k: int):
        x = self._pow.get(k)
        if x is None:
            x = self._pow[k] = self.H.power(self.c, k)
        return x

    def works_with(self, z, G: FiniteGroup) -> bool:
        if self.d == 1:
            return True
        e = next(k for k in self.divisors if G.centralizer_contains(z, self.power(k)))
        return e % self.d == 0


def centralizer_criterion(c, z, H: FiniteGroup, G: FiniteGroup | None = None) -> bool:
    """Every power of c that commutes with z is central in H."""
    return _Powers(c, H).works_with(z, G or H)


def prime_power_shortcut(c, G: FiniteGroup | None = None) -> bool:
    """Order of c is 1 or a prime power."""
    m = G.element_order(c) if G is not None else P.order(c)
    return m == 1 or _is_prime_power(m)


def _is_prime_power(m: int) -> bool:
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            return m == 1
        p += 1
    return m > 1


# reports

@dataclass
class GoodnessReport:
    class_id: object
    verdict: str
    method: str
    witnesses: dict = field(default_factory=dict)
    failing_c: object = None
    class_size: int = 0
    ambient: str = ""
    generated: str = ""
    oracle_verdict: str | None = None
    note: str = ""

    @property
    def good(self) -> bool:
        return self.verdict == GOOD


def _validated(G, C, H, method, witnesses) -> GoodnessReport:
    for c, z in witnesses.items():
        if z not in C or not centralizer_criterion(c, z, H, G):
            raise EquivalenceViolation(f"{method} produced an invalid witness {G.fmt(z)} for {G.fmt(c)}")
    return GoodnessReport(C.representative, GOOD, method, dict(witnesses), class_size=len(C),
                          ambient=G.name, generated=H.name)


def _generated(G: FiniteGroup, C: ConjClass) -> FiniteGroup:
    return G.generated_subgroup(C.members, name=f"<C> in {G.name}")


def witness_bruteforce(e, C: ConjClass, G: FiniteGroup, H: FiniteGroup):
    """First z of C in canonical order satisfying the criterion for e, else None."""
    pw = _Powers(e, H)
    for z in C.members:
        if pw.works_with(z, G):
            return z
    return None


def good_class(G: FiniteGroup, C: ConjClass) -> GoodnessReport:
    """Exhaustive witness search for every c in C."""
    try:
        H = _generated(G, C)
        witnesses = {}
        for c in C.members:
            z = witness_bruteforce(c, C, G, H)
            if z is None:
                return GoodnessReport(C.representative, NOT_GOOD, BRUTE_FORCE, witnesses, failing_c=c,
                                      class_size=len(C), ambient=G.name, generated=H.name)
            witnesses[c] = z
    except BoundExceeded as exc:
        return GoodnessReport(C.representative, UNDECIDED, BRUTE_FORCE, note=str(exc),
                              class_size=len(C), ambient=G.name)
    return GoodnessReport(C.representative, GOOD, BRUTE_FORCE, witnesses, class_size=len(C),
                          ambient=G.name, generated=H.name)


def _transport_map(G: FiniteGroup, C: ConjClass) -> dict:
    """For each member c', some g with c' = g c0 g⁻¹ (c0 the representative)."""
    c0 = C.representative
    conj = {c0: G.identity}
    frontier = [c0]
    while frontier:
        nxt = []
        for x in frontier:
            gx = conj[x]
            for g in G.generators:
                y = G.conjugate(g, x)
                if y not in conj:
                    conj[y] = G.mul(g, gx)
                    nxt.append(y)
        frontier = nxt
    return conj


def good_class_fast(G: FiniteGroup, C: ConjClass) -> GoodnessReport:
    """One exhaustive search for the representative, then transport z' = g z g⁻¹."""
    try:
        H = _generated(G, C)
        c0 = C.representative
        z0 = witness_bruteforce(c0, C, G, H)
        if z0 is None:
            return GoodnessReport(c0, NOT_GOOD, TRANSPORTED, failing_c=c0, class_size=len(C),
                                  ambient=G.name, generated=H.name)
        witnesses = {c: G.conjugate(g, z0) for c, g in _transport_map(G, C).items()}
        return _validated(G, C, H, TRANSPORTED, dict(sorted(witnesses.items(), key=lambda kv: G.key(kv[0]))))
    except BoundExceeded as exc:
        return GoodnessReport(C.representative, UNDECIDED, TRANSPORTED, note=str(exc),
                              class_size=len(C), ambient=G.name)


def _longest_cycle_witness(Q: ConjugationQuandle, c):
    """A point on a longest cycle of L_c (a regular cycle when one exists)."""
    action = Q.left_translation(c).action
    best = max(action.cycles(include_fixed=True), key=len)
    return Q.elements[best[0] - 1]


def _sym_degree(G: FiniteGroup) -> int | None:
    if G.family and G.family[0] in ("symmetric", "alternating") and G.family[1] >= 5:
        return G.family[1]
    return None


def decide_goodness(G: FiniteGroup, C: ConjClass, Q: ConjugationQuandle | None = None) -> GoodnessReport:
    """Goodness with shortcuts: prime-power order, then the S_n/A_n
    construction, then exhaustive search.  Every witness is re-validated.

    ``Q`` may pass an already built quandle on C to reuse its translations.
    """
    try:
        H = _generated(G, C)
        c0 = C.representative
        if prime_power_shortcut(c0, G):
            Q = Q if Q is not None else ConjugationQuandle(G, C.members)
            return _validated(G, C, H, PRIME_POWER, {c: _longest_cycle_witness(Q, c) for c in C.members})
        if _sym_degree(G) is not None:
            n = _sym_degree(G)
            return _validated(G, C, H, SYM_CONSTRUCTION,
                              {c: construct_sym_witness(c, n).z for c in C.members})
    except BoundExceeded as exc:
        return GoodnessReport(C.representative, UNDECIDED, BRUTE_FORCE, note=str(exc),
                              class_size=len(C), ambient=G.name)
    return good_class(G, C)


# dihedral groups

def dihedral_goodness(n: int, crosscheck: bool = True) -> list[GoodnessReport]:
    """Reports for every class of the dihedral group of order 2n."""
    if n < 3:
        raise PreconditionFailed(f"dihedral goodness needs n >= 3, got {n}")
    G = dihedral(2 * n)
    o = G.generators[0]
    rotations = set(G.cyclic_subgroup(o))
    reports = []
    for C in G.conjugacy_classes():
        H = _generated(G, C)
        c0 = C.representative
        if c0 in rotations:
            if len(C) > 2:
                raise EquivalenceViolation(f"rotation class of size {len(C)} in D{2 * n}")
            Q = ConjugationQuandle(G, C.members)
            if not all(t.action.is_identity() for t in Q.translations().values()):
                raise EquivalenceViolation("rotation class with a nontrivial translation")
            rep = _validated(G, C, H, ROTATION_CLASS, {c: c for c in C.members})
        else:
            if not prime_power_shortcut(c0, G):
                raise EquivalenceViolation(f"reflection {G.fmt(c0)} of order {G.element_order(c0)}")
            Q = ConjugationQuandle(G, C.members)
            rep = _validated(G, C, H, PRIME_POWER, {c: _longest_cycle_witness(Q, c) for c in C.members})
        if crosscheck:
            rep.oracle_verdict = good_class(G, C).verdict
        reports.append(rep)
    return reports


# four equivalent forms of the Hayashi property

@dataclass
class EquivalenceAudit:
    class_id: object
    some_translation_regular: bool
    some_pair_criterion: bool
    every_c_has_z: bool
    every_translation_regular: bool
    pointwise_consistent: bool
    agreement: bool


def corollary6_audit(G: FiniteGroup, e, strict: bool = True) -> EquivalenceAudit:
    """Evaluate the four conditions independently and compare them."""
    Q = quandle_of_class(G, e)
    H = Q.generated
    regular = []
    pointwise_ok = True
    for t in Q.translations().values():
        r = P.has_regular_cycle(t.cycle_structure)
        pointwise = any(stabilizer_trivial_at(t.action, z) for z in range(1, len(Q) + 1))
        pointwise_ok &= r == pointwise
        regular.append(r)
    cond1, cond4 = any(regular), all(regular)
    per_c = []
    for c in Q.elements:
        pw = _Powers(c, H)
        per_c.append(any(pw.works_with(z, H) for z in Q.elements))
    cond2, cond3 = any(per_c), all(per_c)
    agree = pointwise_ok and cond1 == cond2 == cond3 == cond4
    audit = EquivalenceAudit(Q.elements[0], cond1, cond2, cond3, cond4, pointwise_ok, agree)
    if strict and not agree:
        raise EquivalenceViolation(f"conditions disagree for class of {G.fmt(e)} in {G.name}: {audit}")
    return audit


def conjecture2_check(G: FiniteGroup, C: ConjClass) -> bool:
    """Requires ⟨C⟩ = G; then the instance holds iff C is good."""
    H = _generated(G, C)
    Hset = H.enumerate_elements()
    if not all(g in Hset for g in G.generators):
        raise PreconditionFailed(f"class of {G.fmt(C.representative)} does not generate {G.name}")
    return good_class(G, C).verdict == GOOD


def lmlt_cardinality(Q: ConjugationQuandle) -> tuple[int, int]:
    """(|LMlt(Q)|, |H| / |Z(H)|); these agree for every conjugation quandle."""
    return Q.lmlt_group().order(), inner_quotient_order(Q.generated)


def product_cycle_lengths_ok(Q1: ConjugationQuandle, Q2: ConjugationQuandle, Qp: ConjugationQuandle) -> bool:
    """Cycle length of (x1, x2) under L_(c1,c2) is lcm of the component lengths."""
    def lengths(Q):
        out = {}
        for c, t in Q.translations().items():
            L = {}
            for cyc in t.action.cycles(include_fixed=True):
                for i in cyc:
                    L[i] = len(cyc)
            out[c] = L
        return out

    l1, l2, lp = lengths(Q1), lengths(Q2), lengths(Qp)
    for (c1, c2), Lp in lp.items():
        for x1 in Q1.elements:
            for x2 in Q2.elements:
                want = math.lcm(l1[c1][Q1.index(x1)], l2[c2][Q2.index(x2)])
                if Lp[Qp.index((x1, x2))] != want:
                    return False
    return True


def class_of(G: FiniteGroup, members: Iterable) -> ConjClass:
    members = G.sort(set(members))
    return ConjClass(members[0], members, G)
