"""Explicit witnesses z for classes of S_n and A_n, n >= 5.

Given e in S_n, :func:`construct_sym_witness` builds an even permutation
sigma and returns ``z = sigma e sigma⁻¹`` such that no nontrivial power of
e commutes with z.  Since sigma is even, z lies in the A_n-orbit of e, so the
same z serves both S_n and A_n classes.

The construction works in relabelled coordinates where point i sits in a
cycle of the i-th smallest length (i = 1..t, t the number of distinct
lengths), then conjugates back to the original labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import perm as P
from .errors import ConstructionPostconditionFailed, DegreeTooSmall


@dataclass(frozen=True)
class CommutationCheck:
    k: int
    point: int          # a point where z·e^k and e^k·z differ
    z_ek: int
    ek_z: int


@dataclass(frozen=True)
class SymWitness:
    e: P.Permutation
    z: P.Permutation
    sigma: P.Permutation
    relabel: P.Permutation
    case: str
    checks: tuple[CommutationCheck, ...] = field(default=())

    @property
    def sigma_parity(self) -> str:
        return P.parity(self.sigma)


def _relabelling(e: P.Permutation) -> tuple[P.Permutation, list[int]]:
    """tau sending, for each distinct cycle length (ascending), the smallest
    point lying in a cycle of that length to 1, 2, ..., t."""
    n = e.degree
    lengths: dict[int, int] = {}
    for cyc in e.cycles(include_fixed=True):
        L = len(cyc)
        if L not in lengths or cyc[0] < lengths[L]:
            lengths[L] = cyc[0]
    chosen = [lengths[L] for L in sorted(lengths)]
    mapping = {p: i + 1 for i, p in enumerate(chosen)}
    rest_src = [p for p in range(1, n + 1) if p not in mapping]
    rest_dst = [q for q in range(1, n + 1) if q > len(chosen)]
    mapping.update(zip(rest_src, rest_dst))
    tau = P.Permutation([mapping[p] for p in range(1, n + 1)])
    return tau, sorted(lengths)


def _transpositions(pairs: list[tuple[int, int]], n: int) -> P.Permutation:
    return P.Permutation.from_cycles(pairs, n)


def _construct_relabelled(e: P.Permutation, lam: list[int]) -> tuple[P.Permutation, str]:
    """sigma for e already relabelled so that point i has cycle length lam[i-1]."""
    n = e.degree
    t = len(lam)

    def it(x: int, k: int) -> int:
        for _ in range(k):
            x = e(x)
        return x

    if t == 1:
        l1 = lam[0]
        if l1 == 1:
            return P.identity(n), "t=1, lambda=1"
        if l1 == 2:
            u1 = e(1)
            u2 = min(p for p in range(1, n + 1) if p not in (1, u1))
            u3 = e(u2)
            u4 = min(p for p in range(1, n + 1) if p not in (1, u1, u2, u3))
            # u5 = e(u4) is only needed by the argument, not by sigma
            return _transpositions([(u1, u2), (u3, u4)], n), "t=1, lambda=2"
        if l1 == 3:
            u1 = e(1)
            u2 = e(u1)
            u3 = min(p for p in range(1, n + 1) if p not in (1, u1, u2))
            u4 = e(u3)
            return P.Permutation.from_cycles([(u2, u3, u4)], n), "t=1, lambda=3"
        u0, u1, u2 = 1, e(1), it(1, 2)
        return P.Permutation.from_cycles([(u0, u1, u2)], n), "t=1, lambda>=4"

    l1, lt = lam[0], lam[-1]
    u = [None] + [it(1, i) for i in range(1, l1)]             # u[1..l1-1]
    x = [None] + [it(t, j) for j in range(1, lt)]             # x[1..lt-1]
    T = set(range(1, t + 1))
    U = set(u[1:])
    rho_pairs = [(x[t - 1 + i], u[i]) for i in range(1, l1) if i % 2 == 1]
    pi_pairs = [(x[j], t - j) for j in range(1, t)]
    rho_support = {p for pr in rho_pairs for p in pr}
    pi_support = {p for pr in pi_pairs for p in pr}
    if rho_support & pi_support:
        raise ConstructionPostconditionFailed("rho and pi are expected to have disjoint supports")
    rho = _transpositions(rho_pairs, n)
    pi = _transpositions(pi_pairs, n)
    rp = P.compose(rho, pi)
    if P.parity(rp) == "even":
        return rp, "t>1, sigma=rho*pi"
    if lt >= 3:
        return P.compose(_transpositions([(x[1], x[2])], n), rp), "t>1, sigma=(x1 x2)*rho*pi"
    free = [p for p in range(1, n + 1) if p not in T and p not in U]
    y1, y2 = free[0], free[1]
    return P.compose(_transpositions([(y1, y2)], n), rp), "t>1, sigma=(y1 y2)*rho*pi"


def commutation_transcript(e: P.Permutation, z: P.Permutation) -> tuple[CommutationCheck, ...]:
    """For k = 1..order(e)-1, a point separating z·e^k from e^k·z.

    Raises ConstructionPostconditionFailed if some nontrivial power commutes.
    """
    out = []
    ek = e
    for k in range(1, P.order(e)):
        a = P.compose(z, ek)
        b = P.compose(ek, z)
        if a == b:
            raise ConstructionPostconditionFailed(f"e^{k} commutes with the constructed z")
        pt = next(i for i in range(1, e.degree + 1) if a(i) != b(i))
        out.append(CommutationCheck(k, pt, a(pt), b(pt)))
        ek = P.compose(ek, e)
    return tuple(out)


def construct_sym_witness(e: P.Permutation, n: int | None = None) -> SymWitness:
    """Build (z, sigma) for e in S_n and verify the postconditions."""
    if n is None:
        n = e.degree
    if n != e.degree:
        raise ValueError(f"element has degree {e.degree}, expected {n}")
    if n < 5:
        raise DegreeTooSmall(f"the construction needs n >= 5, got {n}")
    tau, lam = _relabelling(e)
    e_rel = P.conjugate(tau, e)
    sigma_rel, case = _construct_relabelled(e_rel, lam)
    tau_inv = P.inverse(tau)
    sigma = P.conjugate(tau_inv, sigma_rel)
    z = P.conjugate(sigma, e)
    if z != P.conjugate(tau_inv, P.conjugate(sigma_rel, e_rel)):
        raise ConstructionPostconditionFailed("relabelling is inconsistent")
    if P.parity(sigma) != "even":
        raise ConstructionPostconditionFailed("sigma is odd")
    checks = commutation_transcript(e, z)
    return SymWitness(e, z, sigma, tau, case, checks)


def witness_sym(e: P.Permutation, n: int | None = None) -> P.Permutation:
    return construct_sym_witness(e, n).z
