"""Conjugation quandles ``(C, a⋆b = a b a⁻¹)`` over finite groups."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from . import perm as P
from .errors import BoundExceeded, EmptyGround, NotAMember, NotClosed
from .groups import FiniteGroup, PermArithmetic, direct_product


@dataclass(frozen=True)
class LeftTranslation:
    """Left translation by ``source`` as a permutation of quandle indices (1-based)."""

    source: object
    action: P.Permutation

    @property
    def cycle_structure(self) -> P.CycleStructure:
        return P.cycle_structure(self.action)

    def has_regular_cycle(self) -> bool:
        return P.has_regular_cycle(self.cycle_structure)


class ConjugationQuandle:
    """A conjugation-closed subset of a group.

    Elements are stored in canonical order; the quandle point with 1-based
    index i is ``elements[i - 1]``.  Use :func:`build_quandle` rather than
    the constructor, which does not validate closure.
    """

    def __init__(self, ambient: FiniteGroup, elements: Iterable):
        self.ambient = ambient
        self.elements = ambient.sort(set(elements))
        if not self.elements:
            raise EmptyGround("a quandle needs at least one element")
        self._index = {x: i for i, x in enumerate(self.elements)}
        self._generated: FiniteGroup | None = None
        self._translations: dict | None = None

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    def __repr__(self) -> str:
        return f"ConjugationQuandle(|C|={len(self)}, ambient={self.ambient.name!r})"

    def index(self, x) -> int:
        """1-based position of x."""
        try:
            return self._index[x] + 1
        except (KeyError, TypeError):
            raise NotAMember(f"{self.ambient.fmt(x)} is not in the quandle") from None

    def operate(self, a, b):
        """``a ⋆ b``."""
        return self.ambient.conjugate(a, b)

    @property
    def generated(self) -> FiniteGroup:
        """H = ⟨C⟩ presented with C as its generators."""
        if self._generated is None:
            self._generated = self.ambient.generated_subgroup(self.elements, name=f"<C> in {self.ambient.name}")
        return self._generated

    def left_translation(self, c) -> LeftTranslation:
        if c not in self._index:
            raise NotAMember(f"{self.ambient.fmt(c)} is not in the quandle")
        if self._translations is not None:
            return self._translations[c]
        conj, idx = self.ambient.arith.conj_by(c), self._index
        imgs = tuple(idx[conj(x)] for x in self.elements)
        return LeftTranslation(c, P.Permutation._raw(imgs))

    def translations(self) -> dict:
        """All left translations keyed by translating element, in canonical order."""
        if self._translations is None:
            self._translations = {c: self.left_translation(c) for c in self.elements}
        return self._translations

    def lmlt_orbit(self, start) -> frozenset:
        """Orbit of ``start`` under the group generated by the left translations."""
        i0 = self.index(start) - 1
        # on a finite set each inverse is a power, so the translations suffice
        acts = [t.action._img for t in self.translations().values()]
        seen = {i0}
        queue = deque([i0])
        while queue:
            i = queue.popleft()
            for a in acts:
                j = a[i]
                if j not in seen:
                    seen.add(j)
                    queue.append(j)
        return frozenset(self.elements[i] for i in seen)

    def is_connected_direct(self) -> bool:
        return len(self.lmlt_orbit(self.elements[0])) == len(self)

    def is_connected_criterion(self) -> bool:
        """Whether C is a single conjugacy class of H = ⟨C⟩."""
        blocks = self.ambient.split_class_in_subgroup(self.elements, self.generated)
        return len(blocks) == 1 and blocks[0] == self.elements

    def translation_cycle_structures(self) -> dict:
        return {c: t.cycle_structure for c, t in self.translations().items()}

    def has_hayashi_property(self) -> bool:
        return all(P.has_regular_cycle(cs) for cs in self.translation_cycle_structures().values())

    def lmlt_group(self) -> FiniteGroup:
        """The group generated by translation actions, inside S_|C|."""
        acts = [t.action for t in self.translations().values()]
        return FiniteGroup(PermArithmetic(len(self)), acts, bound=self.ambient.bound,
                           name=f"LMlt({self.ambient.name})")


def build_quandle(G: FiniteGroup, C: Iterable) -> ConjugationQuandle:
    """Validate that C is closed under conjugation by its members and their inverses."""
    members = G.sort(set(C))
    if not members:
        raise EmptyGround("a quandle needs at least one element")
    cset = set(members)
    for a in members:
        ai = G.inv(a)
        for b in members:
            if G.conjugate(a, b) not in cset:
                raise NotClosed(a, b, f"{G.fmt(a)} * {G.fmt(b)} * {G.fmt(a)}^-1 is not in C")
            if G.conjugate(ai, b) not in cset:
                raise NotClosed(a, b, f"{G.fmt(a)}^-1 * {G.fmt(b)} * {G.fmt(a)} is not in C")
    return ConjugationQuandle(G, members)


def quandle_of_class(G: FiniteGroup, e) -> ConjugationQuandle:
    """Cl_G(e): the quandle on the conjugacy class of e.  Classes are always closed."""
    return ConjugationQuandle(G, G.conjugacy_class(e).members)


def product_quandle(Q1: ConjugationQuandle, Q2: ConjugationQuandle) -> ConjugationQuandle:
    """C1 x C2 over the direct product of the ambient groups."""
    G = direct_product(Q1.ambient, Q2.ambient)
    size = len(Q1) * len(Q2)
    if size > G.bound:
        raise BoundExceeded(G.bound, f"product quandle of sizes {len(Q1)} x {len(Q2)}")
    return ConjugationQuandle(G, [(a, b) for a in Q1.elements for b in Q2.elements])


def inner_quotient_order(H: FiniteGroup) -> int:
    """|H| / |Z(H)|; 1 for abelian H without enumerating it."""
    if H.is_abelian():
        return 1
    return H.order() // len(H.center())
