"""Permutations of {1..n} and their cycle structures.

Points are 1-based in every public interface (parsing, formatting, calls,
error messages) and 0-based in the stored image tuple.  Composition applies
the right factor first: ``compose(p, q)(x) == p(q(x))``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from operator import itemgetter
from typing import Iterable, Sequence

from .errors import DegreeMismatch, MalformedCycle, PointOutOfRange, RepeatedPoint

__all__ = [
    "Permutation",
    "CycleStructure",
    "parse_cycles",
    "format_cycles",
    "identity",
    "compose",
    "inverse",
    "conjugate",
    "power",
    "order",
    "parity",
    "cycle_structure",
    "has_regular_cycle",
]


class Permutation:
    """An immutable bijection on {1..degree}."""

    __slots__ = ("_img", "_hash", "_cycles", "_str", "_inv", "_get")

    def __init__(self, images: Sequence[int]):
        """Build from 1-based images: ``images[i-1]`` is the image of point i."""
        n = len(images)
        if n < 1:
            raise ValueError("degree must be positive")
        img = tuple(int(v) - 1 for v in images)
        seen = [False] * n
        for v in img:
            if not 0 <= v < n:
                raise PointOutOfRange(f"image {v + 1} outside 1..{n}")
            if seen[v]:
                raise RepeatedPoint(f"point {v + 1} appears twice among images")
            seen[v] = True
        self._img = img
        self._hash = hash(img)
        self._cycles = None
        self._str = None
        self._inv = None
        self._get = None

    @classmethod
    def _raw(cls, img: tuple[int, ...]) -> "Permutation":
        # trusted 0-based constructor, no validation
        p = object.__new__(cls)
        p._img = img
        p._hash = hash(img)
        p._cycles = None
        p._str = None
        p._inv = None
        p._get = None
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be positive")
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Permutation with the given disjoint cycles (1-based points)."""
        img = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for pt in cyc:
                if not 1 <= pt <= degree:
                    raise PointOutOfRange(f"point {pt} outside 1..{degree}")
                if pt in seen:
                    raise RepeatedPoint(f"point {pt} appears in more than one cycle")
                seen.add(pt)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                img[a - 1] = b - 1
        return cls._raw(tuple(img))

    @classmethod
    def from_mapping(cls, mapping: dict[int, int], degree: int) -> "Permutation":
        """Permutation moving ``k -> mapping[k]`` (1-based) and fixing the rest."""
        img = list(range(degree))
        for a, b in mapping.items():
            img[a - 1] = b - 1
        return cls([v + 1 for v in img])

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        """1-based image sequence."""
        return tuple(v + 1 for v in self._img)

    def __call__(self, point: int) -> int:
        if not 1 <= point <= len(self._img):
            raise PointOutOfRange(f"point {point} outside 1..{len(self._img)}")
        return self._img[point - 1] + 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._img == other._img

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        return self._img < other._img

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        return power(self, k)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"

    def __str__(self) -> str:
        return format_cycles(self)

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self._img))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest point, sorted by that point."""
        if self._cycles is None:
            self._cycles = self._compute_cycles()
        if include_fixed:
            return list(self._cycles)
        return [c for c in self._cycles if len(c) > 1]

    def _compute_cycles(self) -> tuple[tuple[int, ...], ...]:
        img = self._img
        seen = [False] * len(img)
        out = []
        for start in range(len(img)):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x + 1)
                x = img[x]
            out.append(tuple(cyc))
        return tuple(out)


@dataclass(frozen=True)
class CycleStructure:
    """Cycle lengths with multiplicities, lengths strictly increasing.

    Fixed points are included as cycles of length 1, so
    ``sum(length * mult) == degree``.
    """

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        lengths = [l for l, _ in self.entries]
        if any(a >= b for a, b in zip(lengths, lengths[1:])):
            raise ValueError("cycle lengths must be strictly increasing")
        if any(l < 1 or m < 1 for l, m in self.entries):
            raise ValueError("lengths and multiplicities must be positive")

    @property
    def degree(self) -> int:
        return sum(l * m for l, m in self.entries)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(l for l, _ in self.entries)

    @property
    def max_length(self) -> int:
        return self.entries[-1][0] if self.entries else 1

    def has_regular_cycle(self) -> bool:
        return has_regular_cycle(self)

    def as_list(self) -> list[list[int]]:
        return [[l, m] for l, m in self.entries]

    def __str__(self) -> str:
        return " ".join(f"{l}^{m}" for l, m in self.entries)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse a product of disjoint cycles such as ``"(1 2 3)(4 5)"``.

    Points may be separated by whitespace or commas.  ``"()"`` is the
    identity and unmentioned points are fixed.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    s = text.strip()
    if not s:
        raise MalformedCycle("empty cycle notation; use '()' for the identity")
    cycles: list[list[int]] = []
    pos = 0
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        m = _CYCLE_RE.match(s, pos)
        if m is None:
            raise MalformedCycle(f"unexpected {s[pos]!r} at column {pos + 1} in {text!r}")
        body = m.group(1).replace(",", " ").split()
        pts = []
        for tok in body:
            if not tok.isdigit():
                raise MalformedCycle(f"bad point {tok!r} in {text!r}")
            pts.append(int(tok))
        if len(pts) == 1:
            raise MalformedCycle(f"one-point cycle ({pts[0]}) in {text!r}")
        if pts:
            cycles.append(pts)
        pos = m.end()
    return Permutation.from_cycles(cycles, degree)


def format_cycles(p: Permutation) -> str:
    """Canonical cycle notation: fixed points omitted, identity is ``"()"``."""
    if p._str is None:
        cycs = p.cycles()
        p._str = "".join("(" + " ".join(map(str, c)) + ")" for c in cycs) if cycs else "()"
    return p._str


def identity(degree: int) -> Permutation:
    return Permutation.identity(degree)


def _check_degree(p: Permutation, q: Permutation) -> None:
    if len(p._img) != len(q._img):
        raise DegreeMismatch(f"degrees {p.degree} and {q.degree} differ")


def _getter(p: Permutation):
    # itemgetter(*img)(seq) == tuple(seq[i] for i in img), done in C
    if p._get is None:
        img = p._img
        p._get = itemgetter(*img) if len(img) > 1 else (lambda seq: (seq[img[0]],))
    return p._get


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p ∘ q``: apply q first, then p."""
    _check_degree(p, q)
    return Permutation._raw(_getter(q)(p._img))


def inverse(p: Permutation) -> Permutation:
    if p._inv is None:
        img = p._img
        inv = [0] * len(img)
        for i, v in enumerate(img):
            inv[v] = i
        q = Permutation._raw(tuple(inv))
        q._inv = p
        p._inv = q
    return p._inv


def conjugate(g: Permutation, x: Permutation) -> Permutation:
    """``g x g⁻¹``, i.e. x relabelled through g."""
    _check_degree(g, x)
    return Permutation._raw(_getter(inverse(g))(_getter(x)(g._img)))


def conjugator(g: Permutation):
    """``x ↦ g x g⁻¹`` for x of g's degree; no degree check per call."""
    ginv, gimg, raw = _getter(inverse(g)), g._img, Permutation._raw
    return lambda x: raw(ginv(_getter(x)(gimg)))


def power(p: Permutation, k: int) -> Permutation:
    if k < 0:
        p, k = inverse(p), -k
    # pointwise along cycles: O(n) regardless of k
    img = p._img
    out = list(range(len(img)))
    for cyc in p.cycles():
        L = len(cyc)
        s = k % L
        if s:
            for j, pt in enumerate(cyc):
                out[pt - 1] = cyc[(j + s) % L] - 1
    return Permutation._raw(tuple(out))


def order(p: Permutation) -> int:
    return math.lcm(*(len(c) for c in p.cycles())) if not p.is_identity() else 1


def parity(p: Permutation) -> str:
    """``"even"`` or ``"odd"``."""
    ncycles = len(p.cycles(include_fixed=True))
    return "even" if (p.degree - ncycles) % 2 == 0 else "odd"


def cycle_structure(p: Permutation) -> CycleStructure:
    counts: dict[int, int] = {}
    for c in p.cycles(include_fixed=True):
        counts[len(c)] = counts.get(len(c), 0) + 1
    return CycleStructure(tuple(sorted(counts.items())))


def has_regular_cycle(cs: CycleStructure) -> bool:
    """Every cycle length divides the longest one."""
    top = cs.max_length
    return all(top % l == 0 for l in cs.lengths)
