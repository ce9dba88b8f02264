"""Finite groups behind a multiplication oracle.

A :class:`FiniteGroup` is a generator list plus an *arithmetic* object that
knows how to multiply, invert, order and print elements.  Three arithmetics
exist: permutations of a fixed degree, indices into a Cayley table, and
pairs over two component arithmetics (direct products).

Class, subgroup and orbit computations are breadth-first closures keyed on
element equality.  Only operations that genuinely need the full element list
(``center``, ``order``, membership for generic subgroups) enumerate it, and
every enumeration is capped by ``enumeration_bound``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Any, Callable, Hashable, Iterable, Sequence

from . import perm as P
from .errors import (
    BoundExceeded,
    GroupFileError,
    MalformedCycle,
    NotAnElement,
    ParameterOutOfRange,
    PointOutOfRange,
    RepeatedPoint,
    UnknownFamily,
)

DEFAULT_BOUND = 20000

Element = Hashable


def _apply(f, x):
    return f(x)


# arithmetics

class PermArithmetic:
    """Elements are :class:`~conjquandle.perm.Permutation` of one degree."""

    def __init__(self, degree: int):
        self.degree = degree
        self.identity = P.identity(degree)

    def mul(self, a, b):
        return P.compose(a, b)

    def inv(self, a):
        return P.inverse(a)

    def conj(self, g, x):
        return P.conjugate(g, x)

    def conj_by(self, g):
        return P.conjugator(g)

    def order(self, a) -> int:
        return P.order(a)

    def power(self, a, k: int):
        return P.power(a, k)

    def key(self, a):
        return a._img

    def fmt(self, a) -> str:
        return P.format_cycles(a)

    def parse(self, text: str):
        return P.parse_cycles(text, self.degree)

    def describe(self) -> str:
        return f"permutations of degree {self.degree}"

    def __eq__(self, other):
        return isinstance(other, PermArithmetic) and other.degree == self.degree

    def __hash__(self):
        return hash(("perm", self.degree))


class TableArithmetic:
    """Elements are 0-based row indices of a Cayley table; 0 is the identity."""

    def __init__(self, table: Sequence[Sequence[int]]):
        self.table = tuple(tuple(r) for r in table)
        n = len(self.table)
        self.size = n
        self.identity = 0
        self._inv = [0] * n
        for a in range(n):
            row = self.table[a]
            self._inv[a] = row.index(0)

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self._inv[a]

    def conj(self, g, x):
        t = self.table
        return t[t[g][x]][self._inv[g]]

    def conj_by(self, g):
        t, row, gi = self.table, self.table[g], self._inv[g]
        return lambda x: t[row[x]][gi]

    def order(self, a) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def power(self, a, k: int):
        if k < 0:
            a, k = self._inv[a], -k
        x = 0
        for _ in range(k % self.order(a)):
            x = self.table[x][a]
        return x

    def key(self, a):
        return a

    def fmt(self, a) -> str:
        return f"g{a + 1}"

    def parse(self, text: str):
        s = text.strip()
        if s.startswith("g"):
            s = s[1:]
        if not s.isdigit():
            raise NotAnElement(f"expected a table element like 'g3' or '3', got {text!r}")
        k = int(s)
        if not 1 <= k <= self.size:
            raise NotAnElement(f"table element {k} outside 1..{self.size}")
        return k - 1

    def describe(self) -> str:
        return f"Cayley table of order {self.size}"


class ProductArithmetic:
    """Elements are pairs ``(a, b)`` multiplied componentwise."""

    def __init__(self, left, right):
        self.left = left
        self.right = right
        self.identity = (left.identity, right.identity)

    def mul(self, a, b):
        return (self.left.mul(a[0], b[0]), self.right.mul(a[1], b[1]))

    def inv(self, a):
        return (self.left.inv(a[0]), self.right.inv(a[1]))

    def conj(self, g, x):
        # product generators have one identity component
        ga, gb = g
        a = x[0] if ga == self.identity[0] else self.left.conj(ga, x[0])
        b = x[1] if gb == self.identity[1] else self.right.conj(gb, x[1])
        return (a, b)

    def conj_by(self, g):
        ga, gb = g
        if ga == self.identity[0]:
            fb = self.right.conj_by(gb)
            return lambda x: (x[0], fb(x[1]))
        fa = self.left.conj_by(ga)
        if gb == self.identity[1]:
            return lambda x: (fa(x[0]), x[1])
        fb = self.right.conj_by(gb)
        return lambda x: (fa(x[0]), fb(x[1]))

    def order(self, a) -> int:
        return math.lcm(self.left.order(a[0]), self.right.order(a[1]))

    def power(self, a, k: int):
        return (self.left.power(a[0], k), self.right.power(a[1], k))

    def key(self, a):
        return (self.left.key(a[0]), self.right.key(a[1]))

    def fmt(self, a) -> str:
        return f"[{self.left.fmt(a[0])} | {self.right.fmt(a[1])}]"

    def parse(self, text: str):
        s = text.strip()
        if s.startswith("[") and s.endswith("]"):
            s = s[1:-1]
        parts = s.split("|")
        if len(parts) != 2:
            raise NotAnElement(f"product elements are written 'A | B', got {text!r}")
        return (self.left.parse(parts[0]), self.right.parse(parts[1]))

    def describe(self) -> str:
        return f"({self.left.describe()}) x ({self.right.describe()})"


# groups

@dataclass(frozen=True)
class ConjClass:
    """A conjugacy class; ``members`` is sorted canonically."""

    representative: Any
    members: tuple
    ambient: "FiniteGroup" = field(repr=False, compare=False)

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, x) -> bool:
        return x in self.member_set

    @cached_property
    def member_set(self) -> frozenset:
        return frozenset(self.members)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)


class FiniteGroup:
    """A finite group given by generators over an arithmetic."""

    source_kind = "catalog"

    def __init__(
        self,
        arith,
        generators: Iterable = (),
        bound: int = DEFAULT_BOUND,
        name: str | None = None,
        family: tuple[str, int] | None = None,
        known_order: int | None = None,
    ):
        self.arith = arith
        gens = []
        seen = set()
        for g in generators:
            if g != arith.identity and g not in seen:
                seen.add(g)
                gens.append(g)
        self.generators = tuple(gens)
        self.bound = int(bound)
        self.name = name or f"<{', '.join(arith.fmt(g) for g in gens)}>"
        self.family = family
        self.known_order = known_order
        self._gen_inv = tuple(arith.inv(g) for g in self.generators)
        self._elements: frozenset | None = None
        self._sorted: tuple | None = None

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r})"

    # element arithmetic

    @property
    def identity(self):
        return self.arith.identity

    def mul(self, a, b):
        return self.arith.mul(a, b)

    def inv(self, a):
        return self.arith.inv(a)

    def conjugate(self, g, x):
        return self.arith.conj(g, x)

    def power(self, a, k: int):
        return self.arith.power(a, k)

    def element_order(self, a) -> int:
        return self.arith.order(a)

    def key(self, a):
        return self.arith.key(a)

    def fmt(self, a) -> str:
        return self.arith.fmt(a)

    def parse_element(self, text: str):
        x = self.arith.parse(text)
        if not self.contains(x):
            raise NotAnElement(f"{text!r} is not an element of {self.name}")
        return x

    def sort(self, xs: Iterable) -> tuple:
        return tuple(sorted(xs, key=self.arith.key))

    # enumeration

    def enumerate_elements(self) -> frozenset:
        """All elements of the group; memoized, capped by the bound."""
        if self._elements is None:
            ar = self.arith
            e = ar.identity
            seen = {e}
            queue = deque([e])
            while queue:
                x = queue.popleft()
                for g in self.generators:
                    y = ar.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        if len(seen) > self.bound:
                            raise BoundExceeded(self.bound, f"enumerating {self.name}")
                        queue.append(y)
            self._elements = frozenset(seen)
        return self._elements

    def elements(self) -> tuple:
        """Elements in canonical order."""
        if self._sorted is None:
            self._sorted = self.sort(self.enumerate_elements())
        return self._sorted

    def order(self) -> int:
        if self.known_order is not None:
            return self.known_order
        return len(self.enumerate_elements())

    def contains(self, x) -> bool:
        if self.family is not None and isinstance(self.arith, PermArithmetic):
            fam, _ = self.family
            if not isinstance(x, P.Permutation) or x.degree != self.arith.degree:
                return False
            if fam == "symmetric":
                return True
            if fam == "alternating":
                return P.parity(x) == "even"
        try:
            return x in self.enumerate_elements()
        except TypeError:
            return False

    # orbits and classes

    def _orbit(self, start, step: Callable[[Any, Any], Any], acting: Sequence, what) -> set:
        # what: message for BoundExceeded, or a callable producing it
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for g in acting:
                y = step(g, x)
                if y not in seen:
                    seen.add(y)
                    if len(seen) > self.bound:
                        raise BoundExceeded(self.bound, what() if callable(what) else what)
                    queue.append(y)
        return seen

    def _conj_maps(self, acting: Sequence) -> list:
        return [self.arith.conj_by(g) for g in acting]

    def _conj_orbit(self, start, maps: list, what) -> set:
        # orbit under prepared conjugation maps
        return self._orbit(start, _apply, maps, what)

    def conjugacy_class(self, e) -> ConjClass:
        """Orbit of e under conjugation by the generators; no full enumeration."""
        orbit = self._conj_orbit(e, self._conj_maps(self.generators), lambda: f"class of {self.fmt(e)}")
        members = self.sort(orbit)
        return ConjClass(members[0], members, self)

    def conjugacy_classes(self) -> list[ConjClass]:
        """All classes, ordered by canonical representative (smallest member)."""
        done: set = set()
        out = []
        for x in self.elements():
            if x in done:
                continue
            c = self.conjugacy_class(x)
            done.update(c.members)
            out.append(c)
        return out

    def split_class_in_subgroup(self, C: ConjClass | Iterable, H: "FiniteGroup") -> list[tuple]:
        """Partition C into orbits under conjugation by H's generators."""
        members = C.members if isinstance(C, ConjClass) else self.sort(C)
        remaining = set(members)
        maps = self._conj_maps(H.generators)
        blocks = []
        for x in members:
            if x not in remaining:
                continue
            orbit = self._conj_orbit(x, maps, "class split")
            blocks.append(self.sort(orbit))
            remaining -= orbit
        return blocks

    # subgroups, centralizers, centre

    def generated_subgroup(self, S: Iterable, name: str | None = None) -> "FiniteGroup":
        S = self.sort(set(S))
        return FiniteGroup(self.arith, S, bound=self.bound,
                           name=name or f"<{len(S)} elements of {self.name}>")

    def centralizer_contains(self, z, x) -> bool:
        """Whether x commutes with z."""
        ar = self.arith
        return ar.mul(x, z) == ar.mul(z, x)

    def is_central(self, x) -> bool:
        """Whether x commutes with every generator (hence with the whole group)."""
        ar = self.arith
        if x == ar.identity:
            return True
        return all(ar.mul(x, g) == ar.mul(g, x) for g in self.generators)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(self.centralizer_contains(a, b) for i, a in enumerate(gens) for b in gens[i + 1:])

    def center(self) -> tuple:
        return tuple(x for x in self.elements() if self.is_central(x))

    def cyclic_subgroup(self, c) -> tuple:
        """``(c^0, c^1, ..., c^(m-1))`` with m the order of c."""
        ar = self.arith
        out = [ar.identity]
        x = c
        while x != ar.identity:
            out.append(x)
            x = ar.mul(x, c)
        return tuple(out)

    def is_normal_subgroup(self, H: "FiniteGroup") -> bool:
        Hset = H.enumerate_elements()
        return all(self.conjugate(g, h) in Hset for g in self.generators for h in H.generators)


def direct_product(G1: FiniteGroup, G2: FiniteGroup, bound: int | None = None) -> FiniteGroup:
    ar = ProductArithmetic(G1.arith, G2.arith)
    gens = [(g, G2.identity) for g in G1.generators] + [(G1.identity, h) for h in G2.generators]
    known = None
    if G1.known_order is not None and G2.known_order is not None:
        known = G1.known_order * G2.known_order
    return FiniteGroup(ar, gens, bound=bound if bound is not None else max(G1.bound, G2.bound),
                       name=f"{G1.name} x {G2.name}", known_order=known)


# catalog

MAX_SYM_DEGREE = 64
MAX_CYCLIC = 100000

FAMILIES = ("symmetric", "alternating", "dihedral", "cyclic")


def symmetric(n: int, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    if not 1 <= n <= MAX_SYM_DEGREE:
        raise ParameterOutOfRange(f"symmetric degree must be in 1..{MAX_SYM_DEGREE}, got {n}")
    gens = []
    if n >= 2:
        gens = [P.Permutation.from_cycles([(1, 2)], n), P.Permutation.from_cycles([tuple(range(1, n + 1))], n)]
    return FiniteGroup(PermArithmetic(n), gens, bound=bound, name=f"S{n}",
                       family=("symmetric", n), known_order=math.factorial(n))


def alternating(n: int, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    if not 1 <= n <= MAX_SYM_DEGREE:
        raise ParameterOutOfRange(f"alternating degree must be in 1..{MAX_SYM_DEGREE}, got {n}")
    gens = [P.Permutation.from_cycles([(1, 2, k)], n) for k in range(3, n + 1)]
    order = math.factorial(n) // 2 if n >= 2 else 1
    return FiniteGroup(PermArithmetic(n), gens, bound=bound, name=f"A{n}",
                       family=("alternating", n), known_order=order)


def dihedral_generators(n: int) -> tuple[P.Permutation, P.Permutation]:
    """Rotation o = (1 2 ... n) and the reflection s fixing 1."""
    o = P.Permutation.from_cycles([tuple(range(1, n + 1))], n)
    s = P.Permutation([1] + [n + 2 - i for i in range(2, n + 1)])
    return o, s


def dihedral(order: int, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    """Dihedral group of the given order 2n (n >= 3), acting on n points."""
    if order % 2 or not 6 <= order <= 2 * MAX_CYCLIC:
        raise ParameterOutOfRange(f"dihedral order must be even and at least 6, got {order}")
    n = order // 2
    o, s = dihedral_generators(n)
    return FiniteGroup(PermArithmetic(n), [o, s], bound=bound, name=f"D{order}",
                       family=("dihedral", order), known_order=order)


def cyclic(n: int, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    if not 1 <= n <= MAX_CYCLIC:
        raise ParameterOutOfRange(f"cyclic order must be in 1..{MAX_CYCLIC}, got {n}")
    gens = [P.Permutation.from_cycles([tuple(range(1, n + 1))], n)] if n >= 2 else []
    return FiniteGroup(PermArithmetic(n), gens, bound=bound, name=f"C{n}",
                       family=("cyclic", n), known_order=n)


def catalog(name: str, param: int | str | None = None, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    """Build a catalog group.

    ``name`` is one of ``symmetric``, ``alternating``, ``dihedral`` (parameter
    is the group order 2n), ``cyclic``, ``from_generators`` or
    ``from_cayley_table`` (parameter is a file path).  A single string
    ``"family:param"`` is also accepted.
    """
    if param is None and ":" in name:
        name, param = name.split(":", 1)
    name = name.strip().lower()
    if name in ("from_generators", "from_cayley_table", "file"):
        if param is None:
            raise ParameterOutOfRange(f"{name} needs a file path")
        G = load_group_file(param, bound=bound)
        want = "table" if name == "from_cayley_table" else "degree"
        if name != "file" and G.source_kind != want:
            raise GroupFileError(f"expected a '{want}' file", path=str(param))
        return G
    builders = {"symmetric": symmetric, "alternating": alternating, "dihedral": dihedral, "cyclic": cyclic,
                "sym": symmetric, "alt": alternating, "dih": dihedral, "cyc": cyclic}
    if name not in builders:
        raise UnknownFamily(f"unknown group family {name!r}; expected one of {', '.join(FAMILIES)}")
    try:
        k = int(param)  # type: ignore[arg-type]
    except (TypeError, ValueError):
        raise ParameterOutOfRange(f"{name} needs an integer parameter, got {param!r}") from None
    return builders[name](k, bound=bound)


# group files

def _table_group(rows: list[list[int]], bound: int, name: str, path: str | None, lines: list[int]) -> FiniteGroup:
    n = len(rows)
    t = [[v - 1 for v in r] for r in rows]
    for i in range(n):
        if t[0][i] != i or t[i][0] != i:
            raise GroupFileError("element 1 must be the identity (row and column 1 must read 1..N)",
                                 line=lines[0] if i == 0 or t[0][i] != i else lines[i], path=path)
    for i, r in enumerate(t):
        if sorted(r) != list(range(n)):
            raise GroupFileError(f"row {i + 1} is not a permutation of 1..{n}", line=lines[i], path=path)
    for j in range(n):
        if sorted(t[i][j] for i in range(n)) != list(range(n)):
            raise GroupFileError(f"column {j + 1} is not a permutation of 1..{n}", path=path)
    for a in range(n):
        ta = t[a]
        for b in range(n):
            tab = t[ta[b]]
            tb = t[b]
            for c in range(n):
                if tab[c] != ta[tb[c]]:
                    raise GroupFileError(f"table is not associative at ({a + 1}, {b + 1}, {c + 1})",
                                         path=path)
    ar = TableArithmetic(t)
    # greedy generating set: add any element not yet reached
    gens: list[int] = []
    reached = {0}
    for x in range(n):
        if x not in reached:
            gens.append(x)
            reached = set(FiniteGroup(ar, gens, bound=max(bound, n)).enumerate_elements())
    if n > bound:
        raise BoundExceeded(bound, f"table group of order {n}")
    return FiniteGroup(ar, gens, bound=bound, name=name, known_order=n)


def parse_group_text(text: str, bound: int = DEFAULT_BOUND, name: str = "file", path: str | None = None) -> FiniteGroup:
    """Parse the group file grammar (see README)."""
    content = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        content.append((lineno, s))
    if not content:
        raise GroupFileError("empty group file", path=path)
    lineno, header = content[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] not in ("degree", "table") or not parts[1].isdigit():
        raise GroupFileError("header must be 'degree N' or 'table N'", line=lineno, path=path)
    kind, N = parts[0], int(parts[1])
    if N < 1:
        raise GroupFileError("N must be positive", line=lineno, path=path)
    if kind == "degree":
        gens = []
        for lineno, s in content[1:]:
            if not s.startswith("gen"):
                raise GroupFileError(f"expected 'gen <cycles>', got {s!r}", line=lineno, path=path)
            body = s[3:].strip()
            if not s[3:4].isspace() and s != "gen":
                raise GroupFileError(f"expected 'gen <cycles>', got {s!r}", line=lineno, path=path)
            try:
                gens.append(P.parse_cycles(body, N))
            except (MalformedCycle, PointOutOfRange, RepeatedPoint) as exc:
                raise GroupFileError(str(exc), line=lineno, path=path) from None
        G = FiniteGroup(PermArithmetic(N), gens, bound=bound, name=name)
        G.source_kind = "degree"
        return G
    rows, lines = [], []
    for lineno, s in content[1:]:
        toks = s.split()
        if not all(t.isdigit() for t in toks):
            raise GroupFileError("table rows must contain positive integers", line=lineno, path=path)
        row = [int(t) for t in toks]
        if len(row) != N:
            raise GroupFileError(f"row has {len(row)} entries, expected {N}", line=lineno, path=path)
        if any(not 1 <= v <= N for v in row):
            raise GroupFileError(f"entries must lie in 1..{N}", line=lineno, path=path)
        rows.append(row)
        lines.append(lineno)
    if len(rows) != N:
        raise GroupFileError(f"expected {N} table rows, found {len(rows)}", path=path)
    G = _table_group(rows, bound, name, path, lines)
    G.source_kind = "table"
    return G


def load_group_file(path, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise GroupFileError(f"cannot read group file: {exc.strerror}", path=str(path)) from None
    return parse_group_text(text, bound=bound, name=p.stem, path=str(path))
