"""Permutations and finite permutation groups with fully enumerated elements.

Composition convention: ``(a * b)(x) == a(b(x))``, i.e. ``b`` acts first.
Points are 1-based in text (cycle notation) and 0-based internally.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Sequence

import numpy as np

DEFAULT_ORDER_CAP = 20000
# full multiplication tables are only materialised below this order
MULT_TABLE_LIMIT = 6000


class GroupTooLarge(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Perm:
    """A permutation of ``{0, ..., degree-1}`` stored as its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n < 1:
            raise ValueError("degree must be at least 1")
        if sorted(self.images) != list(range(n)):
            raise ValueError(f"not a bijection: {self.images}")

    @classmethod
    def identity(cls, degree: int) -> Perm:
        return cls(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Perm) -> Perm:
        a = self.images
        return Perm(tuple(a[y] for y in other.images))

    def inverse(self) -> Perm:
        inv = [0] * self.degree
        for x, y in enumerate(self.images):
            inv[y] = x
        return Perm(tuple(inv))

    def __pow__(self, k: int) -> Perm:
        if k < 0:
            return self.inverse() ** (-k)
        result, base = Perm.identity(self.degree), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            y = self.images[start]
            while y != start:
                cyc.append(y)
                seen.add(y)
                y = self.images[y]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Perm({self})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str, degree: int) -> Perm:
    """Parse cycle notation such as ``"(1,5,2,4,3)(6,8,7)"``.

    Cycles are composed right to left, so ``"(1,2)(2,3)"`` applies ``(2,3)``
    first. Separators may be commas or whitespace.
    """
    text = text.strip()
    if degree < 1:
        raise ValueError("degree must be at least 1")
    leftover = _CYCLE_RE.sub("", text).strip()
    if leftover:
        raise ValueError(f"unparsable cycle notation: {text!r}")
    result = Perm.identity(degree)
    for body in _CYCLE_RE.findall(text):
        tokens = [t for t in re.split(r"[,\s]+", body.strip()) if t]
        pts = []
        for t in tokens:
            p = int(t)
            if not 1 <= p <= degree:
                raise ValueError(f"point {p} out of range 1..{degree}")
            pts.append(p - 1)
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point in cycle ({body})")
        img = list(range(degree))
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a] = b
        result = result * Perm(tuple(img))
    return result


@dataclass(frozen=True)
class ConjClass:
    representative: Perm
    size: int
    element_order: int
    members: frozenset[int]
    rep_index: int


def _enumerate_elements(gens: Sequence[Perm], degree: int, cap: int) -> list[Perm]:
    ident = Perm.identity(degree)
    seen = {ident.images}
    frontier = [ident.images]
    gen_imgs = [g.images for g in gens if not g.is_identity()]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gen_imgs:
                y = tuple(g[i] for i in x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise GroupTooLarge(f"group order exceeds cap {cap}")
        frontier = nxt
    return [Perm(t) for t in sorted(seen)]


def _find_base(E: np.ndarray) -> list[int]:
    """Points whose images separate all elements (a base, not minimal)."""
    n, d = E.shape
    base: list[int] = []
    for pt in range(d):
        cols = base + [pt]
        distinct = len({tuple(r) for r in E[:, cols]})
        prev = len({tuple(r) for r in E[:, base]}) if base else 1
        if distinct > prev:
            base.append(pt)
        if distinct == n:
            break
    return base


class Group:
    """Finite permutation group with every element listed.

    Elements are sorted lexicographically by image tuple; every index set in
    the package refers to this order. Index 0 is always the identity.
    """

    def __init__(self, gens: Sequence[Perm], degree: int | None = None,
                 cap: int = DEFAULT_ORDER_CAP, name: str | None = None):
        gens = list(gens)
        if degree is None:
            if not gens:
                raise ValueError("need a degree or at least one generator")
            degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise ValueError("generators must share a degree")
        self.degree = degree
        self.generators = gens
        self.name = name
        self.elements = _enumerate_elements(gens, degree, cap)
        self.order = len(self.elements)
        self.index = {p.images: i for i, p in enumerate(self.elements)}
        self._E = np.array([p.images for p in self.elements], dtype=np.int64)
        self._base = _find_base(self._E)
        self._codes = self._encode(self._E[:, self._base])
        self._code_sort = np.argsort(self._codes)

    def __repr__(self):
        return f"Group({self.name or '?'}, order={self.order}, degree={self.degree})"

    def __len__(self):
        return self.order

    def _encode(self, rows: np.ndarray) -> np.ndarray:
        codes = np.zeros(rows.shape[:-1], dtype=np.int64)
        for j in range(rows.shape[-1]):
            codes = codes * self.degree + rows[..., j]
        return codes

    @cached_property
    def table(self) -> np.ndarray:
        """``table[i, j]`` is the index of ``elements[i] * elements[j]``."""
        if self.order > MULT_TABLE_LIMIT:
            raise GroupTooLarge(f"no multiplication table above order {MULT_TABLE_LIMIT}")
        E, n = self._E, self.order
        out = np.empty((n, n), dtype=np.int64)
        base_cols = E[:, self._base]
        for i in range(n):
            # row i: elements[i] applied after elements[j]
            out[i] = self._lookup_base(E[i][base_cols])
        return out

    def _lookup_base(self, base_rows: np.ndarray) -> np.ndarray:
        codes = self._encode(base_rows)
        pos = np.searchsorted(self._codes, codes, sorter=self._code_sort)
        return self._code_sort[pos]

    @cached_property
    def mul(self) -> list[list[int]]:
        return self.table.tolist()

    @cached_property
    def inv(self) -> list[int]:
        t = self.table
        inv = np.empty(self.order, dtype=np.int64)
        rows, cols = np.nonzero(t == 0)
        inv[rows] = cols
        return inv.tolist()

    def idx(self, p: Perm) -> int:
        return self.index[p.images]

    @cached_property
    def element_orders(self) -> list[int]:
        return [p.order() for p in self.elements]

    @cached_property
    def exponent(self) -> int:
        return reduce(math.lcm, self.element_orders, 1)

    @cached_property
    def generator_indices(self) -> list[int]:
        return [self.idx(g) for g in self.generators if not g.is_identity()]

    def closure(self, seed: Iterable[int]) -> frozenset[int]:
        """Smallest subgroup containing the given element indices."""
        mul = self.mul
        gens = sorted(set(seed) - {0})
        members = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                row = mul[x]
                for g in gens:
                    y = row[g]
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(members)

    def power(self, i: int, k: int) -> int:
        mul = self.mul
        k %= self.element_orders[i]
        r = 0
        for _ in range(k):
            r = mul[r][i]
        return r

    def conjugate(self, g: int, x: int) -> int:
        """Index of ``g x g^-1``."""
        return self.mul[self.mul[g][x]][self.inv[g]]

    @cached_property
    def conj_table(self) -> np.ndarray:
        """``conj_table[g, x]`` is the index of ``g x g^-1``."""
        t = self.table
        inv = np.array(self.inv)
        return t[t, inv[:, None]] if self.order else t

    @cached_property
    def classes(self) -> list[ConjClass]:
        return conjugacy_classes(self)

    @cached_property
    def class_of(self) -> list[int]:
        out = [0] * self.order
        for c, cls in enumerate(self.classes):
            for m in cls.members:
                out[m] = c
        return out

    @cached_property
    def class_sizes(self) -> list[int]:
        return [c.size for c in self.classes]

    def power_map(self, k: int) -> list[int]:
        """Class index of ``rep**k`` for each class index."""
        if k < 0:
            raise ValueError("power must be non-negative")
        return [self.class_of[self.power(c.rep_index, k)] for c in self.classes]

    @cached_property
    def all_power_maps(self) -> list[list[int]]:
        """``all_power_maps[c][t]`` is the class of ``rep_c ** t`` for ``t < exponent``."""
        mul = self.mul
        out = []
        for c in self.classes:
            r, row = 0, []
            for _ in range(self.exponent):
                row.append(self.class_of[r])
                r = mul[r][c.rep_index]
            out.append(row)
        return out


def generate_group(gens: Sequence[Perm], cap: int = DEFAULT_ORDER_CAP,
                   degree: int | None = None, name: str | None = None) -> Group:
    return Group(gens, degree=degree, cap=cap, name=name)


def conjugacy_classes(G: Group) -> list[ConjClass]:
    """Classes ordered by (element order, size, smallest member index)."""
    mul, inv = G.mul, G.inv
    gens = G.generator_indices
    seen = [False] * G.order
    raw = []
    for start in range(G.order):
        if seen[start]:
            continue
        orbit = {start}
        frontier = [start]
        seen[start] = True
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = mul[mul[g][x]][inv[g]]
                    if y not in orbit:
                        orbit.add(y)
                        seen[y] = True
                        nxt.append(y)
            frontier = nxt
        raw.append(orbit)
    orders = G.element_orders
    raw.sort(key=lambda o: (orders[min(o)], len(o), min(o)))
    return [ConjClass(G.elements[min(o)], len(o), orders[min(o)], frozenset(o), min(o))
            for o in raw]


def power_map(G: Group, k: int) -> dict[int, int]:
    return dict(enumerate(G.power_map(k)))


def closure(G: Group, seed: Iterable[int]) -> frozenset[int]:
    return G.closure(seed)
