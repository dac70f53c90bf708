"""Subgroups of a permutation group: enumeration, conjugacy classes, queries.

Subgroups are bitsets (Python ints) over ``Group.elements``; two subgroups
are the same iff their bitsets are equal.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .perm import Group

DEFAULT_SUBGROUP_LIMIT = 100000


class LatticeTooLarge(RuntimeError):
    pass


def to_mask(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << int(i)
    return m


def mask_members(mask: int) -> tuple[int, ...]:
    bits = bin(mask)[:1:-1]
    return tuple(i for i, c in enumerate(bits) if c == "1")


@dataclass(frozen=True, eq=False)
class Subgroup:
    group: Group = field(repr=False)
    mask: int
    members: tuple[int, ...] = field(repr=False)
    gens: tuple[int, ...] = field(default=(), repr=False)

    @classmethod
    def from_members(cls, G: Group, members, gens=()) -> Subgroup:
        ms = tuple(sorted(set(int(m) for m in members)))
        return cls(G, to_mask(ms), ms, tuple(gens))

    @property
    def order(self) -> int:
        return len(self.members)

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.mask == other.mask

    def __hash__(self):
        return hash(self.mask)

    def __contains__(self, i: int) -> bool:
        return bool(self.mask >> i & 1)

    def __le__(self, other: Subgroup) -> bool:
        return self.mask & other.mask == self.mask

    def sort_key(self):
        return (self.order, self.members)

    def generators(self) -> tuple[int, ...]:
        return self.gens if self.gens else self.members

    def __repr__(self):
        return f"Subgroup(order={self.order})"


@dataclass
class SubgroupClass:
    id: int
    representative: Subgroup
    conjugates: list[Subgroup]
    label: str = ""

    @property
    def order(self) -> int:
        return self.representative.order

    @property
    def is_normal(self) -> bool:
        return len(self.conjugates) == 1

    @property
    def size(self) -> int:
        return len(self.conjugates)


def _close(G: Group, start: np.ndarray, gens: list[int]) -> np.ndarray:
    """Boolean membership vector of the subgroup generated by ``start`` and ``gens``."""
    table = G.table
    inside = np.zeros(G.order, dtype=bool)
    inside[0] = True
    inside[start] = True
    all_gens = np.array(sorted(set(gens)), dtype=np.int64)
    frontier = np.nonzero(inside)[0]
    while frontier.size:
        prods = table[frontier][:, all_gens].ravel()
        new = np.unique(prods[~inside[prods]])
        inside[new] = True
        frontier = new
    return inside


def _extend(G: Group, H: Subgroup, g: int) -> Subgroup:
    gens = list(H.gens) + [g]
    inside = _close(G, np.array(H.members, dtype=np.int64), gens)
    members = np.nonzero(inside)[0]
    return Subgroup(G, to_mask(members.tolist()), tuple(members.tolist()), tuple(gens))


def _conjugate_orbit(G: Group, H: Subgroup) -> list[Subgroup]:
    """All conjugates ``gHg^-1`` as subgroups, sorted by member tuple."""
    ct = np.sort(G.conj_table[:, list(H.members)], axis=1)
    rows, first = np.unique(ct, axis=0, return_index=True)
    out = []
    for r, g in zip(rows, first):
        ms = tuple(int(x) for x in r)
        if ms == H.members:
            out.append(H)
            continue
        # carry the generators along so later closures stay cheap
        gens = tuple(G.conjugate(int(g), h) for h in H.gens)
        out.append(Subgroup(G, to_mask(ms), ms, gens))
    out.sort(key=Subgroup.sort_key)
    return out


class SubgroupLattice:
    """All subgroups of ``G`` grouped into conjugacy classes.

    Classes are ordered by (order, smallest conjugate member tuple); within a
    class the representative is the smallest conjugate.
    """

    def __init__(self, G: Group, limit: int = DEFAULT_SUBGROUP_LIMIT):
        self.group = G
        self.limit = limit
        self.classes = classify_conjugacy(G, _enumerate_class_reps(G, limit))
        subs = [s for c in self.classes for s in c.conjugates]
        subs.sort(key=Subgroup.sort_key)
        self.subgroups = subs
        self.index = {s.mask: i for i, s in enumerate(subs)}
        self.class_of_mask = {s.mask: c.id for c in self.classes for s in c.conjugates}

    def __len__(self):
        return len(self.subgroups)

    def get(self, mask: int) -> Subgroup:
        return self.subgroups[self.index[mask]]

    def class_of(self, H: Subgroup) -> SubgroupClass:
        return self.classes[self.class_of_mask[H.mask]]

    @cached_property
    def trivial(self) -> Subgroup:
        return self.subgroups[0]

    @cached_property
    def whole(self) -> Subgroup:
        return self.subgroups[-1]

    @cached_property
    def cyclic_masks(self) -> list[int]:
        """Bitset of the cyclic subgroup generated by each element."""
        mul = self.group.mul
        out = []
        for i in range(self.group.order):
            m, r = 1, i
            while r:
                m |= 1 << r
                r = mul[r][i]
            out.append(m)
        return out

    def subgroups_of(self, H: Subgroup) -> list[Subgroup]:
        return [K for K in self.subgroups if K.order <= H.order and K <= H]

    def join(self, A: Subgroup, B: Subgroup) -> Subgroup:
        return self.get(to_mask(self.group.closure(list(A.generators()) + list(B.generators()))))

    def intersect(self, A: Subgroup, B: Subgroup) -> Subgroup:
        return self.get(A.mask & B.mask)

    def normal_subgroups(self) -> list[SubgroupClass]:
        return normal_subgroups(self)


def _enumerate_class_reps(G: Group, limit: int) -> list[Subgroup]:
    mul = G.mul
    cyclic: dict[int, Subgroup] = {}
    for i in range(G.order):
        ms, r = [0], i
        while r:
            ms.append(r)
            r = mul[r][i]
        sub = Subgroup.from_members(G, ms, gens=(i,) if i else ())
        cyclic.setdefault(sub.mask, sub)
    cyc_list = sorted(cyclic.values(), key=Subgroup.sort_key)

    known: set[int] = set()   # masks of every subgroup found so far
    reps: list[Subgroup] = []
    queue: list[Subgroup] = []

    def register(H: Subgroup):
        orbit = _conjugate_orbit(G, H)
        for K in orbit:
            known.add(K.mask)
        if len(known) > limit:
            raise LatticeTooLarge(f"more than {limit} subgroups")
        reps.append(orbit[0])
        queue.append(orbit[0])

    for C in cyc_list:
        if C.mask not in known:
            register(C)
    while queue:
        H = queue.pop()
        for C in cyc_list:
            if C <= H:
                continue
            K = _extend(G, H, C.gens[0])
            if K.mask not in known:
                register(K)
    return reps


def enumerate_subgroups(G: Group, limit: int = DEFAULT_SUBGROUP_LIMIT) -> list[Subgroup]:
    """Every subgroup of ``G`` exactly once, sorted by (order, member tuple)."""
    return SubgroupLattice(G, limit).subgroups


def classify_conjugacy(G: Group, subs: list[Subgroup]) -> list[SubgroupClass]:
    seen: set[int] = set()
    orbits = []
    for H in subs:
        if H.mask in seen:
            continue
        orbit = _conjugate_orbit(G, H)
        seen.update(K.mask for K in orbit)
        orbits.append(orbit)
    orbits.sort(key=lambda o: o[0].sort_key())
    classes = [SubgroupClass(i, o[0], o) for i, o in enumerate(orbits)]
    by_order: dict[int, list[SubgroupClass]] = {}
    for c in classes:
        by_order.setdefault(c.order, []).append(c)
    for order, group in by_order.items():
        for k, c in enumerate(group, 1):
            c.label = f"d_{order}" if len(group) == 1 else f"d_{order},{k}"
    return classes


def intersect(A: Subgroup, B: Subgroup) -> Subgroup:
    mask = A.mask & B.mask
    return Subgroup(A.group, mask, mask_members(mask))


def normal_subgroups(lat: SubgroupLattice) -> list[SubgroupClass]:
    return [c for c in lat.classes if c.is_normal]


def is_normal_in(P: Subgroup, H: Subgroup) -> bool:
    """Whether ``P`` is normalised by every generator of ``H`` (requires P <= H)."""
    if not P <= H:
        raise ValueError("P is not contained in H")
    G = P.group
    mul, inv = G.mul, G.inv
    for h in H.generators():
        row, hi = mul[h], inv[h]
        for p in P.generators():
            if not P.mask >> mul[row[p]][hi] & 1:
                return False
    return True


def cyclic_quotient_generator(H: Subgroup, P: Subgroup) -> int | None:
    """Some ``h`` in ``H`` with ``<P, h> = H`` (``P`` normal in ``H``), else ``None``."""
    G = H.group
    mul = G.mul
    index = H.order // P.order
    if index == 1:
        return 0
    orders = G.element_orders
    for h in H.members:
        if orders[h] < index:
            continue
        # |P<h>| = |P| * o(h) / |P cap <h>|; count powers of h lying in P
        in_p, r = 1, h
        while r:
            if P.mask >> r & 1:
                in_p += 1
            r = mul[r][h]
        if orders[h] // in_p == index:
            return h
    return None


def quotient_is_cyclic(H: Subgroup, P: Subgroup) -> bool:
    """Whether ``H/P`` is cyclic, i.e. ``<P, h> = H`` for some ``h`` in ``H``."""
    if not is_normal_in(P, H):
        raise ValueError("P is not normal in H")
    return cyclic_quotient_generator(H, P) is not None
