"""Group-class predicates: primary groups, mod-p-cyclic groups, G_p^q, Oliver groups.

Throughout, the trivial group counts as a p-group for every prime p; this is
what makes cyclic groups non-Oliver (take P = 1, H = G).
"""
from __future__ import annotations

from dataclasses import dataclass

from sympy import primefactors

from .lattice import (Subgroup, SubgroupLattice, cyclic_quotient_generator, is_normal_in,
                      quotient_is_cyclic)

# returned by is_primary for the trivial group
TRIVIAL = 1


def prime_power_base(n: int) -> int | None:
    """``p`` if ``n = p**k`` with ``k >= 1``; ``TRIVIAL`` for ``n = 1``; else ``None``."""
    if n == 1:
        return TRIVIAL
    ps = primefactors(n)
    return ps[0] if len(ps) == 1 else None


def is_primary(H: Subgroup) -> int | None:
    return prime_power_base(H.order)


def prime_universe(lat: SubgroupLattice) -> frozenset[int]:
    """Primes considered when a trivial P or quotient stands in for "every prime"."""
    ps = primefactors(lat.group.order)
    return frozenset(ps) if ps else frozenset({2})


def _p_primes(order: int, universe) -> frozenset[int]:
    b = prime_power_base(order)
    if b is None:
        return frozenset()
    return frozenset(universe) if b == TRIVIAL else frozenset({b})


def mod_p_cyclic_witnesses(H: Subgroup, lat: SubgroupLattice) -> dict[int, tuple[Subgroup, int]]:
    """For each admissible prime p: the smallest normal p-subgroup P of H with
    H/P cyclic, and an element generating H modulo P."""
    universe = prime_universe(lat)
    out: dict[int, tuple[Subgroup, int]] = {}
    for P in lat.subgroups_of(H):
        primes = _p_primes(P.order, universe) - out.keys()
        if not primes or not is_normal_in(P, H):
            continue
        g = cyclic_quotient_generator(H, P)
        if g is not None:
            for p in primes:
                out[p] = (P, g)
    return out


def is_mod_p_cyclic(H: Subgroup, lat: SubgroupLattice) -> frozenset[int]:
    """Primes p for which H has a normal p-subgroup with cyclic quotient."""
    return frozenset(mod_p_cyclic_witnesses(H, lat))


def in_gpq(H: Subgroup, lat: SubgroupLattice) -> frozenset[tuple[int, int]]:
    """Pairs (p, q) witnessed by a chain P <| K <| H, P a p-group, H/K a q-group, K/P cyclic."""
    universe = prime_universe(lat)
    pairs: set[tuple[int, int]] = set()
    for K in lat.subgroups_of(H):
        qs = _p_primes(H.order // K.order, universe)
        if not qs or not is_normal_in(K, H):
            continue
        for P in lat.subgroups_of(K):
            ps = _p_primes(P.order, universe)
            if not ps:
                continue
            if all((p, q) in pairs for p in ps for q in qs):
                continue
            if is_normal_in(P, K) and quotient_is_cyclic(K, P):
                pairs.update((p, q) for p in ps for q in qs)
    return frozenset(pairs)


@dataclass(frozen=True)
class CyclicChain:
    """Witness ``P <| K <| H`` with P a p-group, H/K a q-group and K/P = <P, g>/P cyclic.

    ``p`` (``q``) is ``TRIVIAL`` when P (H/K) is trivial and so any prime serves.
    """

    P: Subgroup
    K: Subgroup
    generator: int
    p: int
    q: int


def cyclic_chain(H: Subgroup, lat: SubgroupLattice, mod_p_cyclic: bool = False) -> CyclicChain | None:
    """A witness that H lies in G_p^q for some primes (with K = H when ``mod_p_cyclic``).

    Larger K are tried first, so a mod-p-cyclic witness is preferred when one exists.
    """
    inside = lat.subgroups_of(H)
    for K in reversed(inside):
        q = prime_power_base(H.order // K.order)
        if q is None or (mod_p_cyclic and K.order != H.order) or not is_normal_in(K, H):
            continue
        for P in inside:
            if P.order > K.order:
                break
            p = prime_power_base(P.order)
            if p is None or not P <= K or not is_normal_in(P, K):
                continue
            g = cyclic_quotient_generator(K, P)
            if g is not None:
                return CyclicChain(P, K, g, p, q)
    return None


def is_oliver(lat: SubgroupLattice) -> bool:
    """No chain P <| H <| G with |P|, |G:H| prime powers (1 allowed) and H/P cyclic."""
    G = lat.group
    for cls in lat.classes:
        if not cls.is_normal:
            continue
        H = cls.representative
        if prime_power_base(G.order // H.order) is None:
            continue
        for P in lat.subgroups:
            if P.order > H.order:
                break
            if not P <= H or prime_power_base(P.order) is None:
                continue
            if is_normal_in(P, H) and quotient_is_cyclic(H, P):
                return False
    return True


@dataclass(frozen=True)
class ClassTag:
    subject: int                      # SubgroupClass id
    primary_prime: int | None         # TRIVIAL for the trivial group
    mod_p_cyclic_primes: frozenset[int]
    gpq_pairs: frozenset[tuple[int, int]]
    oliver: bool | None = None        # only filled for the whole group


def tag_classes(lat: SubgroupLattice, with_gpq: bool = True) -> list[ClassTag]:
    tags = []
    for c in lat.classes:
        H = c.representative
        is_whole = H.order == lat.group.order
        tags.append(ClassTag(
            c.id,
            is_primary(H),
            is_mod_p_cyclic(H, lat),
            in_gpq(H, lat) if with_gpq else frozenset(),
            is_oliver(lat) if is_whole else None,
        ))
    return tags
