"""Exclusion of one-fixed-point actions via the discrete-submodule (strategy 1)
and intersection-number (strategy 2) restrictions, with certificates.

A certificate for a candidate tangent module X is a triple (H1, H2, P) with
``<H1 u H2> = G`` and ``P <= H1 n H2`` such that

* strategy 1: H1, H2 in the family G(G) (each has a chain P' <| K <| H with
  P' a p-group, H/K a q-group, K/P' cyclic), P a nontrivial p-group, and
  ``dim X^P = 0``;
* strategy 2: P a p-group (trivial allowed), ``dim X^H1 > 0``, ``dim X^H2 > 0``,
  ``dim X^H1 + dim X^H2 = dim X^P``, and either |H1|, |H2| are odd or P is
  normal in both with |H1/P|, |H2/P| odd.
"""
from __future__ import annotations

import hashlib
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .chartab import CharacterTable, compute_char_table
from .cyclotomic import parse_cyclotomic
from .fixdim import fixed_dim
from .grouptags import cyclic_chain, prime_power_base
from .lattice import Subgroup, SubgroupLattice, is_normal_in
from .perm import Group
from .realchars import (CandidateModule, RealCharacter, enumerate_candidates, morimoto_kernel,
                        realify)

MORIMOTO_EXCLUDED = "MORIMOTO_EXCLUDED"
CERTIFIED = "CERTIFIED"
UNRESOLVED = "UNRESOLVED"
ODD_ORDERS = "odd-orders"
NORMAL_ODD = "normal-odd-quotients"


GPQ = "gpq"
MOD_P_CYCLIC = "mod-p-cyclic"


@dataclass(frozen=True)
class ExcludeOptions:
    morimoto: bool = True
    strategies: tuple[int, ...] = (1, 2)
    threads: int = 1
    # family admitted for H1, H2 in strategy 1: all of G(G), or only G_p^1(G)
    s1_family: str = GPQ

    @classmethod
    def from_env(cls, **kw) -> ExcludeOptions:
        threads = int(os.environ.get("OLIVER_EXCLUDE_THREADS", "1") or 1)
        return cls(threads=max(1, threads), **kw)


@dataclass
class GroupData:
    """Everything about G that does not depend on the candidate module."""

    group: Group
    lattice: SubgroupLattice
    table: CharacterTable
    reals: list[RealCharacter]

    @classmethod
    def build(cls, G: Group, table: CharacterTable | None = None) -> GroupData:
        lat = SubgroupLattice(G)
        table = table or compute_char_table(G)
        return cls(G, lat, table, realify(table))

    def real_by_label(self, label: str) -> int:
        for i, X in enumerate(self.reals):
            if X.label == label:
                return i
        raise KeyError(label)

    def table_digest(self) -> str:
        h = hashlib.sha256()
        for X in self.reals:
            h.update((X.label + ":" + ",".join(X.value_strings()) + "\n").encode())
        return h.hexdigest()


@dataclass(frozen=True)
class Triple:
    strategy: int
    h1: int          # indices into lattice.subgroups
    h2: int
    p: int
    parity: str | None = None


def maximal_subgroups(lat: SubgroupLattice) -> list[Subgroup]:
    proper = lat.subgroups[:-1]
    out = []
    for M in proper:
        if not any(K.order > M.order and M <= K for K in proper):
            out.append(M)
    return out


def _generating_pairs(lat: SubgroupLattice, allowed_h1, allowed_h2) -> Iterator[tuple[Subgroup, Subgroup]]:
    """(h1, h2) with h1 a class representative and ``<h1, h2> = G``, in class order."""
    maxes = maximal_subgroups(lat)
    for c1 in lat.classes:
        if not allowed_h1(c1.id):
            continue
        h1 = c1.representative
        over_h1 = [M for M in maxes if h1 <= M]
        if h1.order == lat.group.order:
            over_h1 = []
        for c2 in lat.classes:
            if not allowed_h2(c2.id):
                continue
            for h2 in c2.conjugates:
                if not any(h2 <= M for M in over_h1):
                    yield h1, h2


def _p_subgroups_of(lat: SubgroupLattice, mask: int, include_trivial: bool) -> list[Subgroup]:
    subs = [P for P in lat.subgroups
            if P.mask & mask == P.mask and prime_power_base(P.order) is not None
            and (include_trivial or P.order > 1)]
    subs.sort(key=lambda P: (lat.class_of_mask[P.mask], P.members))
    return subs


def good_triples_s1(lat: SubgroupLattice, members: dict[int, bool]) -> list[Triple]:
    """Strategy-1 triples; ``members`` says which classes may serve as H1 or H2."""
    ok = lambda cid: members[cid]
    out = []
    for h1, h2 in _generating_pairs(lat, ok, ok):
        for P in _p_subgroups_of(lat, h1.mask & h2.mask, include_trivial=False):
            out.append(Triple(1, lat.index[h1.mask], lat.index[h2.mask], lat.index[P.mask]))
    return out


def good_triples_s2(lat: SubgroupLattice) -> list[Triple]:
    out = []
    every = lambda cid: True
    for h1, h2 in _generating_pairs(lat, every, every):
        both_odd = h1.order % 2 == 1 and h2.order % 2 == 1
        for P in _p_subgroups_of(lat, h1.mask & h2.mask, include_trivial=True):
            if both_odd:
                parity = ODD_ORDERS
            elif ((h1.order // P.order) % 2 == 1 and (h2.order // P.order) % 2 == 1
                  and is_normal_in(P, h1) and is_normal_in(P, h2)):
                parity = NORMAL_ODD
            else:
                continue
            out.append(Triple(2, lat.index[h1.mask], lat.index[h2.mask], lat.index[P.mask], parity))
    return out


@dataclass
class SearchSpace:
    data: GroupData
    s1: list[Triple]
    s2: list[Triple]
    s1_family: str = GPQ

    @classmethod
    def build(cls, data: GroupData, strategies=(1, 2), s1_family: str = GPQ) -> SearchSpace:
        if s1_family not in (GPQ, MOD_P_CYCLIC):
            raise ValueError(f"unknown strategy-1 family {s1_family!r}")
        lat = data.lattice
        s1 = []
        if 1 in strategies:
            members = {c.id: cyclic_chain(c.representative, lat, s1_family == MOD_P_CYCLIC)
                       is not None for c in lat.classes}
            s1 = good_triples_s1(lat, members)
        s2 = good_triples_s2(lat) if 2 in strategies else []
        return cls(data, s1, s2, s1_family)


def _subgroup_record(lat: SubgroupLattice, H: Subgroup) -> dict:
    c = lat.class_of(H)
    return {"class": c.id, "label": c.label, "order": H.order,
            "conjugate": c.conjugates.index(H), "members": list(H.members)}


def _candidate_record(cand: CandidateModule, reals) -> dict:
    return {"label": cand.label,
            "summands": [reals[s].label for s in cand.summands],
            "degree": cand.total_degree,
            "character": [str(v) for v in cand.character]}


@dataclass
class TripleCertificate:
    strategy: int
    h1: Subgroup
    h2: Subgroup
    p: Subgroup
    candidate: CandidateModule
    checks: dict

    def to_dict(self, data: GroupData) -> dict:
        lat = data.lattice
        return {
            "strategy": self.strategy,
            "h1": _subgroup_record(lat, self.h1),
            "h2": _subgroup_record(lat, self.h2),
            "p": _subgroup_record(lat, self.p),
            "candidate": _candidate_record(self.candidate, data.reals),
            "checks": self.checks,
        }


def class_dims(cand: CandidateModule, lat: SubgroupLattice) -> list[int]:
    return [fixed_dim(cand.character, c.representative) for c in lat.classes]


def _make_certificate(space: SearchSpace, cand: CandidateModule, t: Triple, dims) -> TripleCertificate:
    lat = space.data.lattice
    h1, h2, P = lat.subgroups[t.h1], lat.subgroups[t.h2], lat.subgroups[t.p]
    checks = {
        "generates": True,
        "p_in_intersection": True,
        "p_prime": prime_power_base(P.order),
        "fixed_dims": {"h1": dims[0], "h2": dims[1], "p": dims[2]},
    }
    if t.strategy == 1:
        wit = {}
        for name, H in (("h1", h1), ("h2", h2)):
            ch = cyclic_chain(H, lat, space.s1_family == MOD_P_CYCLIC)
            wit[name] = {"p": ch.p, "q": ch.q, "p_subgroup": list(ch.P.members),
                         "cyclic_part": list(ch.K.members), "generator": ch.generator}
        checks["family"] = space.s1_family
        checks["chains"] = wit
    else:
        checks["parity_case"] = t.parity
    return TripleCertificate(t.strategy, h1, h2, P, cand, checks)


def check_candidate(cand: CandidateModule, space: SearchSpace, strategies=(1, 2)):
    """First triple (strategy 1 before 2) whose dimension conditions hold, or ``None``."""
    lat = space.data.lattice
    dims = class_dims(cand, lat)
    cls = lat.class_of_mask
    subs = lat.subgroups
    dim_of = lambda i: dims[cls[subs[i].mask]]
    if 1 in strategies:
        for t in space.s1:
            if dim_of(t.p) == 0:
                return _make_certificate(space, cand, t, (dim_of(t.h1), dim_of(t.h2), 0))
    if 2 in strategies:
        for t in space.s2:
            dp = dim_of(t.p)
            if dp < 2:
                continue
            a, b = dim_of(t.h1), dim_of(t.h2)
            if a > 0 and b > 0 and a + b == dp:
                return _make_certificate(space, cand, t, (a, b, dp))
    return None


@dataclass
class CandidateOutcome:
    candidate: CandidateModule
    status: str
    certificate: TripleCertificate | None = None
    morimoto_dim: int | None = None


@dataclass
class ExclusionReport:
    data: GroupData
    n: int
    options: ExcludeOptions
    outcomes: list[CandidateOutcome]
    elapsed: float = field(default=0.0, compare=False)

    @property
    def verdict(self) -> str:
        return "EXCLUDED" if all(o.status != UNRESOLVED for o in self.outcomes) else "NOT EXCLUDED"

    @property
    def excluded(self) -> bool:
        return self.verdict == "EXCLUDED"

    def to_dict(self) -> dict:
        G = self.data.group
        cands = []
        for o in self.outcomes:
            rec = {
                "label": o.candidate.label,
                "summands": [self.data.reals[s].label for s in o.candidate.summands],
                "values_digest": hashlib.sha256(
                    ",".join(str(v) for v in o.candidate.character).encode()).hexdigest(),
                "outcome": o.status,
            }
            if o.morimoto_dim is not None:
                rec["morimoto_fixed_dim"] = o.morimoto_dim
            if o.certificate is not None:
                rec["certificate"] = o.certificate.to_dict(self.data)
            cands.append(rec)
        return {
            "group": G.name or "?",
            "order": G.order,
            "degree": G.degree,
            "generators": [str(g) for g in G.generators],
            "n": self.n,
            "options": {"morimoto": self.options.morimoto,
                        "strategies": list(self.options.strategies),
                        "s1_family": self.options.s1_family},
            "candidates": cands,
            "verdict": self.verdict,
            "table_digest": self.data.table_digest(),
        }


def exclude(G: Group, n: int, options: ExcludeOptions | None = None,
            data: GroupData | None = None, space: SearchSpace | None = None) -> ExclusionReport:
    if n < 1:
        raise ValueError("sphere dimension must be positive")
    options = options or ExcludeOptions()
    t0 = time.perf_counter()
    data = data or GroupData.build(G)
    cands = enumerate_candidates(G, n, data.reals)
    K = morimoto_kernel(G) if options.morimoto else None
    space = space or SearchSpace.build(data, options.strategies, options.s1_family)

    def decide(cand: CandidateModule) -> CandidateOutcome:
        if K is not None:
            dk = fixed_dim(cand.character, K)
            if dk != 0:
                return CandidateOutcome(cand, MORIMOTO_EXCLUDED, morimoto_dim=dk)
        cert = check_candidate(cand, space, options.strategies)
        if cert is None:
            return CandidateOutcome(cand, UNRESOLVED)
        return CandidateOutcome(cand, CERTIFIED, cert)

    if options.threads > 1 and len(cands) > 1:
        with ThreadPoolExecutor(options.threads) as pool:
            outcomes = list(pool.map(decide, cands))
    else:
        outcomes = [decide(c) for c in cands]
    return ExclusionReport(data, n, options, outcomes, time.perf_counter() - t0)


# --- independent re-verification -------------------------------------------

class MalformedCertificate(ValueError):
    pass


class _Reject(Exception):
    pass


def _require(cond, why):
    if not cond:
        raise _Reject(why)


def _perm_set(G: Group, rec) -> set[tuple[int, ...]]:
    try:
        idx = [int(i) for i in rec["members"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedCertificate(f"bad member list: {exc}") from exc
    if any(not 0 <= i < G.order for i in idx):
        raise MalformedCertificate("element index out of range")
    return {G.elements[i].images for i in idx}


def _compose(a, b):
    return tuple(a[y] for y in b)


def _inverse(a):
    out = [0] * len(a)
    for x, y in enumerate(a):
        out[y] = x
    return tuple(out)


def _is_subgroup(S: set) -> bool:
    if not S:
        return False
    for a in S:
        for b in S:
            if _compose(a, b) not in S:
                return False
    return True


def _generated(gens: set, degree: int) -> set:
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    gens = [g for g in gens if g != ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def _normalises(H: set, N: set) -> bool:
    for h in H:
        hi = _inverse(h)
        for x in N:
            if _compose(_compose(h, x), hi) not in N:
                return False
    return True


def _prime_power(n: int) -> int | None:
    """Prime p with n = p^k (k >= 1), 1 for n = 1, else None (trial division)."""
    if n == 1:
        return 1
    p = 2
    while p * p <= n and n % p:
        p += 1
    if n % p:
        p = n
    while n % p == 0:
        n //= p
    return p if n == 1 else None


def _fixed_dim_direct(G: Group, values, S: set) -> int:
    total = None
    for x in S:
        v = values[G.class_of[G.index[x]]]
        total = v if total is None else total + v
    q = total.to_rational() if total.is_rational() else None
    _require(q is not None and q.denominator == 1 and q.numerator % len(S) == 0,
             "fixed-point dimension is not an integer")
    return q.numerator // len(S)


def verify_certificate(G: Group, cert, reals: list[RealCharacter] | None = None) -> bool:
    """Recheck a certificate from scratch using permutation and set arithmetic.

    ``cert`` is a certificate dict (as serialised in a report) or a
    :class:`TripleCertificate`. Character values are checked against the real
    irreducibles, which are recomputed when ``reals`` is not supplied.
    """
    if isinstance(cert, TripleCertificate):
        raise TypeError("serialise the certificate with to_dict() first")
    if reals is None:
        reals = realify(compute_char_table(G))
    try:
        _verify(G, cert, reals)
    except _Reject:
        return False
    return True


def _verify(G: Group, cert: dict, reals) -> None:
    try:
        strategy = int(cert["strategy"])
        cand = cert["candidate"]
        checks = cert["checks"]
        recorded = checks["fixed_dims"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedCertificate(f"missing field: {exc}") from exc
    if strategy not in (1, 2):
        raise MalformedCertificate(f"unknown strategy {strategy}")
    H1, H2, P = (_perm_set(G, cert[k]) for k in ("h1", "h2", "p"))
    all_elems = {p.images for p in G.elements}

    for S in (H1, H2, P):
        _require(_is_subgroup(S), "member set is not a subgroup")
    _require(_generated(H1 | H2, G.degree) == all_elems, "H1 and H2 do not generate G")
    _require(P <= (H1 & H2), "P is not contained in H1 n H2")
    p = _prime_power(len(P))
    _require(p is not None, "P is not of prime-power order")

    # the module: an honest sum of nontrivial real irreducibles, faithful, of the stated degree
    labels = {X.label: X for X in reals}
    try:
        summands = [labels[s] for s in cand["summands"]]
        given = [parse_cyclotomic(v, G.exponent) for v in cand["character"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise _Reject(f"unknown summand or bad value: {exc}") from exc
    _require(summands and not any(X.is_trivial for X in summands), "trivial or empty module")
    k = len(G.classes)
    _require(len(given) == k, "character has wrong length")
    for c in range(k):
        total = summands[0].values[c]
        for X in summands[1:]:
            total = total + X.values[c]
        _require(total == given[c], "character values do not match the summands")
    n = sum(X.degree for X in summands)
    _require(given[0] == n and int(cand.get("degree", n)) == n, "degree mismatch")
    kernel = [g for g in G.elements if given[G.class_of[G.index[g.images]]] == n]
    _require(len(kernel) == 1, "module is not faithful")

    d1, d2, dp = (_fixed_dim_direct(G, given, S) for S in (H1, H2, P))
    _require([d1, d2, dp] == [recorded.get("h1"), recorded.get("h2"), recorded.get("p")],
             "recorded fixed dimensions are wrong")

    if strategy == 1:
        _require(len(P) > 1, "strategy 1 needs a nontrivial P")
        _require(dp == 0, "P-fixed dimension is not zero")
        family = checks.get("family", GPQ)
        _require(family in (GPQ, MOD_P_CYCLIC), "unknown strategy-1 family")
        chains = checks.get("chains") or {}
        for name, H in (("h1", H1), ("h2", H2)):
            _check_chain(G, H, chains.get(name), family == MOD_P_CYCLIC)
    else:
        _require(d1 > 0 and d2 > 0, "strategy 2 needs positive fixed dimensions on H1, H2")
        _require(d1 + d2 == dp, "dimensions are not complementary in the P-fixed set")
        odd = len(H1) % 2 == 1 and len(H2) % 2 == 1
        normal_odd = ((len(H1) // len(P)) % 2 == 1 and (len(H2) // len(P)) % 2 == 1
                      and _normalises(H1, P) and _normalises(H2, P))
        _require(odd or normal_odd, "parity condition fails")


def _check_chain(G: Group, H: set, w, mod_p_cyclic: bool) -> None:
    """``P <| K <| H``, P a p-group, H/K a q-group, K = <P, g>."""
    _require(isinstance(w, dict), "missing chain witness")
    N = _perm_set(G, {"members": w.get("p_subgroup", [])})
    K = _perm_set(G, {"members": w.get("cyclic_part", [])})
    gi = int(w.get("generator", -1))
    _require(0 <= gi < G.order, "bad witness generator")
    g = G.elements[gi].images
    _require(N <= K <= H and g in K, "witness chain not nested in H")
    _require(_is_subgroup(N) and _is_subgroup(K), "witness chain members are not subgroups")
    _require(len(H) % len(K) == 0, "K does not divide H")
    p, q = _prime_power(len(N)), _prime_power(len(H) // len(K))
    _require(p is not None and p in (1, int(w.get("p", 0))), "P is not a p-group")
    _require(q is not None and q in (1, int(w.get("q", 0))), "H/K is not a q-group")
    _require(not mod_p_cyclic or K == H, "mod-p-cyclic witness needs K = H")
    _require(_normalises(H, K) and _normalises(K, N), "witness chain is not subnormal")
    _require(_generated(N | {g}, G.degree) == K, "K/P is not cyclic via the witness")


def verify_morimoto(G: Group, character_values: list[str], recorded_dim: int) -> bool:
    """Recheck a Morimoto exclusion: the squares-generated subgroup fixes a nonzero subspace."""
    squares = {_compose(g.images, g.images) for g in G.elements}
    K = _generated(squares, G.degree)
    values = [parse_cyclotomic(v, G.exponent) for v in character_values]
    try:
        d = _fixed_dim_direct(G, values, K)
    except _Reject:
        return False
    return d == recorded_dim and d > 0
