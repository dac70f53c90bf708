"""Real irreducible characters and candidate tangent modules."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .chartab import CharacterTable, frobenius_schur
from .cyclotomic import Cyclotomic
from .fixdim import fixed_dim
from .lattice import Subgroup, to_mask
from .perm import Group


@dataclass(frozen=True)
class RealCharacter:
    values: tuple[Cyclotomic, ...]
    degree: int
    provenance: tuple[int, ...]   # complex irreducible row indices
    indicator: int
    label: str
    is_trivial: bool

    def value_strings(self) -> list[str]:
        return [str(v) for v in self.values]


@dataclass(frozen=True)
class CandidateModule:
    summands: tuple[int, ...]     # indices into the realified list, sorted
    total_degree: int
    character: tuple[Cyclotomic, ...]
    label: str
    degrees: tuple[int, ...]      # summand degrees, non-decreasing


def _degree(values) -> int:
    return int(values[0].to_rational())


def realify(t: CharacterTable) -> list[RealCharacter]:
    """Real irreducible characters from Frobenius-Schur indicators.

    Indicator +1 keeps a character, 0 pairs it with its conjugate, -1 doubles it.
    """
    G = t.group
    rows = t.irreducibles
    raw = []
    used = set()
    for i, chi in enumerate(rows):
        if i in used:
            continue
        nu = frobenius_schur(chi, G)
        if nu == 1:
            raw.append((tuple(chi), (i,), nu))
        elif nu == -1:
            raw.append((tuple(v * 2 for v in chi), (i,), nu))
        else:
            bar = [v.conj() for v in chi]
            j = next(j for j, r in enumerate(rows) if j != i and list(r) == bar)
            used.add(j)
            raw.append((tuple(a + b for a, b in zip(chi, bar)), (i, j), nu))
        used.add(i)
    raw.sort(key=lambda r: (_degree(r[0]), tuple(v.sort_key() for v in r[0])))
    per_degree: dict[int, int] = {}
    for vals, _, _ in raw:
        per_degree[_degree(vals)] = per_degree.get(_degree(vals), 0) + 1
    seen: dict[int, int] = {}
    out = []
    for vals, prov, nu in raw:
        d = _degree(vals)
        seen[d] = seen.get(d, 0) + 1
        label = f"X_{d}" if per_degree[d] == 1 else f"X_{d},{seen[d]}"
        trivial = all(v == 1 for v in vals)
        if trivial:
            label = "X_triv"
        out.append(RealCharacter(vals, d, prov, nu, label, trivial))
    return out


def character_kernel(values, G: Group) -> Subgroup:
    """``{g : X(g) = X(1)}`` as a subgroup."""
    deg = values[0]
    members = [c.members for i, c in enumerate(G.classes) if values[i] == deg]
    return Subgroup.from_members(G, itertools.chain.from_iterable(members))


def partitions(n: int, degrees) -> list[tuple[int, ...]]:
    """Multisets (non-decreasing tuples) of the given degree values summing to ``n``."""
    ds = sorted(set(d for d in degrees if d > 0))
    out: list[tuple[int, ...]] = []

    def rec(rest, start, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for i in range(start, len(ds)):
            if ds[i] > rest:
                break
            acc.append(ds[i])
            rec(rest - ds[i], i, acc)
            acc.pop()

    if n >= 1:
        rec(n, 0, [])
    out.sort(key=lambda p: (len(p), p))
    return out


def candidate_label(reals, summands) -> str:
    counts: dict[int, int] = {}
    for s in summands:
        counts[s] = counts.get(s, 0) + 1
    parts = []
    for s in sorted(counts):
        parts.append(reals[s].label if counts[s] == 1 else f"{counts[s]}*{reals[s].label}")
    return "+".join(parts)


def make_candidate(reals, summands, G: Group) -> CandidateModule:
    summands = tuple(sorted(summands))
    e = G.exponent
    k = len(G.classes)
    char = tuple(sum((reals[s].values[c] for s in summands), Cyclotomic.rational(e, 0))
                 for c in range(k))
    degrees = tuple(sorted(reals[s].degree for s in summands))
    return CandidateModule(summands, sum(degrees), char, candidate_label(reals, summands), degrees)


def enumerate_candidates(G: Group, n: int, reals: list[RealCharacter]) -> list[CandidateModule]:
    """Faithful sums of nontrivial real irreducibles of total degree ``n``.

    Order: by degree pattern (as in :func:`partitions`), then by summand indices.
    """
    nontrivial = [i for i, X in enumerate(reals) if not X.is_trivial]
    by_degree: dict[int, list[int]] = {}
    for i in nontrivial:
        by_degree.setdefault(reals[i].degree, []).append(i)
    kernels = {i: to_mask(character_kernel(reals[i].values, G).members) for i in nontrivial}
    out = []
    for pattern in partitions(n, by_degree):
        mult: dict[int, int] = {}
        for d in pattern:
            mult[d] = mult.get(d, 0) + 1
        choices = [list(itertools.combinations_with_replacement(by_degree[d], a))
                   for d, a in sorted(mult.items())]
        found = []
        for combo in itertools.product(*choices):
            summands = tuple(sorted(itertools.chain.from_iterable(combo)))
            ker = -1
            for s in summands:
                ker &= kernels[s]
            if ker == 1:
                found.append(summands)
        for summands in sorted(found):
            out.append(make_candidate(reals, summands, G))
    return out


def morimoto_kernel(G: Group) -> Subgroup:
    """Subgroup generated by all squares: the intersection of the index-2 subgroups."""
    squares = {G.mul[g][g] for g in range(G.order)}
    return Subgroup.from_members(G, G.closure(squares))


def morimoto_filter(candidate: CandidateModule, K: Subgroup) -> bool:
    """True when the candidate survives, i.e. its ``K``-fixed dimension is zero."""
    return fixed_dim(candidate.character, K) == 0
