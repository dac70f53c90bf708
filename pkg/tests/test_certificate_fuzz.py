"""Mutated certificates must be rejected; the originals must pass."""
import copy
import random

from oliver_exclude.engine import CERTIFIED, exclude, verify_certificate
from oliver_exclude.grouptags import prime_power_base

from groups import data, group

SOURCES = [("A5xC3", 6), ("SL(2,5)", 8), ("S4xC3", 6), ("GL(3,2)", 7), ("A5xC5", 6)]
MUTATIONS = 100


def certificates():
    out = []
    for spec, n in SOURCES:
        d = data(spec)
        r = exclude(d.group, n, data=d)
        out += [(spec, o.certificate.to_dict(d)) for o in r.outcomes if o.status == CERTIFIED]
    return out


def _generated(G, members) -> set[int]:
    return set(G.closure(set(members)))


def swap_p(spec, cert, rng):
    """Replace P by a subgroup that is not a prime-power subgroup of H1 n H2."""
    lat = data(spec).lattice
    inter = set(cert["h1"]["members"]) & set(cert["h2"]["members"])
    bad = [H for H in lat.subgroups
           if prime_power_base(H.order) is None or not set(H.members) <= inter]
    out = copy.deepcopy(cert)
    out["p"]["members"] = list(rng.choice(bad).members)
    return out


def shrink_h2(spec, cert, rng):
    """Replace H2 by a proper subgroup that no longer generates G together with H1, or
    drop one element so H2 is not a subgroup at all."""
    d = data(spec)
    G, lat = d.group, d.lattice
    out = copy.deepcopy(cert)
    h2 = set(cert["h2"]["members"])
    if rng.random() < 0.5 and len(h2) > 1:
        victim = rng.choice(sorted(h2 - {0}))
        out["h2"]["members"] = sorted(h2 - {victim})
        return out
    smaller = [K for K in lat.subgroups
               if set(K.members) < h2
               and len(_generated(G, set(cert["h1"]["members"]) | set(K.members))) < G.order]
    out["h2"]["members"] = list(rng.choice(smaller).members)
    return out


def perturb_candidate(spec, cert, rng):
    d = data(spec)
    out = copy.deepcopy(cert)
    cand = out["candidate"]
    kind = rng.randrange(3)
    if kind == 0:
        i = rng.randrange(len(cand["character"]))
        cand["character"][i] = f"{cand['character'][i]}+1"
    elif kind == 1:
        labels = [X.label for X in d.reals if not X.is_trivial]
        i = rng.randrange(len(cand["summands"]))
        others = [l for l in labels if l != cand["summands"][i]]
        cand["summands"][i] = rng.choice(others)
    else:
        key = rng.choice(["h1", "h2", "p"])
        out["checks"]["fixed_dims"][key] += rng.choice([-1, 1])
    return out


def test_unmutated_certificates_pass():
    for spec, cert in certificates():
        assert verify_certificate(group(spec), cert, data(spec).reals)


def test_mutations_are_all_rejected():
    rng = random.Random(20240611)
    certs = certificates()
    kinds = [swap_p, shrink_h2, perturb_candidate]
    rejected = 0
    for k in range(MUTATIONS):
        spec, cert = certs[k % len(certs)]
        mutate = kinds[k % len(kinds)]
        bad = mutate(spec, cert, rng)
        assert bad != cert
        assert not verify_certificate(group(spec), bad, data(spec).reals), (mutate.__name__, spec)
        rejected += 1
    assert rejected == MUTATIONS
