"""End-to-end acceptance checks, one test per criterion.

Each test records a ``criterion N: PASS|FAIL`` line; ``conftest.py`` prints them in the
terminal summary so they show up even when output is captured.
"""
import contextlib
import copy
import random
import time

from oliver_exclude.chartab import compute_char_table, frobenius_schur, verify_orthogonality
from oliver_exclude.cli import EXIT_NO, main
from oliver_exclude.engine import CERTIFIED, ExcludeOptions, GroupData, exclude, verify_certificate
from oliver_exclude.fixdim import fixed_dim_table
from oliver_exclude.grouptags import is_oliver
from oliver_exclude.lattice import SubgroupLattice, enumerate_subgroups
from oliver_exclude.named import parse_group_spec
from oliver_exclude.realchars import enumerate_candidates

import test_certificate_fuzz as fuzz
from groups import (ALL_SMALL, DATA, EXCLUDED_RUNS, NON_OLIVER, NOT_EXCLUDED_RUNS, OLIVER_GROUPS, data,
                    group)
from reference import align, degree_key, read_table, reference, subgroup_order
from test_lattice import EXTRA_SMALL, brute_subgroups, compose_table

RESULTS: dict[int, str] = {}


@contextlib.contextmanager
def criterion(k: int, detail: str = ""):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        RESULTS[k] = f"criterion {k}: FAIL {detail}".rstrip()
        print(RESULTS[k])
        raise
    RESULTS[k] = f"criterion {k}: PASS {detail} ({time.perf_counter() - t0:.1f}s)".replace("  ", " ")
    print(RESULTS[k])


def test_criterion_1_fixdim_table():
    with criterion(1, "A5xC3 fixed-dimension table, 9 x 21, exact up to relabelling"):
        t0 = time.perf_counter()
        G = parse_group_spec(f"@{DATA / 'a5xc3_published.group'}")
        assert {str(g) for g in G.elements} == {str(g) for g in group("A5xC3").elements}
        d = GroupData.build(G)
        ours = read_table(fixed_dim_table(d.lattice, d.reals).to_csv())
        elapsed = time.perf_counter() - t0
        maps = align(ours, reference(), degree_key, subgroup_order)
        assert maps is not None
        rows, cols = maps
        assert len(set(rows.values())) == 9 and len(set(cols.values())) == 21
        assert elapsed < 60


def test_criterion_2_candidates():
    with criterion(2, "A5xC3 n=6 candidates {6}, {6}, {2,4}"):
        d = data("A5xC3")
        cands = enumerate_candidates(d.group, 6, d.reals)
        patterns = sorted(c.degrees for c in cands)
        assert patterns == [(2, 4), (6,), (6,)]


def test_criterion_3_certificates():
    with criterion(3, "A5xC3 n=6 certificates"):
        r = exclude(group("A5xC3"), 6, data=data("A5xC3"))
        assert r.verdict == "EXCLUDED"
        lat = r.data.lattice
        seen = []
        for o in r.outcomes:
            c = o.certificate
            pattern = o.candidate.degrees
            seen.append(pattern)
            assert o.status == CERTIFIED
            fd = c.checks["fixed_dims"]
            if pattern == (2, 4):
                assert c.strategy == 2 and c.p.order == 1
                assert sorted((fd["h1"], fd["h2"])) == [2, 4] and fd["p"] == 6
            else:
                assert pattern == (6,)
                assert c.strategy == 1 and lat.class_of(c.p).order == 3 and fd["p"] == 0
        assert sorted(seen) == [(2, 4), (6,), (6,)]


def test_criterion_4_excluded_rows():
    times = {}
    with criterion(4, "nine EXCLUDED verdicts, each under 10 min"):
        for spec, n in EXCLUDED_RUNS:
            t0 = time.perf_counter()
            r = exclude(parse_group_spec(spec), n, ExcludeOptions.from_env())
            times[(spec, n)] = time.perf_counter() - t0
            assert r.verdict == "EXCLUDED", (spec, n)
            assert times[(spec, n)] < 600, (spec, n)
            for o in r.outcomes:
                if o.certificate is not None:
                    assert verify_certificate(r.data.group, o.certificate.to_dict(r.data), r.data.reals)
        slowest = max(times, key=times.get)
        print(f"slowest run {slowest[0]} n={slowest[1]}: {times[slowest]:.1f}s")


def test_criterion_5_negative_controls(capsys):
    with criterion(5, "(A5, 6) and (A5xC3, 7) NOT EXCLUDED with exit 1"):
        for spec, n in NOT_EXCLUDED_RUNS:
            assert main(["exclude", spec, "--dim", str(n)]) == EXIT_NO
            assert "NOT EXCLUDED" in capsys.readouterr().out


def test_criterion_6_oliver_classification():
    with criterion(6, "Oliver test on the listed groups"):
        for spec in OLIVER_GROUPS:
            assert is_oliver(data(spec).lattice), spec
        for spec in NON_OLIVER:
            assert not is_oliver(SubgroupLattice(group(spec))), spec


def test_criterion_7_character_tables():
    specs = sorted(set(OLIVER_GROUPS) | {"A5"} | set(NON_OLIVER))
    with criterion(7, f"character-table identities on {len(specs)} groups"):
        for spec in specs:
            G = group(spec)
            t = data(spec).table if spec in OLIVER_GROUPS else compute_char_table(G)
            assert sum(d * d for d in t.degrees) == G.order, spec
            assert verify_orthogonality(t), spec
            nus = [frobenius_schur(chi, G) for chi in t.irreducibles]
            assert set(nus) <= {-1, 0, 1}, spec
            involutions = sum(1 for g in G.elements if (g * g).is_identity())
            assert sum(nu * d for nu, d in zip(nus, t.degrees)) == involutions, spec


def test_criterion_8_lattice_oracle():
    specs = ALL_SMALL + EXTRA_SMALL
    with criterion(8, f"lattice equals closed-subset oracle on {len(specs)} groups; S4 30/11"):
        for spec in specs:
            G = group(spec)
            ours = {frozenset(H.members) for H in enumerate_subgroups(G)}
            assert ours == brute_subgroups(G), spec
        S4 = group("S4")
        subs = brute_subgroups(S4)
        assert len(subs) == 30
        t = compose_table(S4)
        e = next(i for i, g in enumerate(S4.elements) if g.is_identity())
        inv = [next(j for j in range(S4.order) if t[i][j] == e) for i in range(S4.order)]
        classes = {frozenset(frozenset(t[t[g][x]][inv[g]] for x in H) for g in range(S4.order))
                   for H in subs}
        assert len(classes) == 11
        lat = SubgroupLattice(S4)
        assert (len(lat), len(lat.classes)) == (30, 11)


def test_criterion_9_certificate_fuzzing():
    with criterion(9, "100 mutated certificates rejected, originals accepted"):
        certs = fuzz.certificates()
        for spec, cert in certs:
            assert verify_certificate(group(spec), cert, data(spec).reals)
        rng = random.Random(20240611)
        kinds = [fuzz.swap_p, fuzz.shrink_h2, fuzz.perturb_candidate]
        for k in range(fuzz.MUTATIONS):
            spec, cert = certs[k % len(certs)]
            bad = kinds[k % len(kinds)](spec, copy.deepcopy(cert), rng)
            assert bad != cert
            assert not verify_certificate(group(spec), bad, data(spec).reals)
