import pytest

from oliver_exclude.grouptags import (TRIVIAL, cyclic_chain, in_gpq, is_mod_p_cyclic, is_oliver,
                                      is_primary, mod_p_cyclic_witnesses, tag_classes)
from oliver_exclude.lattice import Subgroup, SubgroupLattice
from oliver_exclude.perm import parse_perm

from groups import NON_OLIVER, OLIVER_GROUPS, data, group, short


def lattice(spec) -> SubgroupLattice:
    return data(spec).lattice if spec in OLIVER_GROUPS else SubgroupLattice(group(spec))


def whole(lat):
    return lat.subgroups[-1]


def test_is_primary_examples():
    lat = SubgroupLattice(group("S3xA4"))
    by_order = {H.order: H for H in lat.subgroups}
    assert is_primary(by_order[9]) == 3
    assert is_primary(by_order[6]) is None
    assert is_primary(by_order[1]) == TRIVIAL


def test_mod_p_cyclic_examples():
    for spec in ("C6", "C12", "C1"):
        lat = SubgroupLattice(group(spec))
        assert is_mod_p_cyclic(whole(lat), lat)
    lat = SubgroupLattice(group("S3"))
    assert is_mod_p_cyclic(whole(lat), lat) == {3}
    lat = SubgroupLattice(group("C3xC3"))
    assert is_mod_p_cyclic(whole(lat), lat) == {3}
    lat = SubgroupLattice(group("A4"))
    assert is_mod_p_cyclic(whole(lat), lat) == {2}


def test_mod_p_cyclic_witnesses_are_valid():
    lat = data("A5xC3").lattice
    G = lat.group
    for c in lat.classes:
        H = c.representative
        for p, (P, g) in mod_p_cyclic_witnesses(H, lat).items():
            assert P <= H and g in H.members
            assert P.order == 1 or is_primary(P) == p
            assert set(G.closure(set(P.members) | {g})) == set(H.members)


def test_in_gpq_examples():
    lat = SubgroupLattice(group("S4"))
    assert (2, 2) in in_gpq(whole(lat), lat)
    lat = SubgroupLattice(group("A5"))
    assert in_gpq(whole(lat), lat) == frozenset()
    lat = SubgroupLattice(group("C10"))
    assert in_gpq(whole(lat), lat)


def test_s4_in_gpq_but_not_mod_p_cyclic():
    lat = SubgroupLattice(group("S4"))
    S4 = whole(lat)
    assert not is_mod_p_cyclic(S4, lat)
    ch = cyclic_chain(S4, lat)
    assert ch is not None and (ch.K.order, ch.P.order) == (12, 4)
    assert cyclic_chain(S4, lat, mod_p_cyclic=True) is None


@pytest.mark.parametrize("spec", OLIVER_GROUPS, ids=short)
def test_oliver_groups(spec):
    lat = lattice(spec)
    assert is_oliver(lat)
    assert in_gpq(whole(lat), lat) == frozenset()


@pytest.mark.parametrize("spec", NON_OLIVER, ids=short)
def test_non_oliver_groups(spec):
    lat = lattice(spec)
    assert not is_oliver(lat)
    assert in_gpq(whole(lat), lat)


@pytest.mark.parametrize("spec", ["A5", "S5", "A4xC2", "C3xS3", "SL(2,3)", "GL(2,3)", "D12xC3"])
def test_oliver_agrees_with_gpq_on_more_groups(spec):
    lat = SubgroupLattice(group(spec))
    assert is_oliver(lat) == (not in_gpq(whole(lat), lat))


def test_a5_is_oliver():
    assert is_oliver(SubgroupLattice(group("A5")))


def test_conjugates_get_identical_tags():
    lat = data("A5xC3").lattice
    for c in lat.classes:
        rep, other = c.representative, c.conjugates[-1]
        assert is_mod_p_cyclic(rep, lat) == is_mod_p_cyclic(other, lat)
        assert in_gpq(rep, lat) == in_gpq(other, lat)
        assert (cyclic_chain(rep, lat) is None) == (cyclic_chain(other, lat) is None)


def test_tag_classes_shape():
    lat = SubgroupLattice(group("S4"))
    tags = tag_classes(lat)
    assert len(tags) == len(lat.classes)
    assert tags[-1].oliver is False and all(t.oliver is None for t in tags[:-1])
    for t in tags:
        # mod-p-cyclic means the chain with K = H exists, which is a G_p^q witness too
        assert not t.mod_p_cyclic_primes or t.gpq_pairs


def test_published_strategy_one_subgroups_are_mod_p_cyclic():
    lat = data("A5xC3").lattice
    G = lat.group

    def sub(*cycles):
        return Subgroup.from_members(G, G.closure({G.idx(parse_perm(c, 8)) for c in cycles}))

    H1 = sub("(2,5)(3,4)", "(6,8,7)")
    H2 = sub("(1,5,4)", "(6,8,7)")
    assert (H1.order, H2.order) == (6, 9)
    assert is_mod_p_cyclic(H1, lat) and is_mod_p_cyclic(H2, lat) == {3}
