import pytest

from oliver_exclude.named import parse_group_spec, read_group_file, write_group_file
from oliver_exclude.perm import GroupTooLarge

from groups import DATA


@pytest.mark.parametrize("spec,order,degree", [
    ("C1", 1, 1), ("C6", 6, 6), ("S4", 24, 4), ("A5", 60, 5), ("D10", 10, 5), ("D4", 4, 4),
    ("D2", 2, 2), ("Q8", 8, 8), ("SL(2,3)", 24, 8), ("SL(2,5)", 120, 24), ("GL(2,3)", 48, 8),
    ("GL(3,2)", 168, 7), ("A5xC3", 180, 8), ("S3xA4", 72, 7), ("MC(8,2,3)", 16, 16),
    ("C2 x C2", 4, 4),
])
def test_named_orders(spec, order, degree):
    G = parse_group_spec(spec)
    assert (G.order, G.degree) == (order, degree)


def test_direct_product_acts_on_disjoint_points():
    G = parse_group_spec("A5xC3")
    for g in G.elements:
        assert set(g.images[:5]) == set(range(5))
        assert set(g.images[5:]) == {5, 6, 7}


def test_sl25_is_perfect_with_central_involution():
    G = parse_group_spec("SL(2,5)")
    inv = [g for g in G.elements if g.order() == 2]
    assert len(inv) == 1


@pytest.mark.parametrize("bad", ["Z5", "SL(2,7)", "A5xx", "", "D7", "MC(5,2,3)"])
def test_unknown_specs(bad):
    with pytest.raises(ValueError):
        parse_group_spec(bad)


def test_cap():
    with pytest.raises(GroupTooLarge):
        parse_group_spec("S6", cap=100)


def test_group_files(tmp_path):
    G = read_group_file(DATA / "sg16_3.group")
    assert G.order == 16
    p = tmp_path / "g.group"
    write_group_file(parse_group_spec("A5xC3"), p)
    H = parse_group_spec(f"@{p}")
    assert H.order == 180
    p.write_text("gen: (1,2)\n")
    with pytest.raises(ValueError):
        read_group_file(p)
    p.write_text("degree: 3\nfoo: 1\n")
    with pytest.raises(ValueError):
        read_group_file(p)
