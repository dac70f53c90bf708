"""Compute the A5 x C3 fixed-dimension table and align it with the published one.

Prints the recovered label bijections (published label -> ours) and exits 1 if no
bijection between same-degree characters and same-order classes makes the tables agree.
"""
from __future__ import annotations

import sys
from pathlib import Path

TESTS = Path(__file__).resolve().parent.parent / "tests"
sys.path.insert(0, str(TESTS))

from oliver_exclude.engine import GroupData  # noqa: E402
from oliver_exclude.fixdim import fixed_dim_table  # noqa: E402
from oliver_exclude.named import read_group_file  # noqa: E402
from reference import align, degree_key, read_table, reference, subgroup_order  # noqa: E402


def main() -> int:
    d = GroupData.build(read_group_file(TESTS / "data" / "a5xc3_published.group"))
    csv_text = fixed_dim_table(d.lattice, d.reals).to_csv()
    print(csv_text)
    maps = align(read_table(csv_text), reference(), degree_key, subgroup_order)
    if maps is None:
        print("no label bijection reconciles the two tables")
        return 1
    rows, cols = maps
    print("characters:", ", ".join(f"{a}->{b}" for a, b in rows.items()))
    print("classes:   ", ", ".join(f"{a}->{b}" for a, b in cols.items()))
    return 0


if __name__ == "__main__":
    sys.exit(main())
