"""Published A5 x C3 fixed-dimension table and a label-alignment search."""
from __future__ import annotations

import csv
import io
import itertools
from collections import defaultdict

from groups import DATA


def read_table(text: str) -> tuple[list[str], list[str], list[list[int]]]:
    rows = list(csv.reader(io.StringIO(text)))
    cols = rows[0][1:]
    labels = [r[0] for r in rows[1:]]
    entries = [[int(x) for x in r[1:]] for r in rows[1:]]
    return labels, cols, entries


def reference():
    return read_table((DATA / "a5xc3_fixdim_reference.csv").read_text())


def _group_by(labels, key):
    out = defaultdict(list)
    for i, lab in enumerate(labels):
        out[key(i, lab)].append(i)
    return out


def align(ours, ref, row_key, col_key):
    """Find row and column bijections, within equal keys, under which the tables agree.

    ``ours`` and ``ref`` are (labels, columns, entries) triples; ``row_key(i, label)``
    is typically the degree (first entry) and ``col_key(j, label)`` the subgroup order.
    Returns ``(row_map, col_map)`` from reference labels to our labels, or ``None``.
    """
    o_rows, o_cols, o_ent = ours
    r_rows, r_cols, r_ent = ref
    if (len(o_rows), len(o_cols)) != (len(r_rows), len(r_cols)):
        return None
    o_rg = _group_by(o_rows, lambda i, l: row_key(o_ent, i))
    r_rg = _group_by(r_rows, lambda i, l: row_key(r_ent, i))
    o_cg = _group_by(o_cols, lambda j, l: col_key(l))
    r_cg = _group_by(r_cols, lambda j, l: col_key(l))
    if {k: len(v) for k, v in o_rg.items()} != {k: len(v) for k, v in r_rg.items()}:
        return None
    if {k: len(v) for k, v in o_cg.items()} != {k: len(v) for k, v in r_cg.items()}:
        return None
    keys = sorted(r_rg)
    for perms in itertools.product(*(itertools.permutations(o_rg[k]) for k in keys)):
        rmap = {}
        for k, p in zip(keys, perms):
            rmap.update(zip(r_rg[k], p))
        cmap = {}
        for k in r_cg:
            # columns of equal order are matched by their (row-permuted) vectors
            want = defaultdict(list)
            for j in o_cg[k]:
                want[tuple(o_ent[rmap[i]][j] for i in range(len(r_rows)))].append(j)
            for j in r_cg[k]:
                v = tuple(r_ent[i][j] for i in range(len(r_rows)))
                if not want.get(v):
                    break
                cmap[j] = want[v].pop()
            else:
                continue
            break
        else:
            return ({r_rows[i]: o_rows[rmap[i]] for i in rmap},
                    {r_cols[j]: o_cols[cmap[j]] for j in cmap})
    return None


def subgroup_order(label: str) -> int:
    return int(label.split("_")[1].split(",")[0])


def degree_key(entries, i):
    return entries[i][0]

