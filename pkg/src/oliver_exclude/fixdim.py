"""Fixed-point dimensions of real characters on subgroups."""
from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass

from .cyclotomic import cyc_sum
from .lattice import Subgroup, SubgroupLattice


class FixedDimError(ArithmeticError):
    pass


def class_counts(H: Subgroup) -> Counter:
    cls = H.group.class_of
    return Counter(cls[h] for h in H.members)


def fixed_dim(values, H: Subgroup) -> int:
    """``(1/|H|) sum_{h in H} X(h)`` for a class function ``values`` of ``H.group``.

    The average is computed exactly and must be a non-negative integer.
    """
    G = H.group
    counts = class_counts(H)
    idx = sorted(counts)
    total = cyc_sum(G.exponent, [values[c] for c in idx], [counts[c] for c in idx])
    if not total.is_rational():
        raise FixedDimError(f"character sum over subgroup is irrational: {total}")
    q = total.to_rational()
    if q.numerator % H.order:
        raise FixedDimError(f"|H| = {H.order} does not divide the character sum {q}")
    d = q.numerator // H.order
    if q.denominator != 1 or d < 0:
        raise FixedDimError(f"invalid fixed-point dimension {q}/{H.order}")
    return d


def fixed_dim_sum_check(candidate, H: Subgroup, reals) -> int:
    """Fixed dimension of a candidate module; asserts additivity over its summands."""
    d = fixed_dim(candidate.character, H)
    parts = sum(fixed_dim(reals[i].values, H) for i in candidate.summands)
    if d != parts:
        raise FixedDimError(f"fixed dimension {d} != sum over summands {parts}")
    return d


@dataclass
class FixedDimTable:
    rows: list[str]
    columns: list[str]
    entries: list[list[int]]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["character"] + self.columns)
        for label, row in zip(self.rows, self.entries):
            w.writerow([label] + row)
        return buf.getvalue()

    def entry(self, row: str, col: str) -> int:
        return self.entries[self.rows.index(row)][self.columns.index(col)]


def fixed_dim_table(lattice: SubgroupLattice, reals, include_trivial: bool = False) -> FixedDimTable:
    """Rows are real irreducibles, columns subgroup classes (by representative).

    Each entry is re-evaluated on a second conjugate when the class has one.
    """
    chosen = [X for X in reals if include_trivial or not X.is_trivial]
    entries = []
    for X in chosen:
        row = []
        for c in lattice.classes:
            d = fixed_dim(X.values, c.representative)
            if c.size > 1 and fixed_dim(X.values, c.conjugates[-1]) != d:
                raise FixedDimError(f"{X.label} on {c.label} depends on the conjugate")
            row.append(d)
        entries.append(row)
    return FixedDimTable([X.label for X in chosen], [c.label for c in lattice.classes], entries)
