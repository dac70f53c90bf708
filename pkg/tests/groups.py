"""Shared group lists and cached builders for the test suite."""
from __future__ import annotations

from functools import lru_cache
from pathlib import Path

from oliver_exclude.engine import GroupData, SearchSpace
from oliver_exclude.named import parse_group_spec

DATA = Path(__file__).parent / "data"

# one spec per isomorphism type of order <= 16 (42 groups)
SMALL_GROUPS = {
    1: ["C1"],
    2: ["C2"],
    3: ["C3"],
    4: ["C4", "C2xC2"],
    5: ["C5"],
    6: ["C6", "S3"],
    7: ["C7"],
    8: ["C8", "C4xC2", "C2xC2xC2", "D8", "Q8"],
    9: ["C9", "C3xC3"],
    10: ["C10", "D10"],
    11: ["C11"],
    12: ["C12", "C6xC2", "D12", "A4", "Q12"],
    13: ["C13"],
    14: ["C14", "D14"],
    15: ["C15"],
    16: ["C16", "C4xC4", "C8xC2", "C2xC2xC2xC2", "C4xC2xC2", "D16", "Q16",
         "MC(8,2,3)", "MC(8,2,5)", "MC(4,4,3)", f"@{DATA / 'sg16_3.group'}",
         f"@{DATA / 'pauli.group'}", "D8xC2", "Q8xC2"],
}
ALL_SMALL = [s for specs in SMALL_GROUPS.values() for s in specs]
P_GROUPS_16 = [s for n, specs in SMALL_GROUPS.items() if n in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16)
               for s in specs]

# (spec, n) pairs the engine must exclude
EXCLUDED_RUNS = [("SL(2,5)", 6), ("SL(2,5)", 8), ("A5xC3", 6), ("S4xC3", 6), ("S5", 7),
                 ("GL(3,2)", 7), ("S3xA4", 6), ("A5xC5", 6), ("A5xC7", 6)]
NOT_EXCLUDED_RUNS = [("A5", 6), ("A5xC3", 7)]
OLIVER_GROUPS = sorted({s for s, _ in EXCLUDED_RUNS})
NON_OLIVER = ([f"C{n}" for n in range(1, 31)] + P_GROUPS_16 + ["S3", "S4", "A4"]
              + [f"D{2 * n}" for n in range(1, 11)])


def short(spec: str) -> str:
    return Path(spec[1:]).stem if spec.startswith("@") else spec


@lru_cache(maxsize=None)
def group(spec: str):
    return parse_group_spec(spec)


@lru_cache(maxsize=None)
def data(spec: str) -> GroupData:
    return GroupData.build(group(spec))


@lru_cache(maxsize=None)
def space(spec: str, family: str = "gpq") -> SearchSpace:
    return SearchSpace.build(data(spec), (1, 2), family)
