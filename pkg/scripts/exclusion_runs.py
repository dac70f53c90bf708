"""Run the exclusion engine on a list of (group, dimension) pairs and tabulate the outcome.

    python scripts/exclusion_runs.py                 # the default desk-scale list
    python scripts/exclusion_runs.py A5xC3:6 S5:7    # explicit pairs
    python scripts/exclusion_runs.py --out reports/  # also write one JSON report per run
"""
from __future__ import annotations

import argparse
import time
from collections import Counter
from pathlib import Path

from oliver_exclude.engine import ExcludeOptions, exclude
from oliver_exclude.formats import write_report
from oliver_exclude.named import parse_group_spec

DEFAULT_RUNS = ["SL(2,5):6", "SL(2,5):8", "A5xC3:6", "S4xC3:6", "S5:7", "GL(3,2):7",
                "S3xA4:6", "A5xC5:6", "A5xC7:6", "A5:6", "A5xC3:7"]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("runs", nargs="*", default=DEFAULT_RUNS, help="GROUP:DIM pairs")
    ap.add_argument("--out", type=Path, help="directory for JSON reports")
    args = ap.parse_args()
    if args.out:
        args.out.mkdir(parents=True, exist_ok=True)
    print(f"{'group':<10} {'n':>2} {'order':>5} {'cands':>5}  {'verdict':<13} {'time':>7}  outcomes")
    for run in args.runs:
        spec, dim = run.rsplit(":", 1)
        G = parse_group_spec(spec)
        t0 = time.perf_counter()
        r = exclude(G, int(dim), ExcludeOptions.from_env())
        dt = time.perf_counter() - t0
        counts = Counter(o.status for o in r.outcomes)
        summary = ", ".join(f"{k} {v}" for k, v in sorted(counts.items())) or "none"
        print(f"{spec:<10} {dim:>2} {G.order:>5} {len(r.outcomes):>5}  {r.verdict:<13} {dt:6.1f}s  {summary}")
        if args.out:
            safe = spec.replace("(", "").replace(")", "").replace(",", "_")
            write_report(r.to_dict(), args.out / f"{safe}_n{dim}.json")


if __name__ == "__main__":
    main()
