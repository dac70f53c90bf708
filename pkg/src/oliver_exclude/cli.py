"""Command-line entry point: ``oliver-exclude <command> <group spec> ...``.

Exit codes for ``exclude``: 0 EXCLUDED, 1 NOT EXCLUDED, 2 error.
``verify`` exits 0 iff every certificate in the report checks out.
"""
from __future__ import annotations

import argparse
import sys

from . import engine
from .chartab import compute_char_table
from .engine import ExcludeOptions, GroupData, exclude, verify_certificate, verify_morimoto
from .fixdim import fixed_dim_table
from .formats import FormatError, load_report, write_chartab, write_report
from .grouptags import TRIVIAL, is_oliver, tag_classes
from .lattice import SubgroupLattice
from .named import parse_group_spec
from .perm import DEFAULT_ORDER_CAP
from .realchars import realify

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


def _fmt_primes(ps) -> str:
    if not ps:
        return "-"
    return ",".join(str(p) for p in sorted(ps))


def cmd_info(args) -> int:
    G = parse_group_spec(args.spec, args.cap)
    lat = SubgroupLattice(G)
    print(f"group: {G.name}")
    print(f"degree: {G.degree}")
    print(f"order: {G.order}")
    print(f"exponent: {G.exponent}")
    print(f"conjugacy classes: {len(G.classes)}")
    print(f"subgroup classes: {len(lat.classes)} ({len(lat)} subgroups)")
    print(f"oliver: {'yes' if is_oliver(lat) else 'no'}")
    return EXIT_OK


def cmd_subgroups(args) -> int:
    G = parse_group_spec(args.spec, args.cap)
    lat = SubgroupLattice(G)
    tags = tag_classes(lat)
    print("id\tlabel\torder\tsize\tnormal\tprimary\tmod_p_cyclic\tgpq\trepresentative")
    for c, t in zip(lat.classes, tags):
        prim = "1" if t.primary_prime == TRIVIAL else (str(t.primary_prime) if t.primary_prime else "-")
        gpq = ";".join(f"{p}/{q}" for p, q in sorted(t.gpq_pairs)) or "-"
        gens = " ".join(str(G.elements[g]) for g in c.representative.generators()) or "()"
        print(f"{c.id}\t{c.label}\t{c.order}\t{c.size}\t{'yes' if c.is_normal else 'no'}\t"
              f"{prim}\t{_fmt_primes(t.mod_p_cyclic_primes)}\t{gpq}\t<{gens}>")
    return EXIT_OK


def cmd_chartab(args) -> int:
    G = parse_group_spec(args.spec, args.cap)
    t = compute_char_table(G)
    print("class\t" + "\t".join(f"{c.size}:{c.representative}" for c in G.classes))
    if args.real:
        for X in realify(t):
            print(f"{X.label}\t" + "\t".join(X.value_strings()) + f"\t[indicator {X.indicator:+d}]")
    else:
        for i, row in enumerate(t.irreducibles):
            print(f"chi_{i + 1}\t" + "\t".join(str(v) for v in row))
    if args.export:
        write_chartab(t, args.export)
        print(f"# table written to {args.export}", file=sys.stderr)
    return EXIT_OK


def cmd_fixdim(args) -> int:
    G = parse_group_spec(args.spec, args.cap)
    data = GroupData.build(G)
    sys.stdout.write(fixed_dim_table(data.lattice, data.reals).to_csv())
    return EXIT_OK


def cmd_exclude(args) -> int:
    G = parse_group_spec(args.spec, args.cap)
    strategies = {"1": (1,), "2": (2,), "both": (1, 2)}[args.strategy]
    options = ExcludeOptions.from_env(morimoto=not args.no_morimoto, strategies=strategies,
                                      s1_family=args.s1_family)
    report = exclude(G, args.dim, options)
    for o in report.outcomes:
        extra = ""
        if o.certificate is not None:
            c = o.certificate
            lat = report.data.lattice
            extra = (f" strategy {c.strategy}: H1={lat.class_of(c.h1).label}"
                     f" H2={lat.class_of(c.h2).label} P={lat.class_of(c.p).label}")
        elif o.morimoto_dim is not None:
            extra = f" (index-2 kernel fixes dimension {o.morimoto_dim})"
        print(f"{o.candidate.label}: {o.status}{extra}")
    print(f"{report.data.group.name} n={args.dim}: {report.verdict} "
          f"({len(report.outcomes)} candidates, {report.elapsed:.1f}s)")
    if args.out:
        write_report(report.to_dict(), args.out)
    return EXIT_OK if report.excluded else EXIT_NO


def cmd_verify(args) -> int:
    G = parse_group_spec(args.spec, args.cap)
    rep = load_report(args.cert)
    if rep.get("order", G.order) != G.order:
        print(f"report is for a group of order {rep.get('order')}, not {G.order}", file=sys.stderr)
        return EXIT_NO
    reals = realify(compute_char_table(G))
    good = bad = 0
    for cand in rep["candidates"]:
        outcome = cand.get("outcome")
        if "certificate" in cand:
            ok = verify_certificate(G, cand["certificate"], reals)
        elif outcome == engine.MORIMOTO_EXCLUDED:
            ok = "morimoto_fixed_dim" in cand and verify_morimoto(
                G, cand.get("character") or _character_of(cand, reals, G), cand["morimoto_fixed_dim"])
        else:
            continue
        good, bad = good + ok, bad + (not ok)
        print(f"{cand.get('label')}: {'valid' if ok else 'INVALID'}")
    print(f"{good} valid, {bad} invalid")
    return EXIT_OK if bad == 0 else EXIT_NO


def _character_of(cand: dict, reals, G) -> list[str]:
    by_label = {X.label: X for X in reals}
    summands = [by_label[s] for s in cand["summands"]]
    vals = []
    for c in range(len(G.classes)):
        v = summands[0].values[c]
        for X in summands[1:]:
            v = v + X.values[c]
        vals.append(str(v))
    return vals


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="oliver-exclude",
                                 description="Exclude one-fixed-point sphere actions of finite groups.")
    ap.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP, help="maximal group order")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("spec", help="group spec, e.g. A5xC3, SL(2,5) or @file")
        p.set_defaults(func=fn)
        return p

    add("info", cmd_info, "order, exponent, classes, Oliver test")
    add("subgroups", cmd_subgroups, "subgroup classes with tags")
    p = add("chartab", cmd_chartab, "character table")
    p.add_argument("--real", action="store_true", help="list real irreducibles instead")
    p.add_argument("--export", metavar="PATH", help="write the complex table in interchange format")
    add("fixdim", cmd_fixdim, "fixed-point dimension table as CSV")
    p = add("exclude", cmd_exclude, "run both restrictions on every candidate module")
    p.add_argument("--dim", type=int, required=True, help="sphere dimension n")
    p.add_argument("--no-morimoto", action="store_true", help="skip the index-2 kernel filter")
    p.add_argument("--strategy", choices=["1", "2", "both"], default="both")
    p.add_argument("--s1-family", choices=[engine.GPQ, engine.MOD_P_CYCLIC], default=engine.GPQ,
                   help="subgroups admitted as H1, H2 in strategy 1")
    p.add_argument("--out", metavar="PATH", help="write the JSON report here")
    p = add("verify", cmd_verify, "re-check the certificates in a report")
    p.add_argument("--cert", metavar="PATH", required=True, help="JSON report from 'exclude'")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, FormatError, OSError, KeyError, RuntimeError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
