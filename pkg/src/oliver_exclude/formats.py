"""Interchange formats: character-table text files and JSON reports.

Character-table file::

    conductor: 30
    classes: 15
    class: 1 ()
    class: 15 (1,2)(3,4)
    ...
    1, 1, 1, ...
    3, -1, 0, z+z^2, ...

Values are polynomials in ``z``, a primitive ``conductor``-th root of unity.
"""
from __future__ import annotations

import json
from pathlib import Path

from .chartab import CharacterTable, CharacterTableError, verify_orthogonality
from .cyclotomic import parse_cyclotomic
from .perm import Group, parse_perm


class FormatError(ValueError):
    pass


def export_chartab(t: CharacterTable) -> str:
    G = t.group
    lines = [f"conductor: {t.conductor}", f"classes: {len(G.classes)}"]
    lines += [f"class: {c.size} {c.representative}" for c in G.classes]
    lines += [", ".join(str(v) for v in row) for row in t.irreducibles]
    return "\n".join(lines) + "\n"


def write_chartab(t: CharacterTable, path: str | Path) -> None:
    Path(path).write_text(export_chartab(t), encoding="utf-8")


def _header(line: str, key: str) -> str:
    k, sep, v = line.partition(":")
    if not sep or k.strip().lower() != key:
        raise FormatError(f"expected '{key}:' line, got {line!r}")
    return v.strip()


def parse_chartab(text: str, G: Group) -> CharacterTable:
    """Read a table for ``G``; columns are matched to ``G``'s classes by representative."""
    lines = [l.split("#", 1)[0].strip() for l in text.splitlines()]
    lines = [l for l in lines if l]
    try:
        e = int(_header(lines[0], "conductor"))
        k = int(_header(lines[1], "classes"))
    except (IndexError, ValueError) as exc:
        raise FormatError(f"bad header: {exc}") from exc
    if k != len(G.classes):
        raise FormatError(f"file has {k} classes, group has {len(G.classes)}")
    if e < 1 or G.exponent % e:
        raise FormatError(f"conductor {e} does not divide the exponent {G.exponent}")
    if len(lines) != 2 + 2 * k:
        raise FormatError(f"expected {k} class lines and {k} character lines")

    column = []
    for line in lines[2:2 + k]:
        body = _header(line, "class")
        size_text, _, rep_text = body.partition(" ")
        try:
            rep = parse_perm(rep_text.strip() or "()", G.degree)
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
        if rep.images not in G.index:
            raise FormatError(f"representative {rep} is not in the group")
        c = G.class_of[G.index[rep.images]]
        if int(size_text) != G.class_sizes[c]:
            raise FormatError(f"class of {rep} has size {G.class_sizes[c]}, file says {size_text}")
        column.append(c)
    if sorted(column) != list(range(k)):
        raise FormatError("class lines do not match the group's classes one to one")

    rows = []
    for line in lines[2 + k:]:
        cells = [s.strip() for s in line.split(",")]
        if len(cells) != k:
            raise FormatError(f"character line has {len(cells)} values, expected {k}")
        vals = [None] * k
        for c, cell in zip(column, cells):
            try:
                v = parse_cyclotomic(cell, e)
            except ValueError as exc:
                raise FormatError(str(exc)) from exc
            vals[c] = v.lift(G.exponent)
        rows.append(vals)
    rows.sort(key=lambda r: (int(r[0].to_rational()), tuple(x.sort_key() for x in r)))
    t = CharacterTable(G, rows, prime=None, source="import")
    if not verify_orthogonality(t):
        raise CharacterTableError("imported table fails orthogonality")
    return t


def import_chartab(path: str | Path, G: Group) -> CharacterTable:
    return parse_chartab(Path(path).read_text(encoding="utf-8"), G)


def dump_report(report: dict) -> str:
    """Byte-deterministic JSON text (insertion-ordered keys, fixed indentation)."""
    return json.dumps(report, indent=2, ensure_ascii=True) + "\n"


def write_report(report: dict, path: str | Path) -> None:
    Path(path).write_text(dump_report(report), encoding="utf-8")


def load_report(path: str | Path) -> dict:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"not a JSON report: {exc}") from exc
    if not isinstance(data, dict) or "candidates" not in data:
        raise FormatError("report lacks a 'candidates' list")
    return data
