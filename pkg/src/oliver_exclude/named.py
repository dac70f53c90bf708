"""Named group constructors and the group-spec mini language.

Grammar (factors joined by ``x`` form a direct product on disjoint points)::

    C<n> | S<n> | A<n> | D<2n> | Q<4m> | MC(m,k,r) | SL(2,3) | SL(2,5)
    | GL(2,3) | GL(3,2) | @<path>

``Q<4m>`` is the dicyclic group of order 4m (Q8 is the quaternion group) and
``MC(m,k,r)`` the metacyclic group ``C_m : C_k`` with ``b a b^-1 = a^r``.
"""
from __future__ import annotations

import itertools
import re
from pathlib import Path
from typing import Callable, Sequence

from .perm import DEFAULT_ORDER_CAP, Group, Perm, parse_perm


def _g(gens: Sequence[Perm], degree: int, name: str, cap: int) -> Group:
    return Group(gens, degree=degree, cap=cap, name=name)


def cyclic(n: int, cap: int = DEFAULT_ORDER_CAP) -> Group:
    if n < 1:
        raise ValueError("C<n> needs n >= 1")
    return _g([Perm(tuple((i + 1) % n for i in range(n)))], n, f"C{n}", cap)


def symmetric(n: int, cap: int = DEFAULT_ORDER_CAP) -> Group:
    if n < 1:
        raise ValueError("S<n> needs n >= 1")
    if n == 1:
        return _g([], 1, "S1", cap)
    gens = [Perm(tuple((i + 1) % n for i in range(n))), parse_perm("(1,2)", n)]
    return _g(gens, n, f"S{n}", cap)


def alternating(n: int, cap: int = DEFAULT_ORDER_CAP) -> Group:
    if n < 1:
        raise ValueError("A<n> needs n >= 1")
    gens = [parse_perm(f"(1,2,{k})", n) for k in range(3, n + 1)]
    return _g(gens, n, f"A{n}", cap)


def dihedral(order: int, cap: int = DEFAULT_ORDER_CAP) -> Group:
    """Dihedral group of the given (even) order, on the vertices of a polygon."""
    if order < 2 or order % 2:
        raise ValueError("D<2n> needs an even order >= 2")
    n = order // 2
    if n == 1:
        return _g([parse_perm("(1,2)", 2)], 2, "D2", cap)
    if n == 2:
        return _g([parse_perm("(1,2)", 4), parse_perm("(3,4)", 4)], 4, "D4", cap)
    rot = Perm(tuple((i + 1) % n for i in range(n)))
    refl = Perm(tuple((-i) % n for i in range(n)))
    return _g([rot, refl], n, f"D{order}", cap)


def from_multiplication(elements: Sequence, mul: Callable, name: str,
                        cap: int = DEFAULT_ORDER_CAP) -> Group:
    """Left regular permutation representation of an abstract finite group."""
    index = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    gens = [Perm(tuple(index[mul(g, x)] for x in elements)) for g in elements]
    return _g(gens, n, name, cap)


def dicyclic(order: int, cap: int = DEFAULT_ORDER_CAP) -> Group:
    """``<a, x | a^2m = 1, x^2 = a^m, x a x^-1 = a^-1>`` of order 4m."""
    if order < 4 or order % 4:
        raise ValueError("Q<4m> needs an order divisible by 4")
    m2 = order // 2
    m = m2 // 2
    elems = [(i, j) for j in range(2) for i in range(m2)]

    def mul(u, v):
        (i1, j1), (i2, j2) = u, v
        if j1 == 0:
            return ((i1 + i2) % m2, j2)
        if j2 == 0:
            return ((i1 - i2) % m2, 1)
        return ((i1 - i2 + m) % m2, 0)

    return from_multiplication(elems, mul, f"Q{order}", cap)


def metacyclic(m: int, k: int, r: int, cap: int = DEFAULT_ORDER_CAP) -> Group:
    if pow(r, k, m) != 1 % m:
        raise ValueError(f"r^k must be 1 mod m for MC({m},{k},{r})")
    elems = [(i, j) for j in range(k) for i in range(m)]

    def mul(u, v):
        (i1, j1), (i2, j2) = u, v
        return ((i1 + pow(r, j1, m) * i2) % m, (j1 + j2) % k)

    return from_multiplication(elems, mul, f"MC({m},{k},{r})", cap)


def _matrix_group(gens: list[tuple[tuple[int, ...], ...]], dim: int, q: int,
                  name: str, cap: int) -> Group:
    """Matrices over GF(q) (q prime) acting on the nonzero column vectors."""
    vecs = [v for v in itertools.product(range(q), repeat=dim) if any(v)]
    index = {v: i for i, v in enumerate(vecs)}

    def act(M, v):
        return tuple(sum(M[r][c] * v[c] for c in range(dim)) % q for r in range(dim))

    perms = [Perm(tuple(index[act(M, v)] for v in vecs)) for M in gens]
    return _g(perms, len(vecs), name, cap)


def _elementary(dim: int, i: int, j: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(1 if r == c or (r, c) == (i, j) else 0 for c in range(dim))
                 for r in range(dim))


def special_linear(dim: int, q: int, cap: int = DEFAULT_ORDER_CAP) -> Group:
    gens = [_elementary(dim, i, j) for i in range(dim) for j in range(dim) if i != j]
    return _matrix_group(gens, dim, q, f"SL({dim},{q})", cap)


def general_linear(dim: int, q: int, cap: int = DEFAULT_ORDER_CAP) -> Group:
    gens = [_elementary(dim, i, j) for i in range(dim) for j in range(dim) if i != j]
    if q > 2:
        from sympy import primitive_root
        w = primitive_root(q)
        gens.append(tuple(tuple((w if r == c == 0 else int(r == c)) for c in range(dim))
                          for r in range(dim)))
    return _matrix_group(gens, dim, q, f"GL({dim},{q})", cap)


def direct_product(groups: Sequence[Group], name: str | None = None,
                   cap: int = DEFAULT_ORDER_CAP) -> Group:
    degree = sum(G.degree for G in groups)
    gens = []
    offset = 0
    for G in groups:
        for g in G.generators:
            img = list(range(degree))
            for x, y in enumerate(g.images):
                img[offset + x] = offset + y
            gens.append(Perm(tuple(img)))
        offset += G.degree
    return _g(gens, degree, name or "x".join(G.name or "?" for G in groups), cap)


def read_group_file(path: str | Path, cap: int = DEFAULT_ORDER_CAP) -> Group:
    """Read ``degree: <d>`` followed by ``gen: <cycle notation>`` lines."""
    degree = None
    gens_text = []
    name = None
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, val = line.partition(":")
        if not sep:
            raise ValueError(f"bad line in group file: {raw!r}")
        key, val = key.strip().lower(), val.strip()
        if key == "degree":
            degree = int(val)
        elif key == "gen":
            gens_text.append(val)
        elif key == "name":
            name = val
        else:
            raise ValueError(f"unknown key {key!r} in group file")
    if degree is None:
        raise ValueError("group file lacks a 'degree:' line")
    gens = [parse_perm(t, degree) for t in gens_text]
    return _g(gens, degree, name or Path(path).stem, cap)


def write_group_file(G: Group, path: str | Path) -> None:
    lines = [f"degree: {G.degree}"] + [f"gen: {g}" for g in G.generators]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


_ATOMS = [
    (re.compile(r"C(\d+)$"), lambda m, cap: cyclic(int(m[1]), cap)),
    (re.compile(r"S(\d+)$"), lambda m, cap: symmetric(int(m[1]), cap)),
    (re.compile(r"A(\d+)$"), lambda m, cap: alternating(int(m[1]), cap)),
    (re.compile(r"D(\d+)$"), lambda m, cap: dihedral(int(m[1]), cap)),
    (re.compile(r"Q(\d+)$"), lambda m, cap: dicyclic(int(m[1]), cap)),
    (re.compile(r"MC\((\d+),(\d+),(\d+)\)$"),
     lambda m, cap: metacyclic(int(m[1]), int(m[2]), int(m[3]), cap)),
    (re.compile(r"SL\(2,(3|5)\)$"), lambda m, cap: special_linear(2, int(m[1]), cap)),
    (re.compile(r"GL\(2,3\)$"), lambda m, cap: general_linear(2, 3, cap)),
    (re.compile(r"GL\(3,2\)$"), lambda m, cap: general_linear(3, 2, cap)),
]


def _split_factors(text: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "xX" and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return parts


def parse_group_spec(text: str, cap: int = DEFAULT_ORDER_CAP) -> Group:
    text = text.strip()
    if text.startswith("@"):
        return read_group_file(text[1:], cap)
    compact = text.replace(" ", "")
    factors = []
    for part in _split_factors(compact):
        for pat, build in _ATOMS:
            m = pat.match(part)
            if m:
                factors.append(build(m, cap))
                break
        else:
            raise ValueError(f"unknown group name {part!r} in {text!r}")
    if len(factors) == 1:
        G = factors[0]
        G.name = compact
        return G
    return direct_product(factors, compact, cap)
