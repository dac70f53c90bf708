"""Exact complex character tables via the Burnside-Dixon algorithm.

Central characters are found as common eigenvectors of the class
multiplication matrices over GF(p) with ``p = 1 (mod exponent)``; each
character value is then lifted to Q(zeta_e) by recovering the eigenvalue
multiplicities of the representing matrix on every cyclic subgroup.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from sympy import isprime, primitive_root

from .cyclotomic import Cyclotomic, cyc_sum
from .perm import Group


class CharacterTableError(RuntimeError):
    pass


@dataclass
class CharacterTable:
    group: Group
    irreducibles: list[list[Cyclotomic]]
    prime: int | None = None
    source: str = "dixon"

    @property
    def degrees(self) -> list[int]:
        return [int(row[0].to_rational()) for row in self.irreducibles]

    @property
    def conductor(self) -> int:
        return self.group.exponent

    def __len__(self):
        return len(self.irreducibles)


def class_mult_coeffs(G: Group) -> np.ndarray:
    """``a[i, j, k] = #{(x, y) : x in C_i, y in C_j, xy = z}`` for a fixed ``z`` in ``C_k``."""
    k = len(G.classes)
    a = np.zeros((k, k, k), dtype=np.int64)
    mul, inv, cls = G.mul, G.inv, G.class_of
    for kk, ck in enumerate(G.classes):
        z = ck.rep_index
        for i, ci in enumerate(G.classes):
            for x in ci.members:
                # y = x^-1 z
                a[i, cls[mul[inv[x]][z]], kk] += 1
    return a


def dixon_prime(order: int, exponent: int) -> int:
    """Smallest prime ``p = 1 (mod exponent)`` with ``p > 2 sqrt(order)``."""
    p = exponent + 1
    while not (isprime(p) and p * p > 4 * order):
        p += exponent
    return p


def _nullspace_mod(A: np.ndarray, p: int) -> np.ndarray:
    """Basis (rows) of the right null space of ``A`` over GF(p)."""
    A = A.copy() % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        others = np.nonzero(A[:, c])[0]
        others = others[others != r]
        if others.size:
            A[others] = (A[others] - np.outer(A[others, c], A[r])) % p
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for i, pc in enumerate(pivots):
            basis[t, pc] = (-A[i, f]) % p
    return basis


def _split_spaces(mats: list[np.ndarray], p: int, dim: int) -> list[np.ndarray]:
    """Split GF(p)^dim into common eigenlines of the commuting ``mats``."""
    spaces = [np.eye(dim, dtype=np.int64)]
    for M in mats:
        if all(s.shape[0] == 1 for s in spaces):
            break
        nxt = []
        for B in spaces:
            if B.shape[0] == 1:
                nxt.append(B)
                continue
            # coordinates c with (M - lam) B^T c = 0
            MB = (M @ B.T) % p
            found = 0
            for lam in range(p):
                ns = _nullspace_mod((MB - lam * B.T) % p, p)
                if ns.shape[0]:
                    nxt.append((ns @ B) % p)
                    found += ns.shape[0]
                    if found == B.shape[0]:
                        break
            if found != B.shape[0]:
                raise CharacterTableError("class matrix not diagonalisable mod p")
        spaces = nxt
    return spaces


def compute_char_table(G: Group) -> CharacterTable:
    classes = G.classes
    k = len(classes)
    e = G.exponent
    n = G.order
    if k == 1:
        return CharacterTable(G, [[Cyclotomic.rational(e, 1)]], prime=None)
    p = dixon_prime(n, e)
    a = class_mult_coeffs(G)
    # (M_i)_{jk} = a_{ijk}; central characters w satisfy M_i w = w_i w
    mats = [a[i] % p for i in range(1, k)]
    spaces = _split_spaces(mats, p, k)
    if len(spaces) != k:
        raise CharacterTableError(f"found {len(spaces)} eigenlines for {k} classes")
    sizes = G.class_sizes
    inv_class = [G.class_of[G.inv[c.rep_index]] for c in classes]
    pmaps = G.all_power_maps
    z = pow(primitive_root(p), (p - 1) // e, p)
    rows = []
    for B in spaces:
        v = B[0]
        if v[0] == 0:
            raise CharacterTableError("central character vanishes at the identity")
        w = [int(x) * pow(int(v[0]), -1, p) % p for x in v]
        s = sum(w[j] * w[inv_class[j]] * pow(sizes[j], -1, p) for j in range(k)) % p
        d2 = n * pow(s, -1, p) % p
        deg = next((d for d in range(1, math.isqrt(n) + 1) if d * d % p == d2), None)
        if deg is None:
            raise CharacterTableError("no degree matches the central character")
        chi_mod = [w[j] * deg * pow(sizes[j], -1, p) % p for j in range(k)]
        rows.append(_lift_row(chi_mod, deg, classes, pmaps, e, z, p))
    rows.sort(key=lambda r: (int(r[0].to_rational()), tuple(x.sort_key() for x in r)))
    table = CharacterTable(G, rows, prime=p)
    if not verify_orthogonality(table):
        raise CharacterTableError("computed table fails orthogonality")
    return table


def _lift_row(chi_mod, deg, classes, pmaps, e, z, p) -> list[Cyclotomic]:
    out = []
    for j, c in enumerate(classes):
        o = c.element_order
        zo = pow(z, e // o, p)
        inv_o = pow(o, -1, p)
        terms = {}
        total = 0
        for l in range(o):
            # multiplicity of eigenvalue zeta_o^l on <g>
            acc = 0
            for t in range(o):
                acc += chi_mod[pmaps[j][t]] * pow(zo, (-l * t) % o, p)
            m = acc * inv_o % p
            if m > deg:
                raise CharacterTableError("eigenvalue multiplicity out of range")
            if m:
                terms[l * (e // o)] = m
                total += m
        if total != deg:
            raise CharacterTableError("eigenvalue multiplicities do not sum to the degree")
        out.append(Cyclotomic(e, terms))
    return out


def inner_product(G: Group, chi, psi) -> Cyclotomic:
    """``(1/|G|) sum_g chi(g) conj(psi(g))`` over class functions."""
    acc: dict = {}
    for size, x, y in zip(G.class_sizes, chi, psi):
        x.mul_terms(y.conj(), acc, size)
    return Cyclotomic(G.exponent, acc) / G.order


def verify_orthogonality(t: CharacterTable) -> bool:
    G = t.group
    X = t.irreducibles
    k = len(G.classes)
    if len(X) != k or any(len(r) != k for r in X):
        return False
    for i in range(k):
        for j in range(i, k):
            if inner_product(G, X[i], X[j]) != (1 if i == j else 0):
                return False
    sizes = G.class_sizes
    for a in range(k):
        for b in range(a, k):
            acc: dict = {}
            for row in X:
                row[a].mul_terms(row[b].conj(), acc)
            if Cyclotomic(G.exponent, acc) != (Fraction(G.order, sizes[a]) if a == b else 0):
                return False
    return True


def frobenius_schur(chi, G: Group) -> int:
    sq = G.power_map(2)
    nu = cyc_sum(G.exponent, [chi[c2] for c2 in sq], G.class_sizes) / G.order
    if not nu.is_rational() or nu.to_rational() not in (-1, 0, 1):
        raise CharacterTableError(f"Frobenius-Schur indicator {nu} not in {{-1, 0, 1}}")
    return int(nu.to_rational())
