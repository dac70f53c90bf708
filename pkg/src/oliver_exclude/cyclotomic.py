"""Exact arithmetic in the cyclotomic field Q(zeta_e).

Values are held as sparse polynomials in ``z = exp(2 pi i / e)`` modulo
``z**e - 1`` (cheap products of sums of roots of unity) and reduced modulo
the e-th cyclotomic polynomial only when a canonical form is needed.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from sympy import Poly, cyclotomic_poly, symbols

_x = symbols("x")


@lru_cache(maxsize=None)
def _reduction_table(e: int) -> tuple[tuple[int, ...], ...]:
    """Row ``l`` holds the power-basis coefficients of ``x**l mod Phi_e``."""
    phi = [int(c) for c in reversed(Poly(cyclotomic_poly(e, _x), _x).all_coeffs())]
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(e):
        rows.append(tuple(cur))
        # multiply by x, then fold the overflowing x**deg using monic Phi_e
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi[i] for i, c in enumerate(cur)]
    return tuple(rows)


def _coerce(v):
    t = type(v)
    if t is int:
        return v
    if t is Fraction:
        return v.numerator if v.denominator == 1 else v
    if isinstance(v, Rational):
        return _coerce(Fraction(v))
    raise TypeError(f"not a rational coefficient: {v!r}")


class Cyclotomic:
    """Element of Q(zeta_e); equality and hashing use the reduced form."""

    __slots__ = ("conductor", "terms", "_canon")

    def __init__(self, conductor: int, terms: dict[int, int | Fraction] | None = None):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        self.conductor = conductor
        clean: dict[int, int | Fraction] = {}
        for k, v in (terms or {}).items():
            k %= conductor
            v = _coerce(clean.get(k, 0) + v)
            if v:
                clean[k] = v
            else:
                clean.pop(k, None)
        self.terms = clean
        self._canon = None

    @classmethod
    def rational(cls, conductor: int, value) -> Cyclotomic:
        return cls(conductor, {0: _coerce(value)} if value else {})

    @classmethod
    def root(cls, conductor: int, k: int = 1) -> Cyclotomic:
        return cls(conductor, {k: 1})

    # arithmetic ----------------------------------------------------------
    def _wrap(self, other) -> Cyclotomic:
        if isinstance(other, Cyclotomic):
            if other.conductor != self.conductor:
                raise ValueError(f"conductor mismatch {self.conductor} vs {other.conductor}")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(self.conductor, other)
        return NotImplemented

    def __add__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return Cyclotomic(self.conductor, t)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.conductor, {k: v * other for k, v in self.terms.items()})
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        e = self.conductor
        t: dict[int, int | Fraction] = {}
        for a, u in self.terms.items():
            for b, v in other.terms.items():
                k = (a + b) % e
                t[k] = t.get(k, 0) + u * v
        return Cyclotomic(e, t)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.conductor,
                              {k: Fraction(v) / other for k, v in self.terms.items()})
        return NotImplemented

    def mul_terms(self, other: Cyclotomic, acc: dict, weight=1) -> None:
        """Accumulate ``weight * self * other`` into the raw term dict ``acc``."""
        e = self.conductor
        for a, u in self.terms.items():
            uw = u * weight
            for b, v in other.terms.items():
                k = (a + b) % e
                acc[k] = acc.get(k, 0) + uw * v

    def conj(self) -> Cyclotomic:
        return Cyclotomic(self.conductor, {-k: v for k, v in self.terms.items()})

    def galois(self, k: int) -> Cyclotomic:
        """Image under ``z -> z**k`` (an automorphism when gcd(k, e) = 1)."""
        return Cyclotomic(self.conductor, {a * k: v for a, v in self.terms.items()})

    def lift(self, conductor: int) -> Cyclotomic:
        if conductor % self.conductor:
            raise ValueError(f"{self.conductor} does not divide {conductor}")
        s = conductor // self.conductor
        return Cyclotomic(conductor, {a * s: v for a, v in self.terms.items()})

    # canonical form ------------------------------------------------------
    def canonical(self) -> tuple:
        if self._canon is None:
            rows = _reduction_table(self.conductor)
            out = [0] * len(rows[0])
            for k, v in self.terms.items():
                for i, c in enumerate(rows[k]):
                    if c:
                        out[i] += c * v
            self._canon = tuple(_coerce(c) for c in out)
        return self._canon

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            c = self.canonical()
            return c[0] == other and not any(c[1:])
        if isinstance(other, Cyclotomic):
            if other.conductor != self.conductor:
                return NotImplemented
            return self.canonical() == other.canonical()
        return NotImplemented

    def __hash__(self):
        c = self.canonical()
        if not any(c[1:]):
            return hash(c[0])
        return hash((self.conductor, c))

    def __bool__(self):
        return any(self.canonical())

    def is_rational(self) -> bool:
        return not any(self.canonical()[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.canonical()[0])

    def is_real(self) -> bool:
        return self == self.conj()

    def sort_key(self) -> tuple:
        return self.canonical()

    def __str__(self):
        return format_poly(self.canonical())

    def __repr__(self):
        return f"Cyclotomic({self.conductor}, {self})"


def cyc_sum(conductor: int, values, weights=None) -> Cyclotomic:
    """``sum(w * v)`` built in one pass."""
    acc: dict[int, int | Fraction] = {}
    if weights is None:
        weights = [1] * len(values)
    for v, w in zip(values, weights):
        if not w:
            continue
        for k, c in v.terms.items():
            acc[k] = acc.get(k, 0) + w * c
    return Cyclotomic(conductor, acc)


def format_poly(coeffs) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        s += sign + body
    return s


_TERM_RE = re.compile(r"([+-]?)\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(z(?:\s*\^\s*(\d+))?)?")


def parse_cyclotomic(text: str, conductor: int) -> Cyclotomic:
    """Parse a polynomial in ``z`` such as ``"z+z^2"``, ``"-1"`` or ``"3*z^4"``."""
    s = re.sub(r"\s*([-+*^/])\s*", r"\1", text.strip())
    if not s or re.search(r"\s", s):
        raise ValueError(f"cannot parse cyclotomic value {text!r}")
    terms: dict[int, Fraction] = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse cyclotomic value {text!r}")
        if pos > 0 and not m.group(1):
            raise ValueError(f"missing operator in {text!r}")
        coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(1) == "-":
            coeff = -coeff
        k = 0
        if m.group(3):
            k = int(m.group(4)) if m.group(4) else 1
        terms[k] = terms.get(k, 0) + coeff
        pos = m.end()
    return Cyclotomic(conductor, terms)
