"""Polynomials over GF(2)/GF(4), the ring GF(q)[X]/(X^n - 1), and word transforms.

A word of length n is a 1-D ``numpy.uint8`` array; symbol ``c[i]`` is the
coefficient of X^i in the associated polynomial.  Positions are 0-indexed
everywhere except in :func:`subword`, which takes the 1-indexed bounds used
in the literature.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .gfcore import GF4_INV, GF4_MUL

NEG_INF = float("-inf")

_MUL = {
    2: ((0, 0), (0, 1)),
    4: GF4_MUL,
}
_INV = {2: (None, 1), 4: GF4_INV}
_SYMBOLS4 = ("0", "1", "w", "w+1")


class Poly:
    """Immutable polynomial over GF(q), coefficients in ascending degree."""

    __slots__ = ("q", "coeffs")

    def __init__(self, coeffs: Iterable[int] = (), q: int = 2):
        if q not in _MUL:
            raise ValueError(f"polynomials are supported over GF(2) and GF(4), got q={q}")
        cs = [int(c) for c in coeffs]
        for c in cs:
            if not 0 <= c < q:
                raise ValueError(f"coefficient {c} is not an element of GF({q})")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # constructors

    @classmethod
    def monomial(cls, e: int, q: int = 2, c: int = 1) -> Poly:
        return cls([0] * e + [c], q)

    @classmethod
    def one(cls, q: int = 2) -> Poly:
        return cls([1], q)

    @classmethod
    def from_word(cls, w, q: int = 2) -> Poly:
        return cls(np.asarray(w).tolist(), q)

    @classmethod
    def from_bits(cls, mask: int) -> Poly:
        return cls([(mask >> i) & 1 for i in range(mask.bit_length())], 2)

    @classmethod
    def x_n_minus_1(cls, n: int, q: int = 2) -> Poly:
        # -1 == +1 in characteristic 2
        return cls([1] + [0] * (n - 1) + [1], q)

    # basic properties

    @property
    def degree(self):
        """Degree, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly([other], self.q)
        return isinstance(other, Poly) and self.q == other.q and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.q, self.coeffs))

    def __repr__(self):
        return f"Poly({list(self.coeffs)}, q={self.q})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            cs = _SYMBOLS4[c] if self.q == 4 else str(c)
            mono = "" if i == 0 else "x" if i == 1 else f"x^{i}"
            if not mono:
                terms.append(cs)
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"({cs}){mono}" if "+" in cs else f"{cs}{mono}")
        return " + ".join(terms)

    # arithmetic

    def _same(self, other) -> Poly:
        if isinstance(other, int):
            return Poly([other], self.q)
        if not isinstance(other, Poly):
            return NotImplemented
        if other.q != self.q:
            raise ValueError("polynomials over different fields")
        return other

    def __add__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] ^= c
        return Poly(out, self.q)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def scale(self, c: int) -> Poly:
        row = _MUL[self.q][c]
        return Poly([row[a] for a in self.coeffs], self.q)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._same(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Poly([], self.q)
        mul = _MUL[self.q]
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            row = mul[a]
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] ^= row[b]
        return Poly(out, self.q)

    __rmul__ = __mul__

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def __pow__(self, e: int):
        r = Poly.one(self.q)
        base = self
        while e:
            if e & 1:
                r = r * base
            base = base * base
            e >>= 1
        return r

    def __call__(self, x: int) -> int:
        """Evaluate at an element of GF(q)."""
        mul = _MUL[self.q]
        r = 0
        for c in reversed(self.coeffs):
            r = mul[r][x] ^ c
        return r

    def shift(self, s: int) -> Poly:
        """Multiply by X^s (s >= 0)."""
        if not self.coeffs:
            return self
        return Poly([0] * s + list(self.coeffs), self.q)

    def monic(self) -> Poly:
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic associate")
        return self.scale(_INV[self.q][self.lead])

    def divides(self, other: Poly) -> bool:
        return poly_divmod(other, self)[1].is_zero()

    def reciprocal(self) -> Poly:
        """X^deg c * c(1/X): the coefficient sequence reversed."""
        return reciprocal(self)

    def is_self_reciprocal(self) -> bool:
        return self_reciprocal(self)

    def to_word(self, n: int) -> np.ndarray:
        if len(self.coeffs) > n:
            raise ValueError(f"degree {self.degree} does not fit a word of length {n}")
        w = np.zeros(n, dtype=np.uint8)
        w[: len(self.coeffs)] = self.coeffs
        return w

    def to_list(self) -> list[int]:
        return list(self.coeffs)


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Long division: a = quot * b + rem with deg rem < deg b."""
    if a.q != b.q:
        raise ValueError("polynomials over different fields")
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    q = a.q
    mul = _MUL[q]
    inv_lead = _INV[q][b.lead]
    db = len(b.coeffs) - 1
    rem = list(a.coeffs)
    if len(rem) <= db:
        return Poly([], q), a
    quot = [0] * (len(rem) - db)
    bc = b.coeffs
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        f = mul[c][inv_lead]
        quot[i - db] = f
        row = mul[f]
        for j in range(db + 1):
            if bc[j]:
                rem[i - db + j] ^= row[bc[j]]
    return Poly(quot, q), Poly(rem[:db], q)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_lcm(a: Poly, b: Poly) -> Poly:
    return ((a * b) // poly_gcd(a, b)).monic()


def reciprocal(c: Poly) -> Poly:
    return Poly(reversed(c.coeffs), c.q)


def self_reciprocal(c: Poly) -> bool:
    """c(0) != 0 and c equals its reciprocal divided by c(0)."""
    if c.is_zero() or c[0] == 0:
        return False
    return c == reciprocal(c).scale(_INV[c.q][c[0]])


# quotient ring GF(q)[X]/(X^n - 1)

def ring_reduce(a: Poly, n: int) -> Poly:
    """Reduce modulo X^n - 1 by folding exponents mod n."""
    if len(a.coeffs) <= n:
        return a
    out = [0] * n
    for i, c in enumerate(a.coeffs):
        out[i % n] ^= c
    return Poly(out, a.q)


def quotient_mul(a: Poly, b: Poly, n: int) -> Poly:
    """(a * b) mod (X^n - 1)."""
    if a.q != b.q:
        raise ValueError("polynomials over different fields")
    mul = _MUL[a.q]
    out = [0] * n
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        row = mul[x]
        for j, y in enumerate(b.coeffs):
            if y:
                out[(i + j) % n] ^= row[y]
    return Poly(out, a.q)


def ring_reflect(c: Poly, n: int) -> Poly:
    """X^(n-1) c(1/X) mod (X^n - 1), i.e. the word reversed."""
    if c.degree >= n:
        c = ring_reduce(c, n)
    out = [0] * n
    for i, v in enumerate(c.coeffs):
        out[n - 1 - i] = v
    return Poly(out, c.q)


def all_one(n: int, q: int = 2) -> Poly:
    """(X^n - 1)/(X - 1), the polynomial of the all-one word."""
    return Poly([1] * n, q)


def reflect_within(p: Poly, k: int) -> Poly:
    """X^(k-1) p(1/X) for deg p < k (as an honest polynomial)."""
    if len(p.coeffs) > k:
        raise ValueError(f"degree {p.degree} too large to reflect within {k} coefficients")
    cs = list(p.coeffs) + [0] * (k - len(p.coeffs))
    return Poly(cs[::-1], p.q)


def x_pow_mod(s: int, m: Poly) -> Poly:
    """X^s mod m."""
    r = Poly.one(m.q) % m
    x = Poly([0, 1], m.q) % m
    while s:
        if s & 1:
            r = (r * x) % m
        x = (x * x) % m
        s >>= 1
    return r


# word transforms

def as_word(w) -> np.ndarray:
    return np.asarray(w, dtype=np.uint8)


def shift(w, i: int) -> np.ndarray:
    """sigma^i: cyclic shift to the right i times."""
    return np.roll(as_word(w), i)


def reverse(w) -> np.ndarray:
    return as_word(w)[::-1].copy()


def complement(w) -> np.ndarray:
    """x -> x + 1 symbolwise (A<->T, C<->G over GF(4))."""
    return as_word(w) ^ 1


def reverse_complement(w) -> np.ndarray:
    return complement(reverse(w))


def flip_prefix(w, length: int, q: int = 2) -> np.ndarray:
    """Add 1 (q=2) or w (q=4) to the first ``length`` symbols."""
    w = as_word(w).copy()
    if not 0 <= length <= len(w):
        raise IndexError(f"prefix length {length} out of range for length {len(w)}")
    w[:length] ^= 1 if q == 2 else 2
    return w


def subword(w, i: int, j: int) -> np.ndarray:
    """1-indexed w[i, j]; when i > j the segment is read backwards."""
    w = as_word(w)
    n = len(w)
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"subword bounds ({i}, {j}) outside 1..{n}")
    if i <= j:
        return w[i - 1 : j].copy()
    return w[j - 1 : i][::-1].copy()


def word_transform(w, kind: str, *args, q: int = 2) -> np.ndarray:
    ops = {
        "shift": lambda: shift(w, *args),
        "reverse": lambda: reverse(w),
        "complement": lambda: complement(w),
        "reverse_complement": lambda: reverse_complement(w),
        "flip_prefix": lambda: flip_prefix(w, *args, q=q),
        "subword": lambda: subword(w, *args),
    }
    if kind not in ops:
        raise ValueError(f"unknown transform {kind!r}")
    if kind == "shift" and not 0 <= args[0] < len(w):
        raise IndexError(f"shift {args[0]} outside 0..{len(w) - 1}")
    return ops[kind]()


# metrics

def distance(a, b) -> int:
    a, b = as_word(a), as_word(b)
    if a.shape != b.shape:
        raise ValueError("length mismatch")
    return int(np.count_nonzero(a != b))


def weight(a) -> int:
    return int(np.count_nonzero(as_word(a)))


def weight_halves(a) -> tuple[int, int]:
    """(wt1, wt2): weights of the first (n+1)/2 and last (n-1)/2 positions."""
    a = as_word(a)
    n = len(a)
    if n % 2 == 0:
        raise ValueError("the split weights are defined for odd lengths")
    h = (n + 1) // 2
    return int(np.count_nonzero(a[:h])), int(np.count_nonzero(a[h:]))


def gc_count(a) -> int:
    """Number of symbols in {w, w+1} (C or G)."""
    if isinstance(a, str):
        return sum(ch in "CGcg" for ch in a)
    return int(np.count_nonzero(as_word(a) >= 2))


def metrics(a, b) -> dict:
    out = {"distance": distance(a, b), "wt": weight(a), "gc_count": gc_count(a)}
    if len(as_word(a)) % 2:
        out["wt1"], out["wt2"] = weight_halves(a)
    return out


def words_to_polys(words: Sequence, q: int) -> list[Poly]:
    return [Poly.from_word(w, q) for w in words]
