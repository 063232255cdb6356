"""Arithmetic in GF(2), GF(4) and their extension fields.

Field elements are plain integers.  GF(4) uses the 2-bit code
0, 1, 2, 3 for 0, 1, w, w+1 where w is a root of x^2 + x + 1, so addition is
bitwise xor.  An extension field GF(q^m) is realised as GF(2^N) with N = m
(q = 2) or N = 2m (q = 4) over a fixed primitive binary modulus; GF(4) sits
inside it as {0} plus the subgroup of order 3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .polyring import Poly

# GF(4) tables, modulus x^2 + x + 1, w <-> 2.
GF4_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)
GF4_INV = (None, 1, 3, 2)

DNA_ALPHABET = "ATCG"  # index = GF(4) code
_DNA_INDEX = {ch: i for i, ch in enumerate(DNA_ALPHABET)}

# One primitive binary polynomial per degree, as bitmasks (bit i <-> x^i).
# Taken from the standard tables of primitive trinomials/pentanomials.
PRIMITIVE_BINARY = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,                      # x^3 + x + 1
    4: 0b10011,                     # x^4 + x + 1
    5: 0b100101,                    # x^5 + x^2 + 1
    6: 0b1000011,                   # x^6 + x + 1
    7: 0b10001001,                  # x^7 + x^3 + 1
    8: 0b100011101,                 # x^8 + x^4 + x^3 + x^2 + 1
    9: (1 << 9) | (1 << 4) | 1,
    10: (1 << 10) | (1 << 3) | 1,
    11: (1 << 11) | (1 << 2) | 1,
    12: (1 << 12) | (1 << 6) | (1 << 4) | (1 << 1) | 1,
    13: (1 << 13) | (1 << 4) | (1 << 3) | (1 << 1) | 1,
    14: (1 << 14) | (1 << 10) | (1 << 6) | (1 << 1) | 1,
    15: (1 << 15) | (1 << 1) | 1,
    16: (1 << 16) | (1 << 12) | (1 << 3) | (1 << 1) | 1,
    17: (1 << 17) | (1 << 3) | 1,
    18: (1 << 18) | (1 << 7) | 1,
    19: (1 << 19) | (1 << 5) | (1 << 2) | (1 << 1) | 1,
    20: (1 << 20) | (1 << 3) | 1,
    21: (1 << 21) | (1 << 2) | 1,
    22: (1 << 22) | (1 << 1) | 1,
    23: (1 << 23) | (1 << 5) | 1,
    24: (1 << 24) | (1 << 7) | (1 << 2) | (1 << 1) | 1,
    25: (1 << 25) | (1 << 3) | 1,
    26: (1 << 26) | (1 << 6) | (1 << 2) | (1 << 1) | 1,
    27: (1 << 27) | (1 << 5) | (1 << 2) | (1 << 1) | 1,
    28: (1 << 28) | (1 << 3) | 1,
    29: (1 << 29) | (1 << 2) | 1,
    30: (1 << 30) | (1 << 23) | (1 << 2) | (1 << 1) | 1,
    31: (1 << 31) | (1 << 3) | 1,
    32: (1 << 32) | (1 << 22) | (1 << 2) | (1 << 1) | 1,
}

MAX_EXT_DEGREE = 16
_TABLE_LIMIT = 1 << 16


def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Trial-division factorisation, returned as ((p, e), ...)."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def totient(n: int) -> int:
    """Euler's totient."""
    r = n
    for p, _ in factorize(n):
        r -= r // p
    return r


def gf4_mul(a: int, b: int) -> int:
    return GF4_MUL[a][b]


def gf4_inv(a: int) -> int:
    if a == 0:
        raise ZeroDivisionError("inverse of zero in GF(4)")
    return GF4_INV[a]


class BaseField:
    """GF(2) or GF(4) with elements encoded as small integers."""

    def __init__(self, q: int):
        if q not in (2, 4):
            raise ValueError(f"base field must be GF(2) or GF(4), got q={q}")
        self.q = q
        self.order = q

    def __repr__(self):
        return f"GF({self.q})"

    def __eq__(self, other):
        return isinstance(other, BaseField) and other.q == self.q

    def __hash__(self):
        return hash(("base", self.q))

    def __call__(self, value: int) -> FieldElem:
        return FieldElem(self, value)

    def add(self, a, b):
        return a ^ b

    def mul(self, a, b):
        return GF4_MUL[a][b] if self.q == 4 else a & b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in GF({self.q})")
        return GF4_INV[a] if self.q == 4 else 1

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        if self.q == 2:
            return 1
        # nonzero GF(4) elements form a cyclic group of order 3 generated by w = 2
        log = {1: 0, 2: 1, 3: 2}[a]
        return (1, 2, 3)[(log * e) % 3]

    def elements(self):
        return range(self.q)


GF2 = BaseField(2)
GF4 = BaseField(4)


def base_field(q: int) -> BaseField:
    return GF2 if q == 2 else GF4 if q == 4 else BaseField(q)


def _clmul_mod(a: int, b: int, poly: int, nbits: int) -> int:
    r = 0
    top = 1 << nbits
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= poly
    return r


@dataclass(frozen=True, eq=False)
class ExtField:
    """GF(q^m) for q in {2, 4}, backed by GF(2^N) arithmetic.

    ``modulus`` is the minimal polynomial over GF(q) of the generator
    ``x`` (element code 2); it is primitive, so discrete logs are taken with
    respect to that generator.
    """

    q: int
    m: int
    bits: int = field(init=False)
    binary_modulus: int = field(init=False)
    order: int = field(init=False)
    factors: tuple = field(init=False)

    def __post_init__(self):
        if self.q not in (2, 4):
            raise ValueError(f"extension fields are built over GF(2) or GF(4), got q={self.q}")
        if not 1 <= self.m <= MAX_EXT_DEGREE:
            raise ValueError(f"extension degree m={self.m} outside supported range 1..{MAX_EXT_DEGREE}")
        bits = self.m if self.q == 2 else 2 * self.m
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "binary_modulus", PRIMITIVE_BINARY[bits])
        object.__setattr__(self, "order", 1 << bits)
        object.__setattr__(self, "factors", factorize((1 << bits) - 1))

    def __repr__(self):
        return f"GF({self.q}^{self.m})"

    def __eq__(self, other):
        return isinstance(other, ExtField) and (other.q, other.m) == (self.q, self.m)

    def __hash__(self):
        return hash(("ext", self.q, self.m))

    def __call__(self, value: int) -> FieldElem:
        return FieldElem(self, value)

    @property
    def generator(self) -> int:
        # x mod the modulus; for bits == 1 the field is GF(2) and x == 1
        return 1 if self.bits == 1 else 2

    @cached_property
    def _tables(self):
        if self.order > _TABLE_LIMIT:
            return None
        n = self.order - 1
        exp = [0] * (2 * n)
        log = [0] * self.order
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = _clmul_mod(x, self.generator, self.binary_modulus, self.bits)
        for i in range(n, 2 * n):
            exp[i] = exp[i - n]
        return exp, log

    def add(self, a, b):
        return a ^ b

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        t = self._tables
        if t is not None:
            exp, log = t
            return exp[log[a] + log[b]]
        return _clmul_mod(a, b, self.binary_modulus, self.bits)

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        n = self.order - 1
        e %= n
        t = self._tables
        if t is not None:
            exp, log = t
            return exp[(log[a] * e) % n]
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self!r}")
        return self.pow(a, self.order - 2)

    def log(self, a: int) -> int:
        """Discrete log of a nonzero element w.r.t. the generator."""
        if a == 0:
            raise ValueError("log of zero")
        t = self._tables
        if t is not None:
            return t[1][a]
        # only reached for huge fields; fine for occasional use
        g, x = self.generator, 1
        for i in range(self.order - 1):
            if x == a:
                return i
            x = self.mul(x, g)
        raise AssertionError("unreachable: generator is primitive")

    def elements(self):
        return range(self.order)

    # GF(q) <-> GF(2^N) embedding

    @cached_property
    def _omega(self) -> int:
        w = self.pow(self.generator, (self.order - 1) // 3)
        assert self.mul(w, w) == w ^ 1
        return w

    def embed(self, c: int) -> int:
        """Image of a GF(q) code inside this field."""
        if self.q == 2 or c < 2:
            return c
        w = self._omega
        return w if c == 2 else w ^ 1

    def project(self, a: int) -> int:
        """Inverse of embed; raises if ``a`` is not in the base field."""
        if a in (0, 1):
            return a
        if self.q == 4:
            w = self._omega
            if a == w:
                return 2
            if a == w ^ 1:
                return 3
        raise ValueError(f"element {a} of {self!r} is not in GF({self.q})")

    def eval_poly(self, p: Poly, x: int) -> int:
        """Evaluate a GF(q) polynomial at an element of this field (Horner)."""
        if p.q != self.q:
            raise ValueError("polynomial and field have different base fields")
        r = 0
        for c in reversed(p.coeffs):
            r = self.mul(r, x) ^ self.embed(c)
        return r

    @cached_property
    def modulus(self) -> Poly:
        return _minpoly(self, self.generator)


@dataclass(frozen=True)
class FieldElem:
    field: object
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.order:
            raise ValueError(f"value {self.value} outside {self.field!r}")

    def _check(self, other):
        if not isinstance(other, FieldElem) or other.field != self.field:
            raise ValueError("field mismatch")

    def __add__(self, other):
        self._check(other)
        return FieldElem(self.field, self.field.add(self.value, other.value))

    __sub__ = __add__

    def __mul__(self, other):
        self._check(other)
        return FieldElem(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other):
        self._check(other)
        return FieldElem(self.field, self.field.mul(self.value, self.field.inv(other.value)))

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return FieldElem(self.field, self.field.inv(self.value))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.field!r}({self.value})"


def field_arith(a: FieldElem, b: FieldElem | int | None, kind: str) -> FieldElem:
    """Dispatch ``add``/``mul`` on two elements, ``inv`` on ``a`` and ``pow`` with integer ``b``."""
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "inv":
        return a.inverse()
    if kind == "pow":
        return a ** int(b)
    raise ValueError(f"unknown operation {kind!r}")


def dna_encode(word) -> str:
    """GF(4) codes to DNA letters (0->A, 1->T, w->C, w+1->G)."""
    try:
        return "".join(DNA_ALPHABET[int(s)] for s in word)
    except IndexError:
        raise ValueError("symbol outside GF(4)") from None


def dna_decode(text: str) -> list[int]:
    try:
        return [_DNA_INDEX[ch] for ch in text.upper()]
    except KeyError as exc:
        raise ValueError(f"not a DNA letter: {exc.args[0]!r}") from None


def dna_map(w, direction: str = "auto"):
    """Map between GF(4) words and DNA strings.

    ``direction`` is ``"to_dna"``, ``"from_dna"`` or ``"auto"`` (strings go to
    GF(4), anything else goes to DNA).
    """
    if direction == "auto":
        direction = "from_dna" if isinstance(w, str) else "to_dna"
    if direction == "to_dna":
        return dna_encode(w)
    if direction == "from_dna":
        return dna_decode(w)
    raise ValueError(f"unknown direction {direction!r}")


def ext_field(q: int, m: int) -> ExtField:
    return _ext_cache(q, m)


_EXT = {}


def _ext_cache(q, m):
    key = (q, m)
    if key not in _EXT:
        _EXT[key] = ExtField(q, m)
    return _EXT[key]


def conjugates(F: ExtField, a: int) -> list[int]:
    """Orbit of ``a`` under the Frobenius map x -> x^q."""
    orbit = [a]
    x = F.pow(a, F.q)
    while x != a:
        orbit.append(x)
        x = F.pow(x, F.q)
    return orbit


def _minpoly(F: ExtField, a: int) -> Poly:
    from .polyring import Poly

    # prod (X - c) over the conjugates, coefficients in the big field
    coeffs = [1]
    for c in conjugates(F, a):
        nxt = [0] * (len(coeffs) + 1)
        for i, v in enumerate(coeffs):
            nxt[i + 1] ^= v
            nxt[i] ^= F.mul(v, c)
        coeffs = nxt
    return Poly([F.project(v) for v in coeffs], F.q)


def _as_elem(alpha, F=None):
    if isinstance(alpha, FieldElem):
        if not isinstance(alpha.field, ExtField):
            raise ValueError("expected an element of an extension field")
        return alpha.field, alpha.value
    if F is None:
        raise ValueError("pass a FieldElem or give the field explicitly")
    return F, int(alpha)


def minimal_polynomial(alpha, F: ExtField | None = None) -> Poly:
    """Minimal polynomial of a nonzero element over the base field GF(q)."""
    F, a = _as_elem(alpha, F)
    if a == 0:
        raise ValueError("minimal polynomial of zero is not handled")
    return _minpoly(F, a)


def multiplicative_order(alpha, F: ExtField | None = None) -> int:
    F, a = _as_elem(alpha, F)
    if a == 0:
        raise ValueError("zero has no multiplicative order")
    n = F.order - 1
    for p, e in F.factors:
        for _ in range(e):
            if F.pow(a, n // p) == 1:
                n //= p
            else:
                break
    return n


def is_primitive(alpha, F: ExtField | None = None) -> bool:
    F, a = _as_elem(alpha, F)
    if a == 0:
        raise ValueError("zero is never primitive")
    n = F.order - 1
    return all(F.pow(a, n // p) != 1 for p, _ in F.factors)


def find_primitive_avoiding(g: Poly, F: ExtField) -> FieldElem:
    """Primitive alpha of smallest discrete log with g(alpha) != 0 != g(1/alpha)."""
    n = F.order - 1
    gen = F.generator
    for e in range(1, n + 1):
        if math.gcd(e, n) != 1:
            continue
        a = F.pow(gen, e)
        if F.eval_poly(g, a) != 0 and F.eval_poly(g, F.inv(a)) != 0:
            return FieldElem(F, a)
    raise ValueError(
        f"no primitive element of {F!r} avoids the roots of g and their inverses "
        f"({totient(n)} primitive elements, deg g = {g.degree})"
    )
