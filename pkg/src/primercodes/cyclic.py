"""Cyclic codes: generators, BCH families, systematic encoding and algebraic cyclic-class representatives."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from functools import cached_property

import numpy as np

from .gfcore import GF4_MUL, ExtField, ext_field, minimal_polynomial
from .polyring import Poly, poly_divmod, self_reciprocal, shift, x_pow_mod

MUL4 = np.array(GF4_MUL, dtype=np.uint8)

DISTANCE_STATUSES = ("exact", "sampled", "designed")


class DecodeError(ValueError):
    """Raised when a received word cannot be decoded."""


def gf_matmul(msgs: np.ndarray, G: np.ndarray, q: int) -> np.ndarray:
    """Row-vector times matrix over GF(q); ``msgs`` may be 1-D or 2-D."""
    msgs = np.asarray(msgs, dtype=np.uint8)
    single = msgs.ndim == 1
    if single:
        msgs = msgs[None, :]
    if q == 2:
        out = (msgs.astype(np.int64) @ G.astype(np.int64)) & 1
        out = out.astype(np.uint8)
    else:
        out = np.zeros((msgs.shape[0], G.shape[1]), dtype=np.uint8)
        for i in range(G.shape[0]):
            out ^= MUL4[msgs[:, i][:, None], G[i][None, :]]
    return out[0] if single else out


def int_to_word(x: int, length: int, q: int) -> np.ndarray:
    """Little-endian base-q digits of x."""
    w = np.zeros(length, dtype=np.uint8)
    for i in range(length):
        x, w[i] = divmod(x, q)
    if x:
        raise ValueError(f"integer does not fit in {length} base-{q} digits")
    return w


def word_to_int(w, q: int) -> int:
    x = 0
    for c in reversed(np.asarray(w).tolist()):
        x = x * q + int(c)
    return x


def all_messages(k: int, q: int) -> np.ndarray:
    """Every word of GF(q)^k, row j being the base-q digits of j."""
    idx = np.arange(q**k, dtype=np.int64)
    out = np.empty((q**k, k), dtype=np.uint8)
    for i in range(k):
        out[:, i] = (idx // q**i) % q
    return out


def cyclotomic_cosets(n: int, q: int) -> list[tuple[int, ...]]:
    """Orbits of Z_n under multiplication by q, each sorted, ordered by smallest element."""
    seen = set()
    out = []
    for e in range(n):
        if e in seen:
            continue
        orbit = []
        x = e
        while x not in orbit:
            orbit.append(x)
            x = (x * q) % n
        seen.update(orbit)
        out.append(tuple(sorted(orbit)))
    return out


def multiplicative_order_mod(q: int, n: int) -> int:
    if n == 1:
        return 1
    m, x = 1, q % n
    while x != 1:
        x = (x * q) % n
        m += 1
        if m > n:
            raise ValueError(f"{q} is not invertible modulo {n}")
    return m


@dataclass(frozen=True)
class CyclotomicData:
    """Field hosting a primitive n-th root of unity beta, and the cosets mod n."""

    q: int
    n: int
    field: ExtField
    beta: int
    cosets: tuple

    def root(self, e: int) -> int:
        return self.field.pow(self.beta, e)

    def minimal_polynomial(self, e: int) -> Poly:
        return minimal_polynomial(self.field(self.root(e)))

    def coset_of(self, e: int) -> tuple:
        e %= self.n
        for c in self.cosets:
            if e in c:
                return c
        raise AssertionError("cosets partition Z_n")


_CYC = {}


def cyclotomic_data(n: int, q: int) -> CyclotomicData:
    key = (n, q)
    if key not in _CYC:
        if n % 2 == 0:
            raise ValueError("only lengths coprime to the characteristic are supported")
        m = multiplicative_order_mod(q, n)
        F = ext_field(q, m)
        beta = F.pow(F.generator, (F.order - 1) // n)
        _CYC[key] = CyclotomicData(q, n, F, beta, tuple(cyclotomic_cosets(n, q)))
    return _CYC[key]


def generator_from_exponents(q: int, n: int, exponents) -> Poly:
    """Product of the minimal polynomials of beta^e over the cosets touched by ``exponents``."""
    cd = cyclotomic_data(n, q)
    cosets = {cd.coset_of(e) for e in exponents}
    g = Poly.one(q)
    for c in sorted(cosets):
        g = g * cd.minimal_polynomial(c[0])
    return g


def irreducible_factors(n: int, q: int) -> list[tuple[tuple, Poly]]:
    """Irreducible factors of X^n - 1 as (coset, factor) pairs."""
    cd = cyclotomic_data(n, q)
    return [(c, cd.minimal_polynomial(c[0])) for c in cd.cosets]


@dataclass(frozen=True)
class CyclicCode:
    q: int
    n: int
    g: Poly
    distance: int | None = None
    distance_status: str = "designed"

    @property
    def k(self) -> int:
        return self.n - self.g.degree

    @cached_property
    def h(self) -> Poly:
        return Poly.x_n_minus_1(self.n, self.q) // self.g

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    def contains(self, w) -> bool:
        return (Poly.from_word(w, self.q) % self.g).is_zero()

    def encode_poly(self, m: Poly) -> np.ndarray:
        if m.degree >= self.k:
            raise ValueError(f"message degree {m.degree} must be < k = {self.k}")
        return (m * self.g).to_word(self.n)

    @cached_property
    def generator_matrix(self) -> np.ndarray:
        rows = [self.g.shift(i).to_word(self.n) for i in range(self.k)]
        return np.array(rows, dtype=np.uint8)

    def codewords(self) -> np.ndarray:
        """All q^k codewords (row j encodes the message with base-q digits of j)."""
        if self.q**self.k > 1 << 24:
            raise ValueError(f"{self.q}^{self.k} codewords is too many to enumerate")
        return gf_matmul(all_messages(self.k, self.q), self.generator_matrix, self.q)

    def with_distance(self, d: int, status: str) -> CyclicCode:
        if status not in DISTANCE_STATUSES:
            raise ValueError(f"unknown distance status {status!r}")
        return replace(self, distance=d, distance_status=status)

    def verified(self, budget: int = 1 << 24, seed: int = 0) -> CyclicCode:
        """Attach a distance checked by the weight-census oracle."""
        from .oracle import min_distance_linear

        d, mode = min_distance_linear(self.generator_matrix, self.q, budget=budget, seed=seed)
        if mode == "exhaustive":
            return self.with_distance(d, "exact")
        # sampled weights only bound d from above; keep the designed value
        return replace(self, distance_status="sampled")

    def descriptor(self) -> dict:
        out = {"q": self.q, "n": self.n, "generator": self.g.to_list(), "k": self.k}
        if self.distance is not None:
            out["distance"] = self.distance
        out["distance_status"] = self.distance_status
        return out

    def __str__(self):
        d = self.distance if self.distance is not None else "?"
        return f"[{self.n},{self.k},{d}]_{self.q} cyclic code, g = {self.g}"


def code_from_generator(q: int, n: int, g: Poly | list, distance=None, status="designed") -> CyclicCode:
    """Validated cyclic code of length n generated by g."""
    if not isinstance(g, Poly):
        g = Poly(g, q)
    if g.q != q:
        raise ValueError("generator is over a different field")
    if n % 2 == 0:
        raise ValueError("n must be coprime to q (odd n)")
    if g.is_zero() or not g.is_monic():
        raise ValueError("generator polynomial must be monic")
    if g.degree >= n:
        raise ValueError("generator degree must be below n (k >= 1)")
    if not poly_divmod(Poly.x_n_minus_1(n, q), g)[1].is_zero():
        raise ValueError(f"g = {g} does not divide X^{n} - 1")
    return CyclicCode(q, n, g, distance, status)


def code_properties(C: CyclicCode) -> tuple[bool, bool]:
    """(contains the all-one word, reversible)."""
    return C.g(1) != 0, self_reciprocal(C.g)


def bch_narrow_sense(m: int, d: int) -> CyclicCode:
    """Binary primitive narrow-sense BCH code of length 2^m - 1, designed distance d."""
    n = 2**m - 1
    if m < 2 or not 2 <= d <= n:
        raise ValueError(f"need m >= 2 and 2 <= d <= {n}")
    g = generator_from_exponents(2, n, range(1, d))
    return code_from_generator(2, n, g, d, "designed")


def reversible_bch(q: int, m: int, delta: int) -> CyclicCode:
    """Reversible cyclic code containing 1^n from the root set beta^(+-1..+-(delta-1))."""
    n = q**m - 1
    if q not in (2, 4) or m < 2:
        raise ValueError("need q in {2, 4} and m >= 2")
    if not 2 <= delta < n:
        raise ValueError(f"need 2 <= delta < {n}")
    exps = [e for i in range(1, delta) for e in (i, n - i)]
    g = generator_from_exponents(q, n, exps)
    return code_from_generator(q, n, g, delta, "designed")


# systematic encoding and bounded-distance decoding

class LinearEncoder:
    """Systematic encoder for a (possibly shortened) cyclic code.

    Codewords are ``message | parity``: the message fills the first
    k - shorten positions, the n - k parity symbols follow.  Shortening drops
    the last ``shorten`` message positions of the parent code.
    """

    def __init__(self, code: CyclicCode, shorten: int = 0, t: int | None = None):
        if not 0 <= shorten < code.k:
            raise ValueError(f"shortening {shorten} must be in [0, {code.k})")
        self.code = code
        self.shorten = shorten
        self.k = code.k - shorten
        self.n = code.n - shorten
        self.q = code.q
        r = code.n - code.k
        rows = []
        for i in range(self.k):
            # c = X^i + X^k * p with p = -X^(n-k+i) mod g
            p = x_pow_mod(r + i, code.g)
            rows.append(p.to_word(r))
        self.P = np.array(rows, dtype=np.uint8).reshape(self.k, r)
        d = code.distance if code.distance is not None else 1
        self.t = (d - 1) // 2 if t is None else t

    def __repr__(self):
        return f"LinearEncoder([{self.n},{self.k}] from {self.code.n},{self.code.k}; t={self.t})"

    def encode(self, msg) -> np.ndarray:
        msg = np.asarray(msg, dtype=np.uint8)
        if msg.shape[-1] != self.k:
            raise ValueError(f"message length {msg.shape[-1]} != {self.k}")
        return np.concatenate([msg, gf_matmul(msg, self.P, self.q)], axis=-1)

    def message(self, c) -> np.ndarray:
        return np.asarray(c, dtype=np.uint8)[..., : self.k].copy()

    def syndrome(self, y) -> np.ndarray:
        y = np.asarray(y, dtype=np.uint8)
        return gf_matmul(y[..., : self.k], self.P, self.q) ^ y[..., self.k :]

    def full_word(self, c) -> np.ndarray:
        """Re-insert the shortened zero positions (word of the parent code)."""
        c = np.asarray(c, dtype=np.uint8)
        return np.concatenate([c[: self.k], np.zeros(self.shorten, np.uint8), c[self.k :]])

    @cached_property
    def _table(self) -> dict:
        unit = np.eye(self.n, dtype=np.uint8)
        cols = self.syndrome(unit)
        table = {bytes(np.zeros(self.n - self.k, np.uint8)): ()}
        vals = range(1, self.q)
        for w in range(1, self.t + 1):
            for pos in itertools.combinations(range(self.n), w):
                for vs in itertools.product(vals, repeat=w):
                    s = np.zeros(self.n - self.k, np.uint8)
                    for j, v in zip(pos, vs):
                        s ^= cols[j] if v == 1 else MUL4[v][cols[j]]
                    key = bytes(s)
                    if key in table:
                        raise ValueError("syndromes collide: t exceeds the code's correction radius")
                    table[key] = tuple(zip(pos, vs))
        return table

    def decode_bd(self, y) -> np.ndarray:
        """Nearest codeword within radius t, via syndrome lookup."""
        y = np.asarray(y, dtype=np.uint8)
        if y.shape != (self.n,):
            raise ValueError(f"expected a word of length {self.n}")
        pattern = self._table.get(bytes(self.syndrome(y)))
        if pattern is None:
            raise DecodeError(f"no codeword within distance {self.t}")
        c = y.copy()
        for j, v in pattern:
            c[j] ^= v
        return c

    def decode_message(self, y) -> np.ndarray:
        return self.message(self.decode_bd(y))


def systematic_encode(E: LinearEncoder, msg) -> np.ndarray:
    return E.encode(msg)


def systematic_decode_bd(E: LinearEncoder, recv) -> np.ndarray:
    return E.decode_bd(recv)


# one representative per cyclic class

def _x_order_at_least(hstar: Poly, n: int) -> bool:
    """True iff hstar divides none of X^s - 1 for s in 1..n-1."""
    if hstar.degree < 1:
        return False
    one = Poly.one(hstar.q)
    x = Poly([0, 1], hstar.q) % hstar
    r = x
    for _ in range(1, n):
        if r == one:
            return False
        r = (r * x) % hstar
    return True


def tavares_hstar_candidates(C: CyclicCode, max_degree: int | None = None) -> list[Poly]:
    """Monic divisors h* of h with h* not dividing X^s - 1 for any s in [n-1].

    Only divisors of degree below k are kept, so at least one message symbol
    remains.
    """
    factors = [f for _, f in irreducible_factors(C.n, C.q) if f.divides(C.h)]
    out = set()
    for r in range(1, len(factors) + 1):
        for combo in itertools.combinations(factors, r):
            deg = sum(f.degree for f in combo)
            if deg >= C.k or (max_degree is not None and deg > max_degree):
                continue
            p = Poly.one(C.q)
            for f in combo:
                p = p * f
            if _x_order_at_least(p, C.n):
                out.add(p)
    return sorted(out, key=lambda p: (p.degree, p.coeffs))


class TavaresEncoder:
    """Messages m with deg m < k* map to (m h* + 1) g, one per cyclic class."""

    def __init__(self, code: CyclicCode, hstar: Poly):
        if not hstar.divides(code.h):
            raise ValueError("h* must divide h")
        self.code = code
        self.hstar = hstar
        self.k_star = code.k - hstar.degree
        if self.k_star < 1:
            raise ValueError("deg h* leaves no message symbols")
        table = {}
        r = Poly.one(code.q) % hstar
        x = Poly([0, 1], code.q) % hstar
        for s in range(code.n):
            if r in table:
                raise ValueError(f"h* divides X^{s - table[r]} - 1; residues X^s mod h* repeat")
            table[r] = s
            r = (r * x) % hstar
        self._shift_of = table

    @property
    def size(self) -> int:
        return self.code.q**self.k_star

    def encode(self, m) -> np.ndarray:
        m = Poly.from_word(m, self.code.q) if not isinstance(m, Poly) else m
        if m.degree >= self.k_star:
            raise ValueError(f"message degree must be < k* = {self.k_star}")
        return ((m * self.hstar + 1) * self.code.g).to_word(self.code.n)

    def decode(self, c) -> tuple[np.ndarray, int]:
        """Recover (m, s) from sigma^s of an encoded word."""
        code = self.code
        u, rem = poly_divmod(Poly.from_word(c, code.q), code.g)
        if not rem.is_zero():
            raise DecodeError("not a codeword")
        s = self._shift_of.get(u % self.hstar)
        if s is None:
            raise DecodeError("not a shift of an encoded representative")
        base = shift(c, -s)
        u0 = Poly.from_word(base, code.q) // code.g
        m, r = poly_divmod(u0 - 1, self.hstar)
        if not r.is_zero() or m.degree >= self.k_star:
            raise DecodeError("not a shift of an encoded representative")
        return m.to_word(self.k_star), s

    def representatives(self) -> np.ndarray:
        msgs = all_messages(self.k_star, self.code.q)
        return np.array([self.encode(m) for m in msgs], dtype=np.uint8)


def tavares_encode(C: CyclicCode, hstar: Poly, m) -> np.ndarray:
    return TavaresEncoder(C, hstar).encode(m)


def tavares_decode(C: CyclicCode, hstar: Poly, c) -> tuple[np.ndarray, int]:
    return TavaresEncoder(C, hstar).decode(c)


def canonical_rotation(w) -> bytes:
    w = bytes(np.asarray(w, dtype=np.uint8))
    return min(w[i:] + w[:i] for i in range(len(w)))


def cyclic_representatives(words: np.ndarray) -> np.ndarray:
    """One word per cyclic class (the lexicographically least rotation), sorted."""
    reps = sorted({canonical_rotation(w) for w in words})
    return np.array([np.frombuffer(r, dtype=np.uint8) for r in reps], dtype=np.uint8)
