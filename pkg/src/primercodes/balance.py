"""Balancing tools and the two balanced error-correcting constructions.

* prefix-flip balancing and its cyclic-shift variant for odd lengths.
* ``construct_bin_balanced``: cyclic-class representatives, shifted and
  prefix-flipped, plus one check bit.
* ``couple`` and ``construct_gc_balanced``: a prefix-flipped word carries
  the GC pattern, a second codeword carries the balancing index and parity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .codebook import Codebook
from .cyclic import (
    CyclicCode,
    DecodeError,
    LinearEncoder,
    TavaresEncoder,
    all_messages,
    bch_narrow_sense,
    cyclic_representatives,
    int_to_word,
    tavares_hstar_candidates,
    word_to_int,
)
from .polyring import Poly, as_word, flip_prefix, shift


def _balanced_counts(n: int) -> tuple[int, int]:
    return n // 2, (n + 1) // 2


def knuth_index(w) -> int:
    """Smallest z such that flipping the first z bits leaves floor(n/2) or ceil(n/2) ones."""
    w = as_word(w)
    n = len(w)
    ok = _balanced_counts(n)
    # weight after flipping the first z bits, for every z at once
    ones_prefix = np.concatenate([[0], np.cumsum(w, dtype=np.int64)])
    total = ones_prefix[-1]
    wt = total - ones_prefix + (np.arange(n + 1) - ones_prefix)
    hits = np.flatnonzero((wt == ok[0]) | (wt == ok[1]))
    return int(hits[0])


def knuth_flip(w, z: int) -> np.ndarray:
    return flip_prefix(w, z, 2)


def _infer_q(w) -> int:
    return 4 if np.asarray(w).max(initial=0) > 1 else 2


def balancing_shift(w, q: int | None = None) -> tuple[int, np.ndarray]:
    """Smallest i with flip_prefix(sigma^i(w), (n+1)/2) (GC-)balanced; returns (i, v)."""
    w = as_word(w)
    n = len(w)
    if n % 2 == 0:
        raise ValueError("balancing by shift needs odd n")
    q = q or _infer_q(w)
    ok = _balanced_counts(n)
    half = (n + 1) // 2
    for i in range(n):
        v = flip_prefix(shift(w, i), half, q)
        c = int(np.count_nonzero(v)) if q == 2 else int(np.count_nonzero(v >= 2))
        if c in ok:
            return i, v
    raise AssertionError("no balancing shift found; one always exists for odd n")


# balanced binary codes from cyclic codes

class BinBalancedCode(Codebook):
    """Balanced binary codebook of length n + 1 from a binary cyclic code.

    In ``encodable`` mode messages are representative messages (k* bits); in
    ``census`` mode they index the full list of cyclic-class representatives.
    """

    name = "bin-balanced"

    def __init__(self, B: CyclicCode, hstar: Poly | None = None, mode: str = "encodable"):
        if B.q != 2:
            raise ValueError("the balanced binary construction needs a binary code")
        if B.n % 2 == 0:
            raise ValueError("the balanced binary construction needs odd n")
        if mode not in ("encodable", "census"):
            raise ValueError(f"unknown mode {mode!r}")
        super().__init__(2, B.n + 1)
        self.B = B
        self.mode = mode
        self.half = (B.n + 1) // 2
        if mode == "encodable":
            if hstar is None:
                cands = tavares_hstar_candidates(B)
                if not cands:
                    raise ValueError("code admits no representative-selecting h*")
                hstar = cands[0]
            self.tavares = TavaresEncoder(B, hstar)
            self.k_msg = self.tavares.k_star
        else:
            self.reps = cyclic_representatives(B.codewords())
            self._rep_index = {r.tobytes(): i for i, r in enumerate(self.reps)}
        d = B.distance
        self.meta = {
            "mode": mode,
            "balance_mode": "balanced",
            "claimed_distance": None if d is None else 2 * ((d + 1) // 2),
            "distance_status": B.distance_status,
            "size_bound_2k_over_n": 2**B.k / B.n,
        }
        if mode == "encodable":
            self.meta["hstar"] = hstar.to_list()

    def messages(self):
        if self.mode == "encodable":
            return list(all_messages(self.k_msg, 2))
        return list(range(len(self.reps)))

    def _finish(self, u):
        _, v = balancing_shift(u, 2)
        bit = 0 if int(v.sum()) == self.half else 1
        return np.append(v, np.uint8(bit))

    def encode(self, msg):
        if self.mode == "encodable":
            return self._finish(self.tavares.encode(msg))
        return self._finish(self.reps[int(msg)])

    def decode(self, word):
        word = as_word(word)
        if len(word) != self.n or word.sum() != self.half:
            raise DecodeError("not a balanced word of the right length")
        u_shifted = flip_prefix(word[:-1], self.half, 2)
        if self.mode == "encodable":
            m, _ = self.tavares.decode(u_shifted)
            return m
        for s in range(self.B.n):
            i = self._rep_index.get(shift(u_shifted, -s).tobytes())
            if i is not None:
                return i
        raise DecodeError("not a shifted representative")


def construct_bin_balanced(B: CyclicCode, hstar: Poly | None = None, mode: str = "encodable") -> BinBalancedCode:
    return BinBalancedCode(B, hstar, mode)


# coupling

def couple(a, b) -> np.ndarray:
    """Symbolwise 00->A, 01->T, 10->C, 11->G, i.e. code 2a + b."""
    a, b = as_word(a), as_word(b)
    if a.shape != b.shape:
        raise ValueError("coupled words must have equal length")
    return (a << 1) | b


def uncouple(y) -> tuple[np.ndarray, np.ndarray]:
    y = as_word(y)
    return y >> 1, y & 1


# GC-balanced codes from two binary codes

@dataclass(frozen=True)
class GcEncoderParams:
    """A: systematic [n+p, n] code; B: systematic code of length n holding (i, j, parity)."""

    A: LinearEncoder
    B: LinearEncoder
    p: int
    M: int

    def __post_init__(self):
        n = self.A.k
        if self.A.n != n + self.p:
            raise ValueError(f"A must be an [n+p, n] code, got [{self.A.n}, {self.A.k}] with p={self.p}")
        if self.B.n != n:
            raise ValueError(f"B must have length n = {n}, got {self.B.n}")
        if self.A.q != 2 or self.B.q != 2:
            raise ValueError("both component codes must be binary")
        if 2**self.B.k < 2**self.p * n * self.M:
            raise ValueError(f"B too small: 2^{self.B.k} < 2^{self.p} * {n} * {self.M}")
        if self.M < 1:
            raise ValueError("M must be positive")

    @property
    def n(self) -> int:
        return self.A.k

    @property
    def distance(self) -> int:
        return 2 * min(self.A.t, self.B.t) + 1

    def pack(self, i: int, j: int, parity) -> np.ndarray:
        """(i in 1..M, j in 0..n-1, parity bits) -> message of B."""
        if not 1 <= i <= self.M or not 0 <= j < self.n:
            raise ValueError("index out of range")
        x = ((i - 1) * self.n + j) * 2**self.p + word_to_int(parity, 2)
        return int_to_word(x, self.B.k, 2)

    def unpack(self, msg) -> tuple[int, int, np.ndarray]:
        x = word_to_int(msg, 2)
        x, pbits = divmod(x, 2**self.p)
        i, j = divmod(x, self.n)
        if i >= self.M:
            raise DecodeError("index field out of range")
        return i + 1, j, int_to_word(pbits, self.p, 2)


def gc_desk_params() -> GcEncoderParams:
    """Hamming [31,26,3] for A, the same code shortened to [26,21,3] for B, p = 5."""
    ham = bch_narrow_sense(5, 3).with_distance(3, "exact")
    A = LinearEncoder(ham)
    B = LinearEncoder(ham, shorten=5)
    p = 5
    M = 2**B.k // (2**p * A.k)
    return GcEncoderParams(A, B, p, M)


class GcBalancedCode:
    """GC-balanced quaternary code of length n from two binary systematic codes."""

    name = "gc-balanced"

    def __init__(self, params: GcEncoderParams):
        self.params = params
        self.n = params.n
        self.q = 4

    @property
    def size(self) -> int:
        return 2**self.n * self.params.M

    def metadata(self) -> dict:
        P = self.params
        return {"construction": self.name, "q": 4, "n": self.n, "p": P.p, "M": P.M,
                "size": self.size, "claimed_distance": P.distance, "balance_mode": "gc_balanced"}

    def encode(self, m, i: int) -> np.ndarray:
        P = self.params
        m = as_word(m)
        c = P.A.encode(m)
        parity = c[self.n :]
        j = knuth_index(m)
        if j >= self.n:  # a flip of everything is never needed for even n; guard odd n
            raise AssertionError("balancing index out of range")
        a = flip_prefix(m, j, 2)
        b = P.B.encode(P.pack(i, j, parity))
        return couple(a, b)

    def decode(self, y) -> tuple[np.ndarray, int]:
        P = self.params
        a_hat, b_hat = uncouple(y)
        b = P.B.decode_bd(b_hat)
        i, j, parity = P.unpack(P.B.message(b))
        a_flipped_back = flip_prefix(a_hat, j, 2)
        c = P.A.decode_bd(np.concatenate([a_flipped_back, parity]))
        return P.A.message(c), i


def construct_gc_balanced(params: GcEncoderParams | None = None) -> GcBalancedCode:
    return GcBalancedCode(params or gc_desk_params())
