"""GC-balanced DNA computing codes from rc2-generating sets."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .codebook import Codebook
from .cyclic import CyclicCode, DecodeError
from .polyring import as_word
from .primer import RcGenSet, RcSubcode


@dataclass(frozen=True)
class PiParams:
    n: int
    s: int
    mask: np.ndarray

    def __hash__(self):
        return hash((self.n, self.s))


def pi_params(n: int) -> PiParams:
    """s in {(n-1)/4, (n+1)/4} and the mask w^s 0^(n-2s) w^s."""
    if n % 2 == 0:
        raise ValueError("pi is defined for odd n")
    s = (n - 1) // 4 if (n - 1) % 4 == 0 else (n + 1) // 4
    mask = np.array([2] * s + [0] * (n - 2 * s) + [2] * s, dtype=np.uint8)
    mask.setflags(write=False)
    return PiParams(n, s, mask)


def pi_map(w) -> np.ndarray:
    """Swap A<->C and T<->G on the first s and last s symbols."""
    w = as_word(w)
    return w ^ pi_params(len(w)).mask


def _gc(w) -> int:
    return int(np.count_nonzero(w >= 2))


class DnaComputingCode(Codebook):
    """v_u = pi(sigma^i(u)) with the smallest i making it GC-balanced, u from the rc2 subcode."""

    name = "dna-computing"

    def __init__(self, C: CyclicCode, S: RcGenSet, max_m_degree: int | None = None):
        if C.q != 4:
            raise ValueError("DNA computing codes are quaternary")
        if C.n % 2 == 0:
            raise ValueError("n must be odd")
        if S.flavor != "rc2":
            raise ValueError("an rc2-generating set is required")
        super().__init__(4, C.n)
        self.inner = RcSubcode(C, S, max_m_degree)
        self.C = C
        self.pi = pi_params(C.n)
        self.meta = dict(self.inner.meta)
        self.meta.update({"dna_computing": True, "balance_mode": "gc_balanced"})

    @property
    def size(self) -> int:
        return self.inner.size

    def messages(self):
        return self.inner.messages()

    def _balance(self, u):
        n = self.n
        ok = (n // 2, (n + 1) // 2)
        for i in range(n):
            v = np.roll(u, i) ^ self.pi.mask
            if _gc(v) in ok:
                return v
        raise AssertionError("no shift balances this word under pi")

    def encode(self, msg):
        return self._balance(self.inner.encode(msg))

    def _build_words(self):
        U = self.inner.words
        n = self.n
        out = np.empty_like(U)
        todo = np.ones(len(U), dtype=bool)
        ok = (n // 2, (n + 1) // 2)
        for i in range(n):
            V = np.roll(U, i, axis=1) ^ self.pi.mask
            gc = np.count_nonzero(V >= 2, axis=1)
            hit = todo & np.isin(gc, ok)
            out[hit] = V[hit]
            todo &= ~hit
            if not todo.any():
                return out
        raise AssertionError("no shift balances some word under pi")

    def decode(self, word):
        """Undo pi, then try every shift until a word of the inner subcode appears."""
        u = as_word(word) ^ self.pi.mask
        for i in range(self.n):
            try:
                return self.inner.decode(np.roll(u, -i))
            except DecodeError:
                continue
        raise DecodeError("no shift of pi(word) lies in the subcode")


def construct_dna_computing(C: CyclicCode, S: RcGenSet, max_m_degree: int | None = None) -> DnaComputingCode:
    return DnaComputingCode(C, S, max_m_degree)
