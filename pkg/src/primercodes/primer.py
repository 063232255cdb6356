"""Primer codes.

Three builders live here:

* ``construct_primer_general``: a marker, r APD-constrained blocks and
  one-padded parity of a systematic binary code.
* ``construct_primer_almost_balanced``: cyclic-class representatives of a
  cyclic code containing the all-one word, shifted and masked.
* ``construct_primer_rc``: the subcode {(m h* + p_i) g} of a reversible
  cyclic code, driven by an rc-generating set.

plus the run-length-limited encoder behind the APD-constrained blocks and
the validation/search tools for rc-generating sets.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

import numpy as np

from .balance import balancing_shift
from .codebook import Codebook
from .cyclic import (
    CyclicCode,
    DecodeError,
    LinearEncoder,
    all_messages,
    bch_narrow_sense,
    code_from_generator,
    code_properties,
    cyclic_representatives,
    gf_matmul,
    int_to_word,
    multiplicative_order_mod,
    word_to_int,
)
from .gfcore import ext_field, find_primitive_avoiding, minimal_polynomial
from .polyring import Poly, as_word, poly_divmod, poly_lcm, reflect_within, x_pow_mod

# the worked [15,9,5]_4 instance (w = 2, w+1 = 3, coefficients ascending)
G_EXAMPLE1 = (1, 1, 3, 1, 3, 1, 1)
HSTAR_EXAMPLE1 = (1, 2, 2, 2, 1)
P_EXAMPLE1 = (
    (2,), (3,), (1,),
    (2, 2), (3, 3), (1, 1),
    (3, 2, 2),
    (1, 0, 3, 2), (0, 1, 3, 2), (3, 1, 3, 2), (1, 1, 3, 2),
    (0, 0, 1, 2), (1, 1, 1, 2),
    (2, 2, 2, 3), (3, 3, 2, 3), (1, 2, 1, 3),
    (3, 3, 2, 1),
)


def example1_code() -> CyclicCode:
    return code_from_generator(4, 15, Poly(G_EXAMPLE1, 4))


@dataclass(frozen=True)
class PrimerParams:
    """Claimed (n, d; kappa, f)_q parameters of a primer code."""

    n: int
    d: int | None
    kappa: int
    f: int
    q: int

    def __post_init__(self):
        if not 1 <= self.kappa <= self.n or not 1 <= self.f <= self.n:
            raise ValueError("need 1 <= kappa <= n and 1 <= f <= n")

    def as_dict(self):
        return {"n": self.n, "d": self.d, "kappa": self.kappa, "f": self.f, "q": self.q}


# run-length-limited encoder

def _zero_run_encode(x: list[int], k: int) -> list[int]:
    """Map x to a word of length len(x)+1 without 0^k.

    A marker 1 is appended; then, while the data part (everything before the
    marker) holds 0^k, the leftmost occurrence at position p is cut out and
    the block 1 bin(p) 0 of length k is appended at the end.
    """
    w = list(x)
    data_len = len(w)
    w.append(1)
    pw = k - 2
    while True:
        data = w[:data_len]
        p = _find_zero_run(data, k)
        if p is None:
            return w
        if p >= 1 << pw:
            raise ValueError("pointer capacity exceeded")
        block = [1] + [(p >> (pw - 1 - b)) & 1 for b in range(pw)] + [0]
        w = data[:p] + data[p + k :] + w[data_len:] + block
        data_len -= k


def _find_zero_run(data, k):
    run = 0
    for i, b in enumerate(data):
        run = run + 1 if b == 0 else 0
        if run == k:
            return i - k + 1
    return None


def _zero_run_decode(w: list[int], k: int) -> list[int]:
    w = list(w)
    blocks = []
    # every block ends in 0 and the marker is 1, so blocks peel off the end
    while w and w[-1] == 0:
        if len(w) < k + 1 or w[-k] != 1:
            raise DecodeError("malformed replacement block")
        blocks.append(w[-k:])
        w = w[:-k]
    if not w or w[-1] != 1:
        raise DecodeError("missing marker")
    data = w[:-1]
    for block in blocks:  # latest replacement first
        p = 0
        for b in block[1:-1]:
            p = (p << 1) | b
        if p > len(data):
            raise DecodeError("replacement pointer out of range")
        data = data[:p] + [0] * k + data[p:]
    return data


def rll_capacity_ok(L: int, ell: int) -> bool:
    """Whether messages of length L - 1 fit an output of length L for this ell."""
    return ell >= 5 and L >= 2 and L - ell < 2 ** (ell - 4)


def rll_encode(msg, ell: int) -> np.ndarray:
    """Bits of length L-1 to bits of length L with no run of ell-1 equal symbols.

    The first bit is kept; the remaining L-2 bits go through a zero-run
    replacement encoder (no 0^(ell-2)), and the output is the running xor of
    that difference sequence.
    """
    msg = [int(b) for b in np.asarray(msg).tolist()]
    L = len(msg) + 1
    if not rll_capacity_ok(L, ell):
        raise ValueError(f"length {L} exceeds the capacity for ell = {ell} (need L - ell < 2^(ell-4), ell >= 5)")
    z = _zero_run_encode(msg[1:], ell - 2)
    y = [msg[0]]
    for b in z:
        y.append(y[-1] ^ b)
    return np.array(y, dtype=np.uint8)


def rll_decode(word, ell: int) -> np.ndarray:
    y = [int(b) for b in np.asarray(word).tolist()]
    if not rll_capacity_ok(len(y), ell):
        raise ValueError("length outside the encoder's range")
    z = [a ^ b for a, b in zip(y[:-1], y[1:])]
    return np.array([y[0]] + _zero_run_decode(z, ell - 2), dtype=np.uint8)


# APD-constrained blocks

class ApdBlockCode(Codebook):
    """ell-APD-constrained words of length f = 2^(ell-4).

    A message (j, x) with j in [0, f-ell-3] and x of length f-ell-4 becomes
    rll(x) with 01^ell0 inserted at position j, followed by a 1.
    """

    name = "apd-block"

    def __init__(self, ell: int):
        if ell < 8:
            raise ValueError("APD-constrained blocks need ell >= 8")
        f = 2 ** (ell - 4)
        super().__init__(2, f, {"ell": ell})
        self.ell = ell
        self.f = f
        self.slots = f - ell - 2
        self.bits = f - ell - 4
        self.marker = np.array([0] + [1] * ell + [0], dtype=np.uint8)

    @property
    def size(self) -> int:
        return self.slots * 2**self.bits

    def messages(self):
        return [(j, x) for j in range(self.slots) for x in all_messages(self.bits, 2)]

    def index_to_message(self, idx: int):
        j, xi = divmod(idx, 2**self.bits)
        return j, int_to_word(xi, self.bits, 2)

    def message_to_index(self, msg) -> int:
        j, x = msg
        return j * 2**self.bits + word_to_int(x, 2)

    def encode(self, msg):
        j, x = msg
        if not 0 <= j < self.slots:
            raise ValueError(f"insertion slot must be in [0, {self.slots})")
        a0 = rll_encode(x, self.ell)
        return np.concatenate([a0[:j], self.marker, a0[j:], [1]]).astype(np.uint8)

    def decode(self, word):
        w = as_word(word)
        if len(w) != self.f or w[-1] != 1:
            raise DecodeError("not an APD-constrained block")
        m = len(self.marker)
        hits = [j for j in range(self.f - m) if np.array_equal(w[j : j + m], self.marker)]
        if len(hits) != 1 or hits[0] >= self.slots:
            raise DecodeError("marker not found exactly once")
        j = hits[0]
        a0 = np.concatenate([w[:j], w[j + m : -1]])
        return j, rll_decode(a0, self.ell)


def build_apd_constrained(ell: int) -> ApdBlockCode:
    return ApdBlockCode(ell)


@dataclass(frozen=True)
class ApdBlockParams:
    ell: int
    r: int
    p: int

    def __post_init__(self):
        if self.ell < 8:
            raise ValueError("need ell >= 8")
        if self.ell + 3 > self.f:
            raise ValueError("need ell + 3 <= f")
        if self.p + self.p // (self.ell - 1) + 1 > self.f:
            raise ValueError("need p + floor(p/(ell-1)) + 1 <= f")
        if self.r < 1:
            raise ValueError("need r >= 1")

    @property
    def f(self) -> int:
        return 2 ** (self.ell - 4)

    @property
    def n(self) -> int:
        return self.r * self.f + self.p + self.p // (self.ell - 1) + self.ell + 2


def pad_parity(parity, ell: int) -> np.ndarray:
    """Insert a 1 after every ell-1 bits, then append a 1."""
    out = []
    for i, b in enumerate(np.asarray(parity).tolist()):
        out.append(b)
        if (i + 1) % (ell - 1) == 0:
            out.append(1)
    out.append(1)
    return np.array(out, dtype=np.uint8)


def unpad_parity(padded, ell: int, p: int) -> np.ndarray:
    keep = []
    pos = 0
    padded = np.asarray(padded)
    for i in range(p):
        keep.append(padded[pos])
        pos += 1
        if (i + 1) % (ell - 1) == 0:
            pos += 1
    return np.array(keep, dtype=np.uint8)


PREFIXES = ("ones", "zeros")


class PrimerGeneralCode(Codebook):
    """Codewords prefix + a + p'_a with a in A^r; messages are tuples of r block indices.

    ``prefix="ones"`` uses 0 1^ell; ``prefix="zeros"`` uses 0^ell 1.  Both
    have length ell + 1.  Only the second keeps the code mutually
    uncorrelated: with 0 1^ell a word may end in 01, its own prefix.
    """

    name = "primer-general"

    def __init__(self, params: ApdBlockParams, B: LinearEncoder, prefix: str = "ones"):
        if prefix not in PREFIXES:
            raise ValueError(f"prefix must be one of {PREFIXES}")
        if B.q != 2 or B.k != params.r * params.f or B.n - B.k != params.p:
            raise ValueError(
                f"B must be an [{params.r * params.f + params.p}, {params.r * params.f}] binary code, "
                f"got [{B.n}, {B.k}]"
            )
        super().__init__(2, params.n)
        self.params = params
        self.B = B
        self.A = ApdBlockCode(params.ell)
        ell = params.ell
        bits = [0] + [1] * ell if prefix == "ones" else [0] * ell + [1]
        self.prefix = np.array(bits, dtype=np.uint8)
        self.prefix_kind = prefix
        self._block_words = self.A.words
        self._block_index = {w.tobytes(): i for i, w in enumerate(self._block_words)}
        self.meta = {
            "ell": params.ell, "f": params.f, "r": params.r, "p": params.p, "prefix": prefix,
            "claimed": PrimerParams(params.n, B.code.distance, 1, 2 * params.f, 2).as_dict(),
        }

    @property
    def size(self) -> int:
        return len(self._block_words) ** self.params.r

    def messages(self):
        return list(itertools.product(range(len(self._block_words)), repeat=self.params.r))

    def _assemble(self, a: np.ndarray) -> np.ndarray:
        parity = gf_matmul(a, self.B.P, 2)
        ell = self.params.ell
        if a.ndim == 1:
            return np.concatenate([self.prefix, a, pad_parity(parity, ell)])
        padded = np.array([pad_parity(p, ell) for p in parity], dtype=np.uint8)
        pre = np.broadcast_to(self.prefix, (a.shape[0], len(self.prefix)))
        return np.concatenate([pre, a, padded], axis=1)

    def encode(self, msg):
        if len(msg) != self.params.r:
            raise ValueError(f"need {self.params.r} block indices")
        a = np.concatenate([self._block_words[int(i)] for i in msg])
        return self._assemble(a)

    def _build_words(self):
        r = self.params.r
        idx = np.array(self.messages(), dtype=np.int64).reshape(-1, r)
        a = np.concatenate([self._block_words[idx[:, t]] for t in range(r)], axis=1)
        return self._assemble(a)

    def decode(self, word, correct: bool = True):
        """Block indices of a (possibly corrupted, if ``correct``) codeword."""
        w = as_word(word)
        P = self.params
        if len(w) != P.n:
            raise DecodeError("wrong length")
        body = w[len(self.prefix) :]
        a = body[: P.r * P.f]
        if correct:
            parity = unpad_parity(body[P.r * P.f :], P.ell, P.p)
            a = self.B.message(self.B.decode_bd(np.concatenate([a, parity])))
        out = []
        for t in range(P.r):
            i = self._block_index.get(a[t * P.f : (t + 1) * P.f].tobytes())
            if i is None:
                raise DecodeError(f"block {t} is not an APD-constrained word")
            out.append(i)
        return tuple(out)


def primer_general_desk() -> tuple[ApdBlockParams, LinearEncoder]:
    """ell = 8, r = 2 with the [63,51,5] BCH code shortened to [44,32,5]."""
    params = ApdBlockParams(ell=8, r=2, p=12)
    B = LinearEncoder(bch_narrow_sense(6, 5), shorten=63 - 44)
    return params, B


def construct_primer_general(params: ApdBlockParams | None = None, B: LinearEncoder | None = None,
                             prefix: str = "ones"):
    if params is None and B is None:
        params, B = primer_general_desk()
    return PrimerGeneralCode(params, B, prefix)


# almost balanced WMU codes

class AlmostBalancedPrimerCode(Codebook):
    """One masked word per cyclic class of a cyclic code that contains 1^n."""

    name = "primer-almost"

    def __init__(self, B: CyclicCode):
        n, k, q = B.n, B.k, B.q
        if n % 2 == 0:
            raise ValueError("n must be odd")
        if q not in (2, 4):
            raise ValueError("q must be 2 or 4")
        if k > -(-(n + 1) // 4):
            raise ValueError(f"need k <= ceil((n+1)/4) = {-(-(n + 1) // 4)}, got k = {k}")
        if not code_properties(B)[0]:
            raise ValueError("the code must contain the all-one word (g(1) != 0)")
        super().__init__(q, n)
        self.B = B
        mu = (n - 1) // 2
        c = 1 if q == 2 else 2
        self.mask = np.array([c] * (mu + 1) + [0] * (mu - 1) + [c], dtype=np.uint8)
        self.reps = cyclic_representatives(B.codewords())
        self._shifts = [balancing_shift(u, q)[0] for u in self.reps]
        self.meta = {
            "balance_mode": "almost",
            "input_code_size": q**k,
            "classes": len(self.reps),
            "claimed": PrimerParams(n, B.distance, k + 1, n, q).as_dict(),
        }

    def messages(self):
        return list(range(len(self.reps)))

    def encode(self, msg):
        i = int(msg)
        return np.roll(self.reps[i], self._shifts[i]) ^ self.mask

    def decode(self, word):
        w = as_word(word)
        hits = np.flatnonzero((self.words == w).all(axis=1))
        if hits.size == 0:
            raise DecodeError("not a codeword")
        return int(hits[0])


def construct_primer_almost_balanced(B: CyclicCode) -> AlmostBalancedPrimerCode:
    return AlmostBalancedPrimerCode(B)


def almost_desk_code() -> CyclicCode:
    """[15,3]_2 with g = 1 + x^3 + x^6 + x^9 + x^12 (period-3 words)."""
    g = [1 if i % 3 == 0 else 0 for i in range(13)]
    return code_from_generator(2, 15, Poly(g, 2))


# rc-generating sets

FLAVORS = ("rc", "rc2")


@dataclass(frozen=True)
class RcGenSet:
    hstar: Poly
    p: tuple
    flavor: str = "rc"

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValueError(f"flavor must be one of {FLAVORS}")
        object.__setattr__(self, "p", tuple(self.p))

    @property
    def q(self) -> int:
        return self.hstar.q

    @property
    def P(self) -> int:
        return len(self.p)

    def to_dict(self) -> dict:
        return {"hstar": self.hstar.to_list(), "p": [x.to_list() for x in self.p], "flavor": self.flavor}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict, q: int) -> RcGenSet:
        return cls(Poly(d["hstar"], q), tuple(Poly(x, q) for x in d["p"]), d.get("flavor", "rc"))

    @classmethod
    def from_lists(cls, hstar, ps, q: int, flavor: str = "rc") -> RcGenSet:
        return cls(Poly(hstar, q), tuple(Poly(x, q) for x in ps), flavor)


def example1_rc_set() -> RcGenSet:
    return RcGenSet.from_lists(HSTAR_EXAMPLE1, P_EXAMPLE1, 4, "rc")


@dataclass
class RcReport:
    ok: bool
    flavor: str
    condition: str | None = None
    i: int | None = None  # 1-based indices into p
    j: int | None = None
    s: int | None = None
    detail: str = ""
    checks: int = 0

    def to_dict(self):
        return {k: v for k, v in self.__dict__.items()}

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return f"{self.flavor}-generating: ok ({self.checks} checks)"
        where = ", ".join(f"{k}={v}" for k, v in (("i", self.i), ("j", self.j), ("s", self.s)) if v is not None)
        return f"{self.flavor}-generating: violates {self.condition} ({where}) {self.detail}".rstrip()


def _pair_conditions(C: CyclicCode, hstar: Poly, xs, pi: Poly, pj: Poly, flavor: str):
    """Yield (condition, s) for the first failed pairwise condition, else None."""
    n, k = C.n, C.k
    # (R4): h* | X^s p_i - p_j, s in 1..n-1
    for s in range(1, n):
        if ((xs[s] * pi - pj) % hstar).is_zero():
            return "R4", s
    rj = reflect_within(pj, k)
    if flavor == "rc":
        # (R5): h* | X^s p_i - X^(k-1) p_j(1/X), 0 <= s <= n-k
        for s in range(0, n - k + 1):
            if ((xs[s] * pi - rj) % hstar).is_zero():
                return "R5", s
        # (R6): h* | X^(s+k-1) p_i(1/X) - p_j, 0 <= s <= n-k
        ri = reflect_within(pi, k)
        for s in range(0, n - k + 1):
            if ((xs[s] * ri - pj) % hstar).is_zero():
                return "R6", s
    else:
        # (R5'): as (R5) but over every s in 0..n-1
        for s in range(0, n):
            if ((xs[s] * pi - rj) % hstar).is_zero():
                return "R5'", s
    return None


def _set_conditions(C: CyclicCode, S: RcGenSet):
    hstar = S.hstar
    if hstar.q != C.q or any(p.q != C.q for p in S.p):
        return RcReport(False, S.flavor, "field", detail="polynomials over a different field")
    if hstar.degree < 1:
        return RcReport(False, S.flavor, "R1", detail="h* must have positive degree")
    if not poly_divmod(C.h, hstar)[1].is_zero():
        return RcReport(False, S.flavor, "R1", detail="h* does not divide h")
    if hstar(1) == 0:
        return RcReport(False, S.flavor, "R2", detail="h*(1) = 0")
    if not hstar.is_self_reciprocal():
        return RcReport(False, S.flavor, "R3", detail="h* is not self-reciprocal")
    for i, p in enumerate(S.p, 1):
        if p.degree >= hstar.degree:
            return RcReport(False, S.flavor, "R7", i=i, detail=f"deg p_{i} = {p.degree} >= deg h* = {hstar.degree}")
    if not S.p:
        return RcReport(False, S.flavor, "R7", detail="empty p-list")
    return None


def validate_rc_generating(C: CyclicCode, S: RcGenSet) -> RcReport:
    """Check every rc (or rc2) condition by explicit remainders; report the first violation."""
    contains_one, reversible = code_properties(C)
    if not (contains_one and reversible):
        return RcReport(False, S.flavor, "host", detail="host code must be reversible and contain 1^n")
    bad = _set_conditions(C, S)
    if bad is not None:
        return bad
    xs = [x_pow_mod(s, S.hstar) for s in range(C.n)]
    checks = 0
    for (i, pi), (j, pj) in itertools.product(enumerate(S.p, 1), repeat=2):
        checks += 1
        hit = _pair_conditions(C, S.hstar, xs, pi, pj, S.flavor)
        if hit is not None:
            cond, s = hit
            return RcReport(False, S.flavor, cond, i, j, s, checks=checks)
    return RcReport(True, S.flavor, checks=checks)


def _cyclotomic_field_degree(C: CyclicCode) -> int:
    m = multiplicative_order_mod(C.q, C.n)
    if C.q**m - 1 != C.n:
        raise ValueError(f"n = {C.n} is not q^m - 1; a primitive alpha would not be an n-th root of unity")
    return m


def search_rc_generating(C: CyclicCode, flavor: str = "rc") -> RcGenSet:
    """{M(a)M(1/a), 1} (rc) or {M(a)M(1/a), M(a)} (rc2) for the first primitive a avoiding g's roots."""
    if flavor not in FLAVORS:
        raise ValueError(f"flavor must be one of {FLAVORS}")
    contains_one, reversible = code_properties(C)
    if not (contains_one and reversible):
        raise ValueError("host code must be reversible and contain 1^n")
    if flavor == "rc" and not C.n - C.k < C.k - 1:
        raise ValueError(f"need n - k < k - 1, got n - k = {C.n - C.k}, k - 1 = {C.k - 1}")
    F = ext_field(C.q, _cyclotomic_field_degree(C))
    alpha = find_primitive_avoiding(C.g, F)
    Ma = minimal_polynomial(alpha)
    Mb = minimal_polynomial(alpha.inverse())
    hstar = poly_lcm(Ma, Mb)
    p = (Poly.one(C.q),) if flavor == "rc" else (Ma,)
    S = RcGenSet(hstar, p, flavor)
    report = validate_rc_generating(C, S)
    if not report.ok:
        raise ValueError(f"searched set failed validation: {report}")
    return S


def extend_rc_generating(C: CyclicCode, S: RcGenSet, limit: int | None = None) -> RcGenSet:
    """Greedily append polynomials of degree < deg h* (in lexicographic order) that keep S valid.

    A convenience for exploring larger sets; no maximality is claimed.
    """
    if not validate_rc_generating(C, S).ok:
        raise ValueError("starting set is not valid")
    hstar = S.hstar
    xs = [x_pow_mod(s, hstar) for s in range(C.n)]
    ps = list(S.p)
    d = hstar.degree
    for coeffs in itertools.product(range(C.q), repeat=d):
        if limit is not None and len(ps) >= limit:
            break
        cand = Poly(coeffs[::-1], C.q)
        if cand.is_zero() or cand in ps:
            continue
        ok = _pair_conditions(C, hstar, xs, cand, cand, S.flavor) is None and all(
            _pair_conditions(C, hstar, xs, cand, p, S.flavor) is None
            and _pair_conditions(C, hstar, xs, p, cand, S.flavor) is None
            for p in ps
        )
        if ok:
            ps.append(cand)
    return RcGenSet(hstar, tuple(ps), S.flavor)


# rc primer codes

class RcSubcode(Codebook):
    """Words (m h* + p_i) g with deg m < k* (or < ``max_m_degree``) and i in 1..P."""

    name = "primer-rc"

    def __init__(self, C: CyclicCode, S: RcGenSet, max_m_degree: int | None = None, check: bool = True):
        if check:
            report = validate_rc_generating(C, S)
            if not report.ok:
                raise ValueError(f"set is not {S.flavor}-generating: {report}")
        super().__init__(C.q, C.n)
        self.C = C
        self.S = S
        self.k_star = C.k - S.hstar.degree
        if self.k_star < 1:
            raise ValueError("deg h* leaves no message symbols")
        self.m_len = self.k_star if max_m_degree is None else min(self.k_star, max_m_degree)
        self._p_index = {p: i for i, p in enumerate(S.p, 1)}
        hg = S.hstar * C.g
        self._Gm = np.array([hg.shift(j).to_word(C.n) for j in range(self.m_len)], dtype=np.uint8)
        self._offsets = np.array([(p * C.g).to_word(C.n) for p in S.p], dtype=np.uint8)
        self.meta = {"k_star": self.k_star, "P": S.P, "m_length": self.m_len, "flavor": S.flavor,
                     "claimed": PrimerParams(C.n, C.distance, C.k, C.k, C.q).as_dict()}

    @property
    def size(self) -> int:
        return self.C.q**self.m_len * self.S.P

    def messages(self):
        return [(m, i) for i in range(1, self.S.P + 1) for m in all_messages(self.m_len, self.C.q)]

    def encode(self, msg):
        m, i = msg
        m = as_word(m)
        if len(m) != self.m_len or not 1 <= i <= self.S.P:
            raise ValueError(f"message is (m of length {self.m_len}, i in 1..{self.S.P})")
        return gf_matmul(m, self._Gm, self.C.q) ^ self._offsets[i - 1]

    def _build_words(self):
        base = gf_matmul(all_messages(self.m_len, self.C.q), self._Gm, self.C.q)
        return np.concatenate([base ^ off for off in self._offsets]).astype(np.uint8)

    def decode(self, word):
        C, S = self.C, self.S
        u, rem = poly_divmod(Poly.from_word(word, C.q), C.g)
        if not rem.is_zero():
            raise DecodeError("not a codeword of the host code")
        i = self._p_index.get(u % S.hstar)
        if i is None:
            raise DecodeError("residue mod h* matches no p_i")
        m, rem = poly_divmod(u - S.p[i - 1], S.hstar)
        if not rem.is_zero() or m.degree >= self.m_len:
            raise DecodeError("message out of range")
        return m.to_word(self.m_len), i


def construct_primer_rc(C: CyclicCode, S: RcGenSet, max_m_degree: int | None = None) -> RcSubcode:
    return RcSubcode(C, S, max_m_degree)


def redundancy(n: int, size: int, q: int) -> float:
    return n - float(np.log(size) / np.log(q))
