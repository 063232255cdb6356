"""Brute-force checkers for code properties.

Everything here works on raw words (numpy rows, digit strings or DNA
strings) and deliberately shares no predicate code with the builders, so a
construction can be checked against an independent reading of each
definition.  Exhaustive scans are used while the work estimate stays under
``budget`` elementary comparisons; past that, ordered pairs are sampled with
a seeded generator and the verdict says so.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

import numpy as np

BUDGET = 1 << 24

_LETTERS = {"A": 0, "T": 1, "C": 2, "G": 3}
_MUL4 = np.array([[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]], dtype=np.uint8)


@dataclass
class VerificationReport:
    property: str
    verdict: str  # pass | fail | sampled-pass
    witness: dict | None = None
    work: int = 0
    mode: str = "exhaustive"
    seed: int | None = None
    trials: int | None = None
    detail: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict == "fail" and self.witness is None:
            raise ValueError("a failing report needs a witness")
        if self.mode == "sampled" and self.seed is None:
            raise ValueError("a sampled report needs its seed")

    @property
    def ok(self) -> bool:
        return self.verdict != "fail"

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), default=_jsonable, **kw)

    def __str__(self):
        extra = f" seed={self.seed} trials={self.trials}" if self.mode == "sampled" else ""
        wit = f" witness={self.witness}" if self.witness else ""
        return f"{self.property}: {self.verdict} ({self.mode}, work={self.work}{extra}){wit}"


def _jsonable(x):
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.ndarray):
        return x.tolist()
    raise TypeError(f"cannot serialise {type(x).__name__}")


def as_matrix(words) -> np.ndarray:
    """Stack words of equal length into a uint8 matrix.

    Strings made of ACGT letters map to 0..3 (A, T, C, G); other strings are
    read digit by digit.
    """
    if isinstance(words, np.ndarray) and words.ndim == 2:
        return words.astype(np.uint8, copy=False)
    rows = []
    for w in words:
        if isinstance(w, str):
            s = w.strip().upper()
            if s and set(s) <= set(_LETTERS):
                rows.append([_LETTERS[c] for c in s])
            else:
                rows.append([int(c) for c in s])
        else:
            rows.append(list(np.asarray(w).tolist()))
    if not rows:
        return np.zeros((0, 0), dtype=np.uint8)
    if len({len(r) for r in rows}) != 1:
        raise ValueError("words must all have the same length")
    return np.array(rows, dtype=np.uint8)


def _pairs(rng, N, trials):
    a = rng.integers(0, N, size=trials)
    b = rng.integers(0, N, size=trials)
    return a, b


# distance

def _weights_of_span(G, q, msgs):
    if q == 2:
        c = (msgs.astype(np.int64) @ G.astype(np.int64)) & 1
    else:
        c = np.zeros((msgs.shape[0], G.shape[1]), dtype=np.uint8)
        for i in range(G.shape[0]):
            c ^= _MUL4[msgs[:, i][:, None], G[i][None, :]]
    return np.count_nonzero(c, axis=1)


def min_distance_linear(G, q: int, budget: int = BUDGET, seed: int = 0, trials: int = 100_000):
    """Minimum nonzero weight of the row space of G over GF(q).

    Returns (d, "exhaustive") when all q^k messages fit the budget, else the
    smallest weight among ``trials`` random messages with mode "sampled"
    (an upper bound on d, not a proof).
    """
    G = np.asarray(G, dtype=np.uint8)
    k = G.shape[0]
    total = q**k
    if total <= budget:
        best = G.shape[1] + 1
        chunk = 1 << 16
        for start in range(1, total, chunk):
            idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
            msgs = np.empty((idx.size, k), dtype=np.uint8)
            for i in range(k):
                msgs[:, i] = (idx // q**i) % q
            best = min(best, int(_weights_of_span(G, q, msgs).min()))
        return best, "exhaustive"
    rng = np.random.default_rng(seed)
    msgs = rng.integers(0, q, size=(trials, k), dtype=np.uint8)
    w = _weights_of_span(G, q, msgs)
    w = w[w > 0]
    return int(w.min()) if w.size else G.shape[1] + 1, "sampled"


def _pairwise_min(X, Y=None, skip_diag=True, chunk=512):
    """Minimum Hamming distance between rows of X and rows of Y (or X itself)."""
    same = Y is None
    Y = X if same else Y
    best, arg = X.shape[1] + 1, None
    for s in range(0, X.shape[0], chunk):
        D = (X[s : s + chunk, None, :] != Y[None, :, :]).sum(axis=2)
        if same and skip_diag:
            r = np.arange(D.shape[0])
            D[r, r + s] = X.shape[1] + 1
        i, j = np.unravel_index(np.argmin(D), D.shape)
        if D[i, j] < best:
            best, arg = int(D[i, j]), (int(i + s), int(j))
    return best, arg


def min_distance(words_or_code, budget: int = BUDGET, seed: int = 0, trials: int = 10_000):
    """Minimum distance of a word list or of anything with a generator matrix.

    A single word has no pairs and reports n + 1 with mode "single word".
    """
    if hasattr(words_or_code, "generator_matrix"):
        code = words_or_code
        return min_distance_linear(code.generator_matrix, code.q, budget, seed)
    X = as_matrix(words_or_code)
    N, n = X.shape
    if N <= 1:
        return n + 1, "single word"
    if N * (N - 1) // 2 * n <= budget:
        return _pairwise_min(X)[0], "exhaustive"
    rng = np.random.default_rng(seed)
    a, b = _pairs(rng, N, trials)
    keep = a != b
    if not keep.any():
        return n + 1, "sampled"
    return int((X[a[keep]] != X[b[keep]]).sum(axis=1).min()), "sampled"


def verify_distance(words, d: int, budget: int = BUDGET, seed: int = 0, trials: int = 10_000,
                    mode: str = "auto"):
    X = as_matrix(words)
    N, n = X.shape
    work = N * N * n
    if mode == "exhaustive" or (mode == "auto" and work <= budget) or N <= 1:
        if N <= 1:
            return VerificationReport("distance", "pass", work=0, detail={"d": n + 1})
        best, (i, j) = _pairwise_min(X)
        if best < d:
            return VerificationReport("distance", "fail", {"a": i, "b": j, "distance": best}, work)
        return VerificationReport("distance", "pass", work=work, detail={"d": best})
    rng = np.random.default_rng(seed)
    a, b = _pairs(rng, N, trials)
    keep = a != b
    a, b = a[keep], b[keep]
    D = (X[a] != X[b]).sum(axis=1)
    t = int(np.argmin(D))
    if D[t] < d:
        return VerificationReport(
            "distance", "fail", {"a": int(a[t]), "b": int(b[t]), "distance": int(D[t])},
            int(a.size * n), "sampled", seed, trials,
        )
    return VerificationReport("distance", "sampled-pass", None, int(a.size * n), "sampled", seed, trials,
                              {"min_seen": int(D[t])})


# weakly mutually uncorrelated

def _wmu_pair(x, y, kappa):
    n = len(x)
    for ell in range(kappa, n):
        if bytes(x[:ell]) == bytes(y[n - ell :]):
            return ell
    return None


def verify_wmu(words, kappa: int, budget: int = BUDGET, seed: int = 0, trials: int = 10_000,
               mode: str = "auto"):
    """No prefix of length l in [kappa, n-1] of a word is a suffix of any word (itself included)."""
    if kappa < 1:
        raise ValueError("kappa must be at least 1")
    X = as_matrix(words)
    N, n = X.shape
    prop = f"{kappa}-WMU"
    work = N * N * max(n - kappa, 0)
    if mode == "exhaustive" or (mode == "auto" and work <= budget):
        for ell in range(kappa, n):
            prefixes = {}
            for i in range(N):
                prefixes.setdefault(X[i, :ell].tobytes(), i)
            for j in range(N):
                i = prefixes.get(X[j, n - ell :].tobytes())
                if i is not None:
                    return VerificationReport(prop, "fail", {"prefix_of": i, "suffix_of": j, "length": ell}, work)
        return VerificationReport(prop, "pass", work=work)
    rng = np.random.default_rng(seed)
    a, b = _pairs(rng, N, trials)
    for x, y in zip(a, b):
        ell = _wmu_pair(X[x], X[y], kappa)
        if ell is not None:
            return VerificationReport(prop, "fail", {"prefix_of": int(x), "suffix_of": int(y), "length": ell},
                                      trials * (n - kappa), "sampled", seed, trials)
    return VerificationReport(prop, "sampled-pass", None, trials * (n - kappa), "sampled", seed, trials)


def verify_mu(words, **kw):
    r = verify_wmu(words, 1, **kw)
    r.property = "MU"
    return r


# primer dimer avoidance

def _complement(X, q):
    # A<->T, C<->G in the 0..3 code; 0<->1 for bits
    return X ^ 1


def _windows(X, f):
    N, n = X.shape
    return np.lib.stride_tricks.sliding_window_view(X, f, axis=1)  # N x (n-f+1) x f


def verify_apd(words, f: int, budget: int = BUDGET, seed: int = 0, trials: int = 10_000,
               mode: str = "auto", q: int | None = None):
    """The complement of any length-f window of a is neither a window of b nor a reversed window of b."""
    X = as_matrix(words)
    N, n = X.shape
    if not 1 <= f <= n:
        raise ValueError("window length must be in [1, n]")
    q = q or (4 if X.size and X.max() > 1 else 2)
    prop = f"{f}-APD"
    W = _windows(X, f)
    C = _complement(W, q)
    npos = n - f + 1
    work = N * N * npos * npos * 2
    if mode == "exhaustive" or (mode == "auto" and work <= budget):
        seen = {}
        for j in range(N):
            for t in range(npos):
                seen.setdefault(W[j, t].tobytes(), (j, t, "forward"))
                seen.setdefault(W[j, t, ::-1].tobytes(), (j, t, "reversed"))
        for i in range(N):
            for s in range(npos):
                hit = seen.get(C[i, s].tobytes())
                if hit is not None:
                    j, t, kind = hit
                    wit = {"a": i, "a_pos": s, "b": j, "b_pos": t, "orientation": kind}
                    return VerificationReport(prop, "fail", wit, work)
        return VerificationReport(prop, "pass", work=work)
    rng = np.random.default_rng(seed)
    a, b = _pairs(rng, N, trials)
    for x, y in zip(a, b):
        fw = {W[y, t].tobytes(): (t, "forward") for t in range(npos)}
        fw.update({W[y, t, ::-1].tobytes(): (t, "reversed") for t in range(npos)})
        for s in range(npos):
            hit = fw.get(C[x, s].tobytes())
            if hit is not None:
                wit = {"a": int(x), "a_pos": s, "b": int(y), "b_pos": hit[0], "orientation": hit[1]}
                return VerificationReport(prop, "fail", wit, trials * npos * npos * 2, "sampled", seed, trials)
    return VerificationReport(prop, "sampled-pass", None, trials * npos * npos * 2, "sampled", seed, trials)


# balance

def verify_balance(words, mode: str = "balanced", q: int | None = None):
    """Per-word balance: ``balanced`` (bits), ``gc`` (quaternary) or ``almost`` (either, +-1 slack)."""
    X = as_matrix(words)
    N, n = X.shape
    if q is None:
        q = 4 if (mode == "gc" or (X.size and X.max() > 1)) else 2
    if mode == "balanced":
        counts = np.count_nonzero(X, axis=1)
        allowed = {n // 2, (n + 1) // 2}
    elif mode == "gc":
        counts = np.count_nonzero(X >= 2, axis=1)
        allowed = {n // 2, (n + 1) // 2}
    elif mode == "almost":
        counts = np.count_nonzero(X >= 2, axis=1) if q == 4 else np.count_nonzero(X, axis=1)
        allowed = {n // 2 - 1, n // 2, (n + 1) // 2, (n + 1) // 2 + 1}
    else:
        raise ValueError(f"unknown balance mode {mode!r}")
    bad = [i for i, c in enumerate(counts.tolist()) if c not in allowed]
    prop = f"balance:{mode}"
    if bad:
        return VerificationReport(prop, "fail", {"word": bad[0], "count": int(counts[bad[0]])}, N * n)
    return VerificationReport(prop, "pass", work=N * n)


# reverse and reverse-complement distances

def verify_reverse_distances(words, d: int, budget: int = BUDGET, seed: int = 0, trials: int = 10_000,
                             mode: str = "auto"):
    """d(a, b^r) >= d and d(a, b^rc) >= d for all ordered pairs, a = b included."""
    X = as_matrix(words)
    N, n = X.shape
    R = X[:, ::-1].copy()
    RC = R ^ 1
    work = 2 * N * N * n
    if mode == "exhaustive" or (mode == "auto" and work <= budget):
        for name, Y in (("reverse", R), ("reverse-complement", RC)):
            best, (i, j) = _pairwise_min(X, Y, skip_diag=False)
            if best < d:
                wit = {"a": i, "b": j, "against": name, "distance": best}
                return VerificationReport("reverse-distances", "fail", wit, work)
        return VerificationReport("reverse-distances", "pass", work=work)
    rng = np.random.default_rng(seed)
    a, b = _pairs(rng, N, trials)
    for name, Y in (("reverse", R), ("reverse-complement", RC)):
        D = (X[a] != Y[b]).sum(axis=1)
        t = int(np.argmin(D))
        if D[t] < d:
            wit = {"a": int(a[t]), "b": int(b[t]), "against": name, "distance": int(D[t])}
            return VerificationReport("reverse-distances", "fail", wit, 2 * trials * n, "sampled", seed, trials)
    return VerificationReport("reverse-distances", "sampled-pass", None, 2 * trials * n, "sampled", seed, trials)


# runs and cyclic classes

def max_run(words) -> int:
    """Longest run of equal symbols over the non-constant words (0 if none)."""
    X = as_matrix(words)
    best = 0
    for w in X:
        if (w == w[0]).all():
            continue
        run = cur = 1
        for a, b in zip(w[:-1], w[1:]):
            cur = cur + 1 if a == b else 1
            run = max(run, cur)
        best = max(best, run)
    return best


def _min_rotation(row: np.ndarray) -> bytes:
    b = row.tobytes()
    return min(b[i:] + b[:i] for i in range(len(b)))


def cyclic_class_census(words_or_code) -> tuple[int, tuple[int, ...]]:
    """(number of cyclic classes, sorted class sizes) of an enumerable word set."""
    if hasattr(words_or_code, "generator_matrix"):
        code = words_or_code
        if code.q**code.k > BUDGET:
            raise ValueError("code too large to enumerate")
        k, q = code.k, code.q
        idx = np.arange(q**k, dtype=np.int64)
        msgs = np.stack([(idx // q**i) % q for i in range(k)], axis=1).astype(np.uint8)
        G = code.generator_matrix
        if q == 2:
            X = ((msgs.astype(np.int64) @ G.astype(np.int64)) & 1).astype(np.uint8)
        else:
            X = np.zeros((msgs.shape[0], G.shape[1]), dtype=np.uint8)
            for i in range(k):
                X ^= _MUL4[msgs[:, i][:, None], G[i][None, :]]
    else:
        X = as_matrix(words_or_code)
    X = np.unique(X, axis=0)
    sizes = {}
    for w in X:
        key = _min_rotation(w)
        sizes[key] = sizes.get(key, 0) + 1
    return len(sizes), tuple(sorted(sizes.values()))


def cyclic_distinct(words) -> VerificationReport:
    """No word is a cyclic shift of another one (distinct classes)."""
    X = as_matrix(words)
    seen = {}
    for i, w in enumerate(X):
        key = _min_rotation(w)
        if key in seen:
            return VerificationReport("cyclic-distinct", "fail", {"a": seen[key], "b": i}, len(X) * X.shape[1])
        seen[key] = i
    return VerificationReport("cyclic-distinct", "pass", work=len(X) * X.shape[1])


def shift_reverse_distinct(words, complement: bool = False) -> VerificationReport:
    """No cyclic shift of a word equals the reverse (or reverse complement) of a word."""
    X = as_matrix(words)
    N, n = X.shape
    R = X[:, ::-1] ^ (1 if complement else 0)
    keys = {}
    for i in range(N):
        for s in range(n):
            keys.setdefault(np.roll(X[i], s).tobytes(), (i, s))
    name = "shift-vs-reverse-complement" if complement else "shift-vs-reverse"
    for j in range(N):
        hit = keys.get(R[j].tobytes())
        if hit is not None:
            return VerificationReport(name, "fail", {"a": hit[0], "shift": hit[1], "b": j}, N * n)
    return VerificationReport(name, "pass", work=N * n)
