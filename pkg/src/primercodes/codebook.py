"""A small container for enumerable codebooks plus export helpers."""

from __future__ import annotations

import csv
import io

import numpy as np

from .gfcore import DNA_ALPHABET


def render(word, q: int) -> str:
    """Bits as 0/1, quaternary words as DNA letters."""
    w = np.asarray(word).tolist()
    if q == 4:
        return "".join(DNA_ALPHABET[s] for s in w)
    return "".join(str(s) for s in w)


class Codebook:
    """Enumerable code with an encoder from a message space and its inverse.

    Subclasses implement ``messages``, ``encode`` and ``decode``; ``words``
    lists the encodings of ``messages()`` in order.
    """

    name = "codebook"

    def __init__(self, q: int, n: int, meta: dict | None = None):
        self.q = q
        self.n = n
        self.meta = dict(meta or {})

    def messages(self):
        raise NotImplementedError

    def encode(self, msg):
        raise NotImplementedError

    def decode(self, word):
        raise NotImplementedError

    def _build_words(self) -> np.ndarray:
        return np.array([self.encode(m) for m in self.messages()], dtype=np.uint8).reshape(-1, self.n)

    @property
    def words(self) -> np.ndarray:
        if not hasattr(self, "_words"):
            self._words = self._build_words()
            self._words.setflags(write=False)
        return self._words

    @property
    def size(self) -> int:
        return len(self.messages())

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def metadata(self) -> dict:
        out = {"construction": self.name, "q": self.q, "n": self.n, "size": len(self)}
        out.update(self.meta)
        return out

    def export(self, fmt: str = "lines") -> str:
        return export_words(self.words, self.q, fmt)


def export_words(words, q: int, fmt: str = "lines") -> str:
    """Render words one per line, as CSV (index, word, gc_count) or as FASTA."""
    rows = [render(w, q) for w in words]
    if fmt == "lines":
        return "".join(r + "\n" for r in rows)
    if fmt == "fasta":
        return "".join(f">primer_{i}\n{r}\n" for i, r in enumerate(rows))
    if fmt == "csv":
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\n")
        out.writerow(["index", "word", "gc_count"])
        for i, (w, r) in enumerate(zip(words, rows)):
            gc = int(np.count_nonzero(np.asarray(w) >= 2)) if q == 4 else int(np.count_nonzero(w))
            out.writerow([i, r, gc])
        return buf.getvalue()
    raise ValueError(f"unknown export format {fmt!r} (lines, csv, fasta)")
