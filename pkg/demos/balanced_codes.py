"""
Balanced and GC-balanced error-correcting codes
===============================================

Two ways to balance codewords without a table of short balanced words:
shift a cyclic codeword until flipping its first half balances it, or
carry the balancing index of a prefix flip in a second codeword.
"""

import numpy as np

from primercodes import oracle
from primercodes.balance import (
    balancing_shift,
    construct_bin_balanced,
    construct_gc_balanced,
    knuth_index,
)
from primercodes.codebook import render
from primercodes.cyclic import code_from_generator
from primercodes.polyring import Poly

# Shift-and-flip: for odd n some cyclic shift always works.
w = np.array([1, 1, 1, 1, 1, 0, 0], dtype=np.uint8)
i, v = balancing_shift(w, 2)
print("shift", i, "->", v, "weight", v.sum())

###############################################################################
# The [7,4,3] Hamming code becomes a balanced length-8 code.

ham = code_from_generator(2, 7, Poly([1, 1, 0, 1]), distance=3, status="exact")

for mode in ("encodable", "census"):
    B = construct_bin_balanced(ham, mode=mode)
    print(mode, len(B), "words; min distance", oracle.min_distance(B.words)[0])
    print(B.words)

# The algebraic encoder reaches 2 of the 4 cyclic classes; the census mode
# takes all of them, which is what the 2^k/n size estimate counts.
print("2^k/n =", 2**4 / 7)

###############################################################################
# GC-balanced words of length 26 from a [31,26,3] and a [26,21,3] code.

gc = construct_gc_balanced()
print(gc.metadata())

rng = np.random.default_rng(1)
m = rng.integers(0, 2, 26, dtype=np.uint8)
print("prefix-flip index of m:", knuth_index(m))

y = gc.encode(m, 7)
print(render(y, 4), "GC =", int((y >= 2).sum()))

# One substituted base is corrected.
y[3] ^= 2
m2, i2 = gc.decode(y)
print("recovered:", np.array_equal(m2, m), i2)
