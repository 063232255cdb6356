"""
Primer codes from run-limited blocks, and an almost balanced WMU code
=====================================================================

The block code avoids long runs and carries a marker 01^ell0 exactly once.
Stacking r blocks behind a prefix and adding padded parity from a binary
BCH code gives a primer code of length 55.
"""

import numpy as np

from primercodes import oracle
from primercodes.codebook import render
from primercodes.primer import (
    almost_desk_code,
    build_apd_constrained,
    construct_primer_almost_balanced,
    construct_primer_general,
    rll_decode,
    rll_encode,
)

# The run-limited encoder adds one bit and forbids runs of ell - 1.
x = np.zeros(11, dtype=np.uint8)
y = rll_encode(x, 10)
print(x, "->", y, "max run", oracle.max_run([y]))
assert np.array_equal(rll_decode(y, 10), x)

###############################################################################
# ell = 8: blocks of length 16, 6 marker slots times 2^4 payloads.

A = build_apd_constrained(8)
print(len(A), "blocks, e.g.")
for w in A.words[:4]:
    print(" ", render(w, 2))

###############################################################################
# n = 55 from two blocks and a shortened [44,32,5] BCH code.

for prefix in ("ones", "zeros"):
    P = construct_primer_general(prefix=prefix)
    W = P.words
    print(prefix, render(P.prefix, 2), W.shape)
    print("  ", oracle.verify_mu(W, mode="sampled", seed=0, trials=10_000))
    print("  ", oracle.verify_apd(W, 32, mode="sampled", seed=0, trials=10_000))

# Two bit errors in the payload are corrected by the BCH parity.
P = construct_primer_general(prefix="zeros")
w = P.encode((5, 77))
w[[12, 30]] ^= 1
print("decoded blocks:", P.decode(w))

###############################################################################
# [15,3]_2 with period-3 codewords: one word per cyclic class, shifted
# and masked.

B = almost_desk_code()
print("input codewords:", len(B.codewords()), "max run:", oracle.max_run(B.codewords()))
code = construct_primer_almost_balanced(B)
for w in code.words:
    print(" ", render(w, 2), "weight", w.sum())
print(oracle.verify_wmu(code.words, 4))
