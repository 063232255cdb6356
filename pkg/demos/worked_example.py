"""
A quaternary primer code from a reversible cyclic code
======================================================

We start from a [15,9] cyclic code over GF(4), check that it is reversible
and contains the all-one word, then carve out the subcode driven by an
rc-generating set and look at its size, distance and correlation.
"""

import math

import numpy as np

from primercodes import oracle
from primercodes.codebook import render
from primercodes.cyclic import code_properties
from primercodes.primer import (
    construct_primer_rc,
    example1_code,
    example1_rc_set,
    redundancy,
    validate_rc_generating,
)

# The generator, ascending coefficients with 2 = w and 3 = w + 1.
C = example1_code()
print("g =", C.g)
print("n, k =", C.n, C.k)

# g(1) != 0 means the all-one word is a codeword; self-reciprocal g means
# the code is closed under reversal.
print("contains 1^n, reversible:", code_properties(C))

# 4^9 codewords is small enough to scan them all.
d, how = oracle.min_distance_linear(C.generator_matrix, 4)
print(f"minimum distance {d} ({how})")

###############################################################################
# The rc-generating set: h* and seventeen coset polynomials p_i.

S = example1_rc_set()
report = validate_rc_generating(C, S)
print(report)

code = construct_primer_rc(C, S)
print("size", code.size, ">= 2^14:", code.size >= 2**14)

red = redundancy(C.n, code.size, 4)
print(f"redundancy {red:.3f} vs (d+1) log4(n+1) = {(d + 1) * math.log(C.n + 1, 4):g}")

###############################################################################
# The full 17408-word code is too big for an exhaustive pairwise scan of
# every property, so restrict messages to deg m < 2 (272 words).

sub = construct_primer_rc(C, S, max_m_degree=2)
W = sub.words
print(oracle.verify_distance(W, 5))
print(oracle.verify_wmu(W, 9))
print(oracle.verify_apd(W, 9))

# A few codewords as DNA strings.
for w in W[:5]:
    print(render(w, 4))

# Decoding recovers (m, i) by polynomial division.
m, i = sub.decode(W[100])
print("word 100 decodes to m =", m, "i =", i)
assert np.array_equal(sub.encode((m, i)), W[100])
