"""
DNA computing codes
===================

Codewords that stay far from each other's reverses and reverse
complements, with balanced GC content.
"""

import numpy as np

from primercodes import oracle
from primercodes.codebook import render
from primercodes.dnacomp import construct_dna_computing, pi_params
from primercodes.primer import (
    RcGenSet,
    example1_code,
    example1_rc_set,
    search_rc_generating,
    validate_rc_generating,
)

C = example1_code()

# The seventeen-polynomial rc set is not rc2-generating:
S = example1_rc_set()
print(validate_rc_generating(C, RcGenSet(S.hstar, S.p, "rc2")))

# so search for one: h* = M(a) M(1/a) and p = M(a) for a primitive a
# that is not a root of g.
S2 = search_rc_generating(C, "rc2")
print(S2.to_json())

print("pi mask:", render(pi_params(15).mask, 4))

D = construct_dna_computing(C, S2)
W = D.words
print(len(W), "words")
print(oracle.verify_balance(W, "gc"))
print(oracle.verify_distance(W, 5))
print(oracle.verify_reverse_distances(W, 5))

for w in W[:4]:
    print(render(w, 4), render(w[::-1] ^ 1, 4))

m, i = D.decode(W[321])
print("decode:", m, i, np.array_equal(D.encode((m, i)), W[321]))
