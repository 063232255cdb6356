import numpy as np
import pytest

from primercodes import oracle
from primercodes.cyclic import DecodeError
from primercodes.dnacomp import construct_dna_computing, pi_map, pi_params
from primercodes.primer import example1_code, example1_rc_set, search_rc_generating


@pytest.fixture(scope="module")
def dna():
    C = example1_code()
    return construct_dna_computing(C, search_rc_generating(C, "rc2"))


def test_pi_params():
    P = pi_params(15)
    assert P.s == 4
    assert P.mask.tolist() == [2] * 4 + [0] * 7 + [2] * 4
    assert pi_params(13).s == 3
    with pytest.raises(ValueError):
        pi_params(8)


def test_pi_map_involution():
    w = np.arange(15, dtype=np.uint8) % 4
    assert np.array_equal(pi_map(pi_map(w)), w)
    assert pi_map(w)[:4].tolist() == [2, 3, 0, 1]


def test_dna_code_properties(dna):
    W = dna.words
    assert W.shape == (1024, 15)
    assert oracle.verify_balance(W, "gc").ok
    assert oracle.verify_reverse_distances(W, 5, mode="exhaustive").ok
    assert oracle.shift_reverse_distinct(W).ok


def test_dna_round_trip(dna):
    for idx in range(0, 1024, 37):
        m, i = dna.decode(dna.words[idx])
        assert np.array_equal(m, dna.messages()[idx][0]) and i == 1
        assert np.array_equal(dna.encode((m, i)), dna.words[idx])


def test_dna_rejects():
    C = example1_code()
    with pytest.raises(ValueError):
        construct_dna_computing(C, example1_rc_set())  # an rc set, not rc2
    code = construct_dna_computing(C, search_rc_generating(C, "rc2"))
    bad = code.words[0].copy()
    bad[7] ^= 3
    with pytest.raises(DecodeError):
        code.decode(bad)
