import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primercodes import oracle
from primercodes.cyclic import DecodeError, LinearEncoder, bch_narrow_sense
from primercodes.polyring import Poly
from primercodes.primer import (
    ApdBlockParams,
    RcGenSet,
    almost_desk_code,
    build_apd_constrained,
    construct_primer_almost_balanced,
    construct_primer_general,
    construct_primer_rc,
    example1_code,
    example1_rc_set,
    extend_rc_generating,
    pad_parity,
    redundancy,
    rll_capacity_ok,
    rll_decode,
    rll_encode,
    search_rc_generating,
    unpad_parity,
    validate_rc_generating,
)


@pytest.fixture(scope="module")
def C1():
    return example1_code()


@pytest.fixture(scope="module")
def S1():
    return example1_rc_set()


# run-length limited encoder

@pytest.mark.parametrize("ell,L", [(5, 6), (6, 9), (7, 10), (8, 5), (8, 12)])
def test_rll_exhaustive(ell, L):
    seen = set()
    for bits in itertools.product((0, 1), repeat=L - 1):
        y = rll_encode(np.array(bits, dtype=np.uint8), ell)
        assert len(y) == L
        assert oracle.max_run([y]) < ell - 1
        assert rll_decode(y, ell).tolist() == list(bits)
        seen.add(y.tobytes())
    assert len(seen) == 2 ** (L - 1)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_rll_sampled_long(data):
    ell, L = data.draw(st.sampled_from([(10, 60), (12, 200)]))
    msg = np.array(data.draw(st.lists(st.integers(0, 1), min_size=L - 1, max_size=L - 1)), dtype=np.uint8)
    y = rll_encode(msg, ell)
    assert oracle.max_run([y]) < ell - 1
    assert np.array_equal(rll_decode(y, ell), msg)


def test_rll_capacity():
    assert rll_capacity_ok(6, 5)
    assert not rll_capacity_ok(12, 5)  # 2^11 inputs but only 1854 admissible outputs
    assert not rll_capacity_ok(6, 4)
    with pytest.raises(ValueError):
        rll_encode(np.zeros(11, dtype=np.uint8), 5)


# APD-constrained blocks

def test_apd_block_ell8():
    A = build_apd_constrained(8)
    W = A.words
    assert W.shape == (96, 16)
    assert len({w.tobytes() for w in W}) == 96
    assert (W[:, -1] == 1).all()
    for idx in (0, 17, 95):
        msg = A.index_to_message(idx)
        j, x = A.decode(W[idx])
        assert j == msg[0] and np.array_equal(x, msg[1])
        assert A.message_to_index(msg) == idx
    with pytest.raises(ValueError):
        build_apd_constrained(7)


def test_pad_parity_frozen():
    p = np.arange(12) % 2
    padded = pad_parity(p, 8)
    assert padded.tolist() == [0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 1]
    assert np.array_equal(unpad_parity(padded, 8, 12), p)


def test_apd_params():
    P = ApdBlockParams(8, 2, 12)
    assert (P.f, P.n) == (16, 55)
    with pytest.raises(ValueError):
        ApdBlockParams(8, 2, 20)


@pytest.fixture(scope="module")
def general_zeros():
    return construct_primer_general(prefix="zeros")


def test_primer_general_shape(general_zeros):
    code = general_zeros
    assert code.size == 96**2
    assert code.words.shape == (9216, 55)
    assert code.words[:, :9].tolist()[0] == [0] * 8 + [1]


def test_primer_general_decode_corrects(general_zeros):
    code = general_zeros
    rng = np.random.default_rng(5)
    for idx in rng.integers(0, code.size, 50):
        msg = code.messages()[idx]
        w = code.encode(msg)
        assert np.array_equal(w, code.words[idx])
        # two errors in the data-plus-parity region
        pos = rng.choice(np.r_[9:41, 41:49, 50:54], 2, replace=False)
        noisy = w.copy()
        noisy[pos] ^= 1
        assert code.decode(noisy) == tuple(msg)
    with pytest.raises(DecodeError):
        code.decode(np.zeros(10, dtype=np.uint8))


def test_primer_general_prefix_variants():
    ones = construct_primer_general()
    assert ones.prefix.tolist() == [0] + [1] * 8
    zeros = construct_primer_general(prefix="zeros")
    sample = zeros.words[::97]
    assert oracle.verify_mu(sample, mode="exhaustive").ok
    with pytest.raises(ValueError):
        construct_primer_general(prefix="other")
    with pytest.raises(ValueError):
        construct_primer_general(ApdBlockParams(8, 2, 12), LinearEncoder(bch_narrow_sense(6, 5)))


def test_ones_prefix_not_mutually_uncorrelated():
    # words open with 01 and the padded parity can end in 01
    code = construct_primer_general()
    r = oracle.verify_mu(code.words[:400], mode="exhaustive")
    assert r.verdict == "fail"
    assert r.witness["length"] == 2


# almost balanced codes

def test_almost_balanced_desk():
    B = almost_desk_code()
    assert (B.n, B.k) == (15, 3)
    assert oracle.max_run(B.codewords()) == 2
    code = construct_primer_almost_balanced(B)
    W = code.words
    assert W.shape == (4, 15)
    assert code.meta["input_code_size"] == 8
    assert oracle.verify_balance(W, "almost").ok
    assert oracle.verify_wmu(W, 4, mode="exhaustive").ok
    assert [code.decode(w) for w in W] == [0, 1, 2, 3]


def test_almost_balanced_rejects():
    with pytest.raises(ValueError):
        construct_primer_almost_balanced(bch_narrow_sense(4, 3))  # k too large


# rc-generating sets

def test_worked_set_valid(C1, S1):
    r = validate_rc_generating(C1, S1)
    assert r.ok and r.checks == 289
    assert S1.P == 17


def test_worked_set_is_not_rc2(C1, S1):
    r = validate_rc_generating(C1, RcGenSet(S1.hstar, S1.p, "rc2"))
    assert not r.ok
    assert (r.condition, r.i, r.j, r.s) == ("R5'", 1, 1, 8)


def test_search_frozen(C1):
    S = search_rc_generating(C1, "rc")
    assert S.hstar.to_list() == [1, 2, 2, 2, 1] and [p.to_list() for p in S.p] == [[1]]
    S2 = search_rc_generating(C1, "rc2")
    assert S2.hstar.to_list() == [1, 2, 2, 2, 1] and [p.to_list() for p in S2.p] == [[2, 1, 1]]


def test_set_json_round_trip(S1):
    again = RcGenSet.from_dict(S1.to_dict(), 4)
    assert again == S1


def test_extend_keeps_validity(C1):
    S = search_rc_generating(C1, "rc")
    big = extend_rc_generating(C1, S, limit=4)
    assert len(big.p) == 4
    assert validate_rc_generating(C1, big).ok


def test_mutated_hstar_rejected(C1, S1):
    h = S1.hstar.to_list()
    h[2] = 0
    assert not validate_rc_generating(C1, RcGenSet(Poly(h, 4), S1.p)).ok


def test_rc_subcode(C1, S1):
    code = construct_primer_rc(C1, S1)
    assert code.size == 17 * 4**5
    small = construct_primer_rc(C1, S1, max_m_degree=2)
    W = small.words
    assert W.shape == (272, 15)
    assert oracle.min_distance(W)[0] >= 5
    assert all(C1.contains(w) for w in W[::17])
    for msg in small.messages()[::31]:
        m, i = small.decode(small.encode(msg))
        assert np.array_equal(m, msg[0]) and i == msg[1]
    assert redundancy(15, code.size, 4) == pytest.approx(15 - np.log(17408) / np.log(4))


def test_rc_subcode_decode_rejects(C1, S1):
    code = construct_primer_rc(C1, S1, max_m_degree=2)
    bad = code.words[0].copy()
    bad[3] ^= 1
    with pytest.raises(DecodeError):
        code.decode(bad)
