import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from primercodes.polyring import (
    NEG_INF,
    Poly,
    complement,
    distance,
    flip_prefix,
    gc_count,
    poly_divmod,
    poly_gcd,
    quotient_mul,
    reflect_within,
    reverse_complement,
    ring_reflect,
    self_reciprocal,
    shift,
    subword,
    weight,
    weight_halves,
)

q_st = st.sampled_from([2, 4])


@st.composite
def poly_pair(draw):
    q = draw(q_st)
    a = draw(st.lists(st.integers(0, q - 1), max_size=12))
    b = draw(st.lists(st.integers(0, q - 1), min_size=1, max_size=8))
    b[-1] = draw(st.integers(1, q - 1))
    return Poly(a, q), Poly(b, q)


@given(poly_pair())
def test_division_identity(ab):
    a, b = ab
    quo, rem = poly_divmod(a, b)
    assert quo * b + rem == a
    assert rem.degree < b.degree


@given(poly_pair())
def test_gcd_divides_both(ab):
    a, b = ab
    g = poly_gcd(a, b)
    assert g.divides(b)
    if not a.is_zero():
        assert g.divides(a)


@given(poly_pair(), st.integers(1, 16))
def test_quotient_ring_product_matches_reduction(ab, n):
    a, b = ab
    xn = Poly.x_n_minus_1(n, a.q)
    assert quotient_mul(a, b, n) == (a * b) % xn


def test_zero_polynomial_degree():
    assert Poly([], 2).degree == NEG_INF
    assert Poly([0, 0], 4).is_zero()


def test_reciprocals():
    g = Poly([1, 1, 3, 1, 3, 1, 1], 4)
    assert self_reciprocal(g)
    assert not self_reciprocal(Poly([1, 1, 0, 1]))
    # the reciprocal is normalised by c(0), which forces a monic result
    assert self_reciprocal(Poly([1, 0, 1], 4))
    assert not self_reciprocal(Poly([2, 0, 2], 4))
    assert reflect_within(Poly([1, 2], 4), 4) == Poly([0, 0, 2, 1], 4)
    assert ring_reflect(Poly([1, 1]), 5) == Poly([0, 0, 0, 1, 1])


def test_word_ops():
    w = np.array([0, 1, 2, 3, 0], dtype=np.uint8)
    assert shift(w, 1).tolist() == [0, 0, 1, 2, 3]
    assert complement(w).tolist() == [1, 0, 3, 2, 1]
    assert reverse_complement(w).tolist() == [1, 2, 3, 0, 1]
    assert flip_prefix(w, 3, 4).tolist() == [2, 3, 0, 3, 0]
    assert subword(w, 2, 4).tolist() == [1, 2, 3]
    assert subword(w, 4, 2).tolist() == [3, 2, 1]
    assert gc_count(w) == 2 and gc_count("ACGTT") == 2
    assert weight(w) == 3 and distance(w, w[::-1]) == 2
    assert weight_halves([1, 1, 0, 1, 1]) == (2, 2)
    with pytest.raises(IndexError):
        subword(w, 0, 3)
    with pytest.raises(ValueError):
        distance(w, w[:3])


@given(st.lists(st.integers(0, 3), min_size=1, max_size=20), st.integers(0, 40))
def test_shift_preserves_metrics(w, i):
    w = np.array(w, dtype=np.uint8)
    assert weight(shift(w, i)) == weight(w)
    assert gc_count(shift(w, i)) == gc_count(w)
    assert shift(shift(w, i), -i).tolist() == w.tolist()
