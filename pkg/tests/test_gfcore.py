import itertools

import pytest

from primercodes.gfcore import (
    GF2,
    GF4,
    PRIMITIVE_BINARY,
    ExtField,
    conjugates,
    dna_decode,
    dna_encode,
    dna_map,
    ext_field,
    factorize,
    field_arith,
    find_primitive_avoiding,
    is_primitive,
    minimal_polynomial,
    multiplicative_order,
    totient,
)
from primercodes.polyring import Poly


def test_gf4_tables_form_a_field():
    for a, b, c in itertools.product(range(4), repeat=3):
        assert GF4.mul(a, GF4.add(b, c)) == GF4.add(GF4.mul(a, b), GF4.mul(a, c))
        assert GF4.mul(a, GF4.mul(b, c)) == GF4.mul(GF4.mul(a, b), c)
    for a in range(1, 4):
        assert GF4.mul(a, GF4.inv(a)) == 1
    # w^2 = w + 1
    assert GF4.mul(2, 2) == 3


def test_field_elem_ops():
    w = GF4(2)
    assert w * w == GF4(3)
    assert w + w == GF4(0)
    assert (w ** 3).value == 1
    assert field_arith(w, None, "inv") == GF4(3)
    with pytest.raises(ZeroDivisionError):
        GF4(0).inverse()
    with pytest.raises(ValueError):
        GF4(1) + GF2(1)


@pytest.mark.parametrize("bits", sorted(PRIMITIVE_BINARY)[:16])
def test_binary_moduli_are_primitive(bits):
    q, m = (2, bits) if bits % 2 else (4, bits // 2)
    F = ExtField(q, m)
    assert multiplicative_order(F(F.generator)) == F.order - 1


def test_extension_moduli():
    assert ext_field(2, 3).modulus == Poly([1, 1, 0, 1])
    assert ext_field(2, 4).modulus == Poly([1, 1, 0, 0, 1])
    assert ext_field(4, 2).modulus == Poly([2, 1, 1], 4)


def test_primitive_counts_match_totient():
    for q, m in ((2, 3), (2, 4), (4, 2), (2, 6)):
        F = ext_field(q, m)
        n = sum(is_primitive(F(a)) for a in range(1, F.order))
        assert n == totient(F.order - 1)


def test_minimal_polynomials_vanish_and_are_irreducible_sized():
    F = ext_field(4, 2)
    for a in range(1, 16):
        M = minimal_polynomial(F(a))
        assert F.eval_poly(M, a) == 0
        assert M.degree == len(conjugates(F, a))


def test_find_primitive_avoiding_respects_roots():
    F = ext_field(4, 2)
    g = Poly([1, 1, 3, 1, 3, 1, 1], 4)
    alpha = find_primitive_avoiding(g, F)
    assert is_primitive(alpha)
    assert F.eval_poly(g, alpha.value) != 0
    assert F.eval_poly(g, F.inv(alpha.value)) != 0
    # the product of all linear factors over GF(16) kills every element
    every = Poly.x_n_minus_1(15, 4)
    with pytest.raises(ValueError):
        find_primitive_avoiding(every, F)


def test_factorize_and_totient():
    assert factorize(255) == ((3, 1), (5, 1), (17, 1))
    assert totient(15) == 8
    assert totient(63) == 36


def test_dna_map_round_trip():
    assert dna_encode([0, 1, 2, 3]) == "ATCG"
    assert dna_decode("gcta") == [3, 2, 1, 0]
    assert dna_map(dna_map([3, 3, 0])) == [3, 3, 0]
    with pytest.raises(ValueError):
        dna_decode("ATX")
    with pytest.raises(ValueError):
        ExtField(3, 2)
