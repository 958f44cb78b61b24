import numpy as np
import pytest
from hypothesis import given, strategies as st

from bch_atlas import CodeLength, bose_distance, defining_set
from bch_atlas.errors import CapacityError, DegenerateCodeError, DomainError
from bch_atlas.gf2 import (
    BinaryPolynomial, build_field, clmul, encode, generator_polynomial, is_irreducible,
    is_primitive, is_self_reciprocal, min_weight_exhaustive, minimal_polynomial,
    smallest_primitive_polynomial, x_n_plus_1,
)

import oracle

coeff_lists = st.lists(st.integers(0, 1), min_size=1, max_size=40)


def _trim(c):
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


@given(coeff_lists, coeff_lists)
def test_product_matches_schoolbook(a, b):
    pa, pb = BinaryPolynomial.from_coefficients(a), BinaryPolynomial.from_coefficients(b)
    expected = BinaryPolynomial.from_coefficients(oracle.poly_mul(a, b))
    assert pa * pb == expected
    assert clmul(pa.bits, pb.bits) == clmul(pb.bits, pa.bits)


@given(coeff_lists, coeff_lists.filter(lambda c: any(c)))
def test_division_matches_long_division(a, b):
    pa, pb = BinaryPolynomial.from_coefficients(a), BinaryPolynomial.from_coefficients(b)
    q, r = divmod(pa, pb)
    assert q * pb + r == pa
    assert r.degree < pb.degree
    if pb.degree > 0:
        padded = list(a) + [0] * max(0, len(b) - len(a))
        assert r == BinaryPolynomial.from_coefficients(oracle.poly_rem(padded, _trim(b)))


@given(st.integers(0, 1 << 80))
def test_serialization_roundtrip(bits):
    p = BinaryPolynomial(bits)
    assert BinaryPolynomial.parse(p.serialize()) == p


def test_serialization_format():
    assert BinaryPolynomial(0x11D).serialize() == "deg=8;hex=1d01"
    assert BinaryPolynomial(0).serialize() == "deg=-1;hex=00"
    assert str(BinaryPolynomial.from_exponents(6, 1, 0)) == "X^6 + X + 1"
    with pytest.raises(DomainError):
        BinaryPolynomial.parse("deg=3;hex=01")
    with pytest.raises(DomainError):
        BinaryPolynomial.parse("garbage")


def _irreducible_by_trial(bits):
    d = bits.bit_length() - 1
    return d >= 1 and all(
        divmod(BinaryPolynomial(bits), BinaryPolynomial(f))[1].bits != 0
        for f in range(2, 1 << (d // 2 + 1)))


def test_irreducibility_against_trial_division():
    for bits in range(2, 1 << 10):
        assert is_irreducible(BinaryPolynomial(bits)) == _irreducible_by_trial(bits), bits


def test_primitive_by_order():
    for d in range(2, 9):
        p = smallest_primitive_polynomial(d)
        assert p.degree == d and is_primitive(p)
        # powers of X run through every nonzero element
        seen, x = set(), 1
        for _ in range((1 << d) - 1):
            seen.add(x)
            x = oracle.gf_mul(x, 2, p.bits)
        assert len(seen) == (1 << d) - 1 and x == 1
    assert not is_primitive(BinaryPolynomial.from_exponents(4, 3, 2, 1, 0))  # irreducible, order 5


@pytest.mark.parametrize("m, modulus", [
    (3, BinaryPolynomial.from_exponents(6, 1, 0)),
    (4, BinaryPolynomial(0x11D)),
    (16, BinaryPolynomial.from_exponents(32, 7, 5, 3, 2, 1, 0)),
])
def test_field_modulus(m, modulus):
    F = build_field(CodeLength(m))
    assert F.modulus_polynomial == modulus
    assert F.extension_degree == 2 * m


@pytest.mark.parametrize("m", range(2, 8))
def test_unity_root_has_order_n(m):
    L = CodeLength(m)
    F = build_field(L)
    mod = F.modulus_polynomial.bits
    assert oracle.gf_pow(F.unity_root, L.n, mod) == 1
    assert all(oracle.gf_pow(F.unity_root, k, mod) != 1 for k in range(1, L.n))


def test_capacity():
    with pytest.raises(CapacityError):
        build_field(CodeLength(17))


def test_minimal_polynomials_n9():
    F = build_field(CodeLength(3))
    assert minimal_polynomial(F, 0) == BinaryPolynomial.from_exponents(1, 0)
    assert minimal_polynomial(F, 1) == BinaryPolynomial.from_exponents(6, 3, 0)
    assert minimal_polynomial(F, 3) == BinaryPolynomial.from_exponents(2, 1, 0)
    # conjugates share one minimal polynomial
    assert all(minimal_polynomial(F, j) == minimal_polynomial(F, 1) for j in (2, 4, 5, 7, 8))


def _evaluate(g, x, mod):
    acc = 0
    for c in reversed(g.coefficients):
        acc = oracle.gf_mul(acc, x, mod) ^ c
    return acc


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_generator_roots_are_exactly_the_defining_set(m):
    L = CodeLength(m)
    F = build_field(L)
    mod = F.modulus_polynomial.bits
    powers = [oracle.gf_pow(F.unity_root, j, mod) for j in range(L.n)]
    for b in (0, 1):
        for delta in range(2, L.n):
            T = oracle.defining_set(L.n, delta, b)
            if len(T) >= L.n:
                continue
            g = generator_polynomial(F, L, delta, b)
            assert g.degree == len(T)
            assert {j for j in range(L.n) if _evaluate(g, powers[j], mod) == 0} == T


def test_generator_examples():
    L = CodeLength(4)
    g = generator_polynomial(build_field(L), L, 5, 1)
    assert g.degree == 16 and g.weight == 17
    assert g.serialize() == "deg=16;hex=ffff01"
    assert min_weight_exhaustive(g, L.n) == 17
    L = CodeLength(3)
    with pytest.raises(DegenerateCodeError):
        generator_polynomial(build_field(L), L, 4, 0)
    g = generator_polynomial(build_field(L), L, 2, 0)
    assert g == BinaryPolynomial.from_exponents(7, 6, 4, 3, 1, 0)


@pytest.mark.parametrize("m", range(2, 9))
def test_generator_divides_and_is_self_reciprocal(m):
    L = CodeLength(m)
    F = build_field(L)
    for b in (0, 1):
        for delta in range(2, min(L.n, 60)):
            T = defining_set(L, delta, b)
            if T.size >= L.n:
                continue
            g = generator_polynomial(F, L, delta, b)
            assert g.degree == T.size
            assert (x_n_plus_1(L.n) % g).is_zero()
            assert is_self_reciprocal(g)


@pytest.mark.parametrize("m, delta, b", [(3, 2, 1), (3, 2, 0), (3, 3, 0), (4, 2, 1), (4, 3, 0)])
def test_min_weight_against_all_codewords(m, delta, b):
    L = CodeLength(m)
    g = generator_polynomial(build_field(L), L, delta, b)
    expected = min(oracle.codeword_weights(list(g.coefficients), L.n))
    assert min_weight_exhaustive(g, L.n) == expected
    assert expected >= bose_distance(L, delta, b)


def test_min_weight_by_vector_scan():
    L = CodeLength(3)
    g = generator_polynomial(build_field(L), L, 2, 1)
    assert min_weight_exhaustive(g, 9) == oracle.min_weight_by_vectors(list(g.coefficients), 9)


def test_min_weight_cap():
    L = CodeLength(5)
    g = generator_polynomial(build_field(L), L, 2, 1)
    assert min_weight_exhaustive(g, L.n) is None


@given(st.lists(st.integers(0, 1), min_size=3, max_size=3))
def test_encode_is_systematic_codeword(msg):
    L = CodeLength(3)
    g = generator_polynomial(build_field(L), L, 2, 1)
    word = encode(msg, g, 9)
    assert word.dtype == np.uint8 and len(word) == 9
    assert list(word[6:]) == msg
    assert not any(oracle.poly_rem(list(word), list(g.coefficients)))


def test_encode_rejects_bad_length():
    L = CodeLength(3)
    g = generator_polynomial(build_field(L), L, 2, 1)
    with pytest.raises(DomainError):
        encode([1, 0], g, 9)


def test_self_reciprocal_domain():
    assert is_self_reciprocal(BinaryPolynomial.from_exponents(2, 1, 0))
    assert not is_self_reciprocal(BinaryPolynomial.from_exponents(3, 1, 0))
    with pytest.raises(DomainError):
        is_self_reciprocal(BinaryPolynomial.from_exponents(3, 1))
