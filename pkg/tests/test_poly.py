import itertools

import pytest
from hypothesis import given, strategies as st

from qctwoweight.errors import FieldMismatchError
from qctwoweight.field import GF
from qctwoweight.poly import (
    CyclicWord,
    Polynomial,
    cyclic_mul,
    find_simplex_generators,
    is_simplex_generator,
    poly_add,
    poly_divmod,
    poly_mul,
    simplex_length,
)

from oracles import poly_remainder, simplex_generators_brute

F2, F3 = GF(2), GF(3)
G1_EXAMPLE1 = Polynomial(F2, [1, 1, 1, 0, 1])
# x^10 - x^9 + x^8 - x^6 - x^5 + x^4 + x^3 + x^2 + 1
G1_EXAMPLE2 = Polynomial(F3, [1, 0, 1, 1, 1, -1, -1, 0, 1, -1, 1])


def P(field, *coeffs):
    return Polynomial(field, coeffs)


def polys(q, max_len=6):
    return st.lists(st.integers(0, q - 1), max_size=max_len).map(lambda c: Polynomial(GF(q), c))


def test_canonical_form():
    assert P(F2, 1, 0, 0).coeffs == (1,)
    assert P(F2, 0, 0).is_zero
    assert P(F2).degree == -1
    assert G1_EXAMPLE2.coeffs == (1, 0, 1, 1, 1, 2, 2, 0, 1, 2, 1)


def test_poly_add():
    assert poly_add(P(F2, 1, 1), P(F2, 1, 1)).is_zero
    assert poly_add(P(F2, 1, 1), P(F2, 0, 0, 1)) == P(F2, 1, 1, 1)
    p = P(F3, 2, 0, 1)
    assert poly_add(p, P(F3)) == p


def test_poly_mul():
    assert poly_mul(P(F2, 1, 1), P(F2, 1, 1)) == P(F2, 1, 0, 1)
    assert poly_mul(P(F2, 1, 1, 0, 1), G1_EXAMPLE1) == Polynomial.x_pow_minus_one(F2, 7)
    assert poly_mul(G1_EXAMPLE1, Polynomial.one(F2)) == G1_EXAMPLE1


def test_poly_divmod():
    xm1 = Polynomial.x_pow_minus_one(F2, 7)
    assert poly_divmod(xm1, P(F2, 1, 1, 0, 1)) == (G1_EXAMPLE1, P(F2))
    x = P(F2, 0, 1)
    assert poly_divmod(P(F2, 0, 0, 1), x) == (x, P(F2))
    assert poly_divmod(P(F2, 1, 1), P(F2, 0, 0, 1)) == (P(F2), P(F2, 1, 1))


def test_divmod_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(P(F3, 1), P(F3))


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        P(F2, 1) + P(F3, 1)
    with pytest.raises(FieldMismatchError):
        cyclic_mul(CyclicWord(F2, [1, 0, 0]), P(F3, 0, 1))


def test_ring_laws_exhaustive_gf2():
    all_polys = [Polynomial(F2, c) for c in itertools.product((0, 1), repeat=4)]
    for a, b in itertools.product(all_polys, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
    for a, b, c in itertools.product(all_polys[::3], repeat=3):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


@given(polys(3, 8), polys(3, 5))
def test_divmod_round_trip(a, b):
    if b.is_zero:
        return
    quot, rem = divmod(a, b)
    assert quot * b + rem == a
    assert rem.degree < b.degree
    # remainder agrees with the independent long division
    assert list(rem.coeffs) == poly_remainder(list(a.coeffs), list(b.coeffs), 3)


@given(polys(2, 8), polys(2, 8))
def test_mul_degree(a, b):
    if not (a.is_zero or b.is_zero):
        assert (a * b).degree == a.degree + b.degree


def test_cyclic_mul_examples():
    x = P(F2, 0, 1)
    assert cyclic_mul(CyclicWord(F2, [1, 0, 0]), x).coeffs == (0, 1, 0)
    w = CyclicWord(F2, [1, 0, 1])
    assert cyclic_mul(w, Polynomial.monomial(F2, 3)) == w
    word = CyclicWord.from_poly(G1_EXAMPLE1, 7)
    assert word.coeffs == (1, 1, 1, 0, 1, 0, 0)
    assert cyclic_mul(word, x).coeffs == (0, 1, 1, 1, 0, 1, 0)


@given(st.integers(1, 9).flatmap(lambda m: st.lists(st.integers(0, 2), min_size=m, max_size=m)))
def test_full_rotation_identity(coeffs):
    w = CyclicWord(F3, coeffs)
    assert cyclic_mul(w, Polynomial.monomial(F3, w.m)) == w


@given(polys(3, 10), polys(3, 10), st.integers(1, 8))
def test_cyclic_mul_matches_reduction(a, b, m):
    lhs = cyclic_mul(CyclicWord.from_poly(a, m), b)
    assert lhs == CyclicWord.from_poly(a * b, m)


@pytest.mark.parametrize("text", ["1 1 1 0 1", "0", "2 0 1", "1"])
def test_text_round_trip(text):
    assert Polynomial.from_text(F3, text).to_text() == text


@given(polys(3, 12))
def test_text_round_trip_property(p):
    assert Polynomial.from_text(F3, p.to_text()) == p


def test_text_rejects_out_of_range():
    with pytest.raises(ValueError):
        Polynomial.from_text(F2, "1 2")


def test_simplex_generators_gf2_k3():
    gens = find_simplex_generators(F2, 3)
    assert G1_EXAMPLE1 in gens
    assert [g.coeffs for g in gens] == simplex_generators_brute(2, 3)
    assert len(gens) == 2


def test_simplex_generators_gf3_k3():
    assert G1_EXAMPLE2 in find_simplex_generators(F3, 3)


@pytest.mark.parametrize("q, k", [(2, 2), (2, 4), (3, 3)])
def test_simplex_generators_match_brute_force(q, k):
    assert [g.coeffs for g in find_simplex_generators(GF(q), k)] == simplex_generators_brute(q, k)


@pytest.mark.parametrize("q, k", [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3)])
def test_simplex_generators_divide_and_are_equidistant(q, k):
    F = GF(q)
    m = simplex_length(q, k)
    for g in find_simplex_generators(F, k):
        assert (Polynomial.x_pow_minus_one(F, m) % g).is_zero
        assert is_simplex_generator(g, k)


@pytest.mark.parametrize("q, k", [(3, 2), (3, 4), (2, 1), (2, 21)])
def test_simplex_generator_preconditions(q, k):
    with pytest.raises(ValueError):
        find_simplex_generators(GF(q), k)


def test_is_simplex_generator_rejects():
    assert not is_simplex_generator(P(F2, 1, 0, 1, 1, 1, 1), 3)
    assert not is_simplex_generator(P(F2, 1, 1), 3)


def test_no_cyclic_ternary_simplex_of_dimension_two():
    # gcd(2, 2) != 1, and indeed no monic divisor of x^4 - 1 over GF(3) is equidistant
    assert simplex_generators_brute(3, 2) == []
