from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qimm.ratpoly import ONE, Q, RatPoly, ZERO, from_ints

rationals = st.fractions(
    min_value=-50, max_value=50, max_denominator=20
)
polys = st.lists(rationals, max_size=8).map(RatPoly)


def test_canonical_strips_trailing_zeros():
    assert RatPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert RatPoly((0, 0)).coeffs == ()
    assert RatPoly(()).coeffs == ()
    assert ZERO.is_zero()


def test_difference_of_squares():
    one_plus = from_ints([1, 1])
    one_minus = from_ints([1, -1])
    assert one_plus * one_minus == from_ints([1, 0, -1])


def test_trinomial_fourth_power_coefficients():
    p = from_ints([1, 1, 1]) ** 4
    assert p.coeffs == (1, 4, 10, 16, 19, 16, 10, 4, 1)


def test_pow_zero_is_one():
    assert (from_ints([3, 1, 7]) ** 0) == ONE
    assert (ZERO ** 0) == ONE


def test_eval_squared_trinomial_at_one():
    p = from_ints([1, 1, 1]) ** 2
    assert p(1) == 9


def test_eval_at_zero():
    assert from_ints([1, 0, -1])(0) == 1


def test_eval_rational_coefficients():
    # 1 + 3q^2 + (4/3)q^4 at q=2: 1 + 12 + 64/3, by direct hand arithmetic
    p = RatPoly((1, 0, 3, 0, Fraction(4, 3)))
    assert p(2) == 1 + 12 + Fraction(64, 3)
    assert p(2) == Fraction(103, 3)


def test_even_nonneg_pairs():
    assert from_ints([1, 0, 2, 0, 2]).even_nonneg() == (True, True)
    assert from_ints([1, 0, -1]).even_nonneg() == (True, False)
    assert Q.even_nonneg() == (False, True)


def test_degree_additivity():
    a = from_ints([1, 2, 3])
    b = from_ints([-5, 0, 0, 7])
    assert (a * b).degree() == a.degree() + b.degree()
    assert ZERO.degree() == -1


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        Q ** -1


def test_json_round_trip():
    p = RatPoly((Fraction(1), Fraction(0), Fraction(-4, 3)))
    assert p.to_json_list() == ["1/1", "0/1", "-4/3"]
    assert RatPoly.from_json_list(p.to_json_list()) == p


def test_format():
    assert str(RatPoly((1, 0, 3, 0, Fraction(4, 3)))) == "1 + 3q^2 + 4/3 q^4"
    assert str(from_ints([1, 0, -1])) == "1 - q^2"
    assert str(ZERO) == "0"
    assert str(from_ints([0, -2])) == "-2q"


@given(polys, polys, rationals)
def test_eval_is_multiplicative(a, b, t):
    assert (a * b)(t) == a(t) * b(t)


@given(polys, polys, rationals)
def test_eval_is_additive(a, b, t):
    assert (a + b)(t) == a(t) + b(t)


@given(polys)
def test_canonical_idempotent(p):
    assert RatPoly(p.coeffs) == p


@given(polys, st.integers(min_value=0, max_value=8))
def test_pow_peels_one_factor(p, m):
    assert p ** (m + 1) == (p ** m) * p


@given(polys)
def test_serialization_round_trip(p):
    assert RatPoly.from_json_list(p.to_json_list()) == p
