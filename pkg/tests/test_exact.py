"""Rational functions, half-integers, and limit evaluation."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gtrep import (
    HalfInt,
    PoleError,
    RationalFunction,
    UniPoly,
    format_rational,
    parse_rational,
    rf_limit_at,
)

T = RationalFunction.var()
P = UniPoly.var()


def rf(num, den=None):
    return RationalFunction(num, den)


class TestLimits:
    def test_removable_singularity(self):
        f = (T * T - 1) / (T - 1)
        assert rf_limit_at(f, Fraction(1)) == 2

    def test_true_pole_raises(self):
        f = RationalFunction.const(1) / T
        with pytest.raises(PoleError):
            rf_limit_at(f, Fraction(0))

    def test_common_factor_cancels(self):
        f = (T + T) / T
        assert rf_limit_at(f, Fraction(0)) == 2

    def test_plain_point_is_evaluation(self):
        f = (T * T + 3) / (T + 1)
        assert rf_limit_at(f, Fraction(2)) == Fraction(7, 3)
        assert f.value_at(Fraction(2)) == Fraction(7, 3)

    def test_value_at_pole_raises(self):
        f = RationalFunction.const(1) / (T - 2)
        with pytest.raises(PoleError):
            f.value_at(Fraction(2))


class TestRationalFunctionArithmetic:
    def test_sum_over_distinct_poles(self):
        f = RationalFunction.const(1) / (T - 1) + RationalFunction.const(1) / (T + 1)
        assert f == (T + T) / (T * T - 1)

    def test_self_division_is_one(self):
        assert T / T == RationalFunction.const(1)

    def test_product_cancels(self):
        f = (T * T + T) * (RationalFunction.const(1) / T)
        assert f == T + 1

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RationalFunction.const(1) / RationalFunction.const(0)

    def test_scalar_mixing(self):
        f = 2 * T + 1
        assert f.value_at(Fraction(3)) == 7
        assert (1 - T).value_at(Fraction(4)) == -3


small_fracs = st.fractions(
    min_value=-5, max_value=5, max_denominator=6
).filter(lambda x: x != 0)

small_polys = st.lists(
    st.integers(min_value=-4, max_value=4), min_size=1, max_size=4
).map(lambda cs: UniPoly(cs))


@given(small_fracs, small_fracs, small_fracs)
def test_chain_product_telescopes(p, q, r):
    # (p/q)*(q/r) == p/r with the symbols replaced by shifted variables
    a = (T + p) / (T + q)
    b = (T + q) / (T + r)
    assert a * b == (T + p) / (T + r)


@given(small_polys, small_polys, st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_limit_agrees_with_substitution(num, den, x0):
    if not den:
        return
    f = RationalFunction(num, den)
    if den(x0) != 0:
        assert rf_limit_at(f, x0) == num(x0) / den(x0)


@given(small_polys, small_polys)
def test_poly_divmod_invariant(a, b):
    if not b:
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert (not r) or r.degree < b.degree


class TestParseFormat:
    def test_parse_accepts_both_shapes(self):
        assert parse_rational("-3/2") == Fraction(-3, 2)
        assert parse_rational("5") == Fraction(5)

    def test_format_drops_unit_denominator(self):
        assert format_rational(Fraction(-3, 2)) == "-3/2"
        assert format_rational(Fraction(5)) == "5"
        assert format_rational(HalfInt.whole(2).as_fraction()) == "2"

    def test_rejects_garbage(self):
        for bad in ("", "1/0", "x", "1.5", "1/2/3"):
            with pytest.raises((ValueError, ZeroDivisionError)):
                parse_rational(bad)

    @given(st.fractions(max_denominator=100))
    def test_roundtrip(self, x):
        assert parse_rational(format_rational(x)) == x


class TestHalfInt:
    def test_arithmetic(self):
        a = HalfInt(3)   # 3/2
        b = HalfInt.whole(1)
        assert (a + b).as_fraction() == Fraction(5, 2)
        assert (a - b).as_fraction() == Fraction(1, 2)
        assert a + 1 == HalfInt(5)
        assert -a == HalfInt(-3)

    def test_integrality_flag(self):
        assert HalfInt.whole(4).is_integer
        assert not HalfInt(1).is_integer

    def test_from_fraction_rejects_thirds(self):
        with pytest.raises(ValueError):
            HalfInt.from_fraction(Fraction(1, 3))

    @given(st.integers(-20, 20), st.integers(-20, 20))
    def test_order_matches_fraction_order(self, x, y):
        a, b = HalfInt(x), HalfInt(y)
        assert (a < b) == (a.as_fraction() < b.as_fraction())
        assert (a == b) == (x == y)

    def test_str_uses_rational_form(self):
        assert str(HalfInt(-1)) == "-1/2"
        assert str(HalfInt.whole(3)) == "3"
