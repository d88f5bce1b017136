"""Truncated Laurent series: ring axioms, precision rules, text form."""

import pytest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from parhiggs.series import (
    AtLeast,
    PrecisionError,
    TruncatedLaurentSeries,
    parse,
    val_at_least,
)


def series_strategy(min_exp=-3, max_exp=6, min_prec=1, max_prec=8):
    @st.composite
    def build(draw):
        prec = draw(st.integers(min_prec, max_prec))
        nterms = draw(st.integers(0, 5))
        coeffs = {}
        for _ in range(nterms):
            e = draw(st.integers(min_exp, min(max_exp, prec - 1)))
            num = draw(st.integers(-9, 9))
            den = draw(st.integers(1, 4))
            coeffs[e] = coeffs.get(e, 0) + Fraction(num, den)
        return TruncatedLaurentSeries(coeffs, prec)

    return build()


@given(series_strategy(), series_strategy(), series_strategy())
@settings(max_examples=200)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    # distributivity at the common precision of both sides
    lhs = a * (b + c)
    rhs = a * b + a * c
    prec = min(lhs.precision, rhs.precision)
    assert lhs.truncate(prec) == rhs.truncate(prec)


@given(series_strategy())
@settings(max_examples=100)
def test_additive_identities(a):
    zero = TruncatedLaurentSeries.zero(a.precision)
    one = TruncatedLaurentSeries.constant(1, a.precision)
    assert a + zero == a
    assert (a - a).is_zero()
    prod = a * one
    assert prod.truncate(prod.precision) == a.truncate(prod.precision)


@given(series_strategy(), series_strategy())
@settings(max_examples=200)
def test_mul_precision_rule(a, b):
    """prec(ab) = min(prec(a) + val(b), prec(b) + val(a)), val of zero = prec."""
    va = a.low_bound
    vb = b.low_bound
    assert (a * b).precision == min(a.precision + vb, b.precision + va)


@given(series_strategy(), series_strategy())
@settings(max_examples=200)
def test_add_precision_rule(a, b):
    assert (a + b).precision == min(a.precision, b.precision)


def test_coefficient_beyond_precision():
    s = TruncatedLaurentSeries({0: 1}, 3)
    assert s.coefficient(2) == 0
    with pytest.raises(PrecisionError):
        s.coefficient(3)


def test_valuation_three_valued():
    s = TruncatedLaurentSeries({2: 5}, 4)
    assert s.valuation() == 2
    z = TruncatedLaurentSeries.zero(4)
    v = z.valuation()
    assert isinstance(v, AtLeast) and v.bound == 4
    assert val_at_least(v, 4) is True
    assert val_at_least(v, 5) is None
    assert val_at_least(2, 2) is True
    assert val_at_least(2, 3) is False


def test_shift_and_truncate():
    s = TruncatedLaurentSeries({-1: 2, 1: 3}, 4)
    assert s.shift(2) == TruncatedLaurentSeries({1: 2, 3: 3}, 6)
    assert s.truncate(1) == TruncatedLaurentSeries({-1: 2}, 1)


@given(series_strategy())
@settings(max_examples=200)
def test_parse_round_trip(a):
    assert parse(str(a)) == a


def test_str_examples():
    s = TruncatedLaurentSeries({-1: Fraction(3, 2), 0: 1, 3: -2}, 5)
    assert str(s) == "3/2*t^-1 + 1 - 2*t^3 + O(t^5)"
    assert str(TruncatedLaurentSeries.zero(2)) == "O(t^2)"
    assert parse("t - t^2 + O(t^4)") == TruncatedLaurentSeries({1: 1, 2: -1}, 4)
