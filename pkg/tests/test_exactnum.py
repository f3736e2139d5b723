from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import pascal_row
from symwalk.exactnum import (
    DomainError,
    DyadicProb,
    ONE,
    ZERO,
    binom,
    ceil_rational,
    dyadic_cmp,
    dyadic_halve,
    dyadic_to_decimal,
    parse_rational,
)


def test_binom_matches_pascal_rows():
    for n in range(0, 61):
        assert [binom(n, j) for j in range(n + 1)] == pascal_row(n)


def test_binom_examples():
    assert binom(10, 5) == 252
    assert binom(5, -1) == 0
    assert binom(5, 6) == 0
    assert binom(0, 0) == 1


def test_binom_large_row_is_exact():
    row = pascal_row(200)
    assert binom(200, 100) == row[100]
    assert sum(binom(200, j) for j in range(201)) == 2 ** 200


def test_binom_negative_n():
    with pytest.raises(DomainError):
        binom(-1, 0)


@pytest.mark.parametrize("num,exp,canon", [(4, 4, (1, 2)), (0, 7, (0, 0)), (6, 3, (3, 2)), (1, 0, (1, 0))])
def test_canonical_form(num, exp, canon):
    p = DyadicProb(num, exp)
    assert (p.numerator, p.exponent) == canon


def test_rejects_values_outside_unit_interval():
    with pytest.raises(DomainError):
        DyadicProb(5, 2)
    with pytest.raises(DomainError):
        DyadicProb(-1, 2)


def test_subtraction_below_zero_raises():
    with pytest.raises(DomainError):
        DyadicProb(1, 2) - DyadicProb(1, 1)


def test_parse_and_str_round_trip():
    for p in (DyadicProb(5, 4), ZERO, ONE, DyadicProb(3, 70)):
        assert DyadicProb.parse(str(p)) == p
    assert DyadicProb.parse("5/16") == DyadicProb(5, 4)
    with pytest.raises(DomainError):
        DyadicProb.parse("1/3")


@given(st.integers(0, 60), st.data())
def test_arithmetic_agrees_with_fractions(e, data):
    a = data.draw(st.integers(0, 2 ** e))
    b = data.draw(st.integers(0, 2 ** e - a))
    pa, pb = DyadicProb(a, e), DyadicProb(b, e)
    assert (pa + pb).to_fraction() == Fraction(a + b, 2 ** e)
    assert dyadic_halve(pa).to_fraction() == Fraction(a, 2 ** (e + 1))
    assert dyadic_cmp(pa, pb) == (a > b) - (a < b)
    assert (pa + pb) - pb == pa


def test_comparisons_with_other_numbers():
    assert DyadicProb(1, 1) == Fraction(1, 2)
    assert DyadicProb(1, 0) == 1
    assert DyadicProb(1, 2) < Fraction(1, 3)
    assert hash(DyadicProb(2, 3)) == hash(DyadicProb(1, 2))


def test_decimal_rendering():
    assert dyadic_to_decimal(DyadicProb(5, 4)) == "0.312500000000"
    assert dyadic_to_decimal(DyadicProb(1, 0), 3) == "1.000"
    # 1/2^41 is 4.5e-13: rounds half-even at 12 places
    assert dyadic_to_decimal(DyadicProb(1, 41)) == "0.000000000000"
    assert dyadic_to_decimal(DyadicProb(3, 2), 1) == "0.8"


def test_parse_rational_is_exact_base_ten():
    assert parse_rational("0.3") == Fraction(3, 10)
    assert parse_rational("3/2") == Fraction(3, 2)
    assert parse_rational(Decimal("1.25")) == Fraction(5, 4)
    assert parse_rational(7) == 7
    for bad in (0.5, True, "abc", "1/0", "nan"):
        with pytest.raises(DomainError):
            parse_rational(bad)


@given(st.fractions())
def test_ceil_rational(x):
    assert ceil_rational(x) - 1 < x <= ceil_rational(x)
