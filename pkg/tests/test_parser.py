from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gfstream.parser import ParseError, parse
from gfstream.series import Series, SeriesError, catalog


def test_geometric():
    assert parse("1/(1-x)", 4) == Series([1, 1, 1, 1, 1])


def test_x():
    assert parse("x", 2) == Series([0, 1, 0])


def test_catalan_closed_form():
    assert parse("(1-sqrt(1-4*x))/(2*x)", 5) == Series([1, 1, 2, 5, 14, 42])


def test_half():
    assert parse("1/sqrt(1-x)", 50) == catalog("g_half", 50)


def test_rationals_and_powers():
    assert parse("3/8 + x^2", 3) == Series([F(3, 8), 0, 1, 0])
    assert parse("(1+x)^3", 4) == Series([1, 3, 3, 1, 0])
    assert parse("2*x^2^2", 5) == Series([0, 0, 0, 0, 2, 0])


def test_unary_minus():
    assert parse("-x + 1", 2) == Series([1, -1, 0])
    assert parse("1/(-1+x)", 2) == Series([-1, -1, -1])


def test_division_by_x_squared():
    # (1 - x/2 - sqrt(1-x)) / x^2 : numerator starts at x^2
    g = parse("(1 - x/2 - sqrt(1-x))/x^2", 4)
    assert g.order == 4
    assert g[0] == F(1, 8)


def test_division_by_high_power_needs_slack():
    assert parse("x^7/x^7", 2) == Series([1, 0, 0])


@pytest.mark.parametrize("text,pos", [
    ("1/(1-", 5),
    ("1 + * x", 4),
    ("sqrt 1", 5),
    ("(1+x", 4),
    ("1 x", 2),
    ("x^y", 2),
    ("1 & 2", 2),
    ("", 0),
])
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as exc:
        parse(text, 3)
    assert exc.value.pos == pos


@pytest.mark.parametrize("text", ["1/x", "1/(x-x)", "sqrt(2)", "sqrt(x)", "1/0"])
def test_domain_errors(text):
    with pytest.raises(SeriesError):
        parse(text, 3)


@given(st.text(alphabet="x0123456789+-*/^() sqrt", max_size=25))
def test_never_crashes(text):
    try:
        parse(text, 4)
    except (ParseError, SeriesError):
        pass


def test_huge_exponent_rejected():
    with pytest.raises(ParseError):
        parse("9^99999999", 3)
