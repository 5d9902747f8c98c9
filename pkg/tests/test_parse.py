import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affmod import (
    ParseError,
    format_expr,
    format_poly,
    parse_fraction,
    parse_poly,
    ring,
)

from conftest import poly_strategy

RXY = ring("x", "y")
RXYU = ring("x", "y", "u")


class TestParsePoly:
    def test_basic(self):
        x, y = RXY.gens()
        assert parse_poly("x^2*y - 1", RXY) == x**2 * y - 1

    def test_defining_relation(self):
        x, y, u = RXYU.gens()
        expected = u * (x**3 * y - 1) - (x - 1)
        assert parse_poly("u*(x^3*y - 1) - (x - 1)", RXYU) == expected

    def test_negative_exponent_rejected(self):
        with pytest.raises(ParseError):
            parse_poly("x^-1", RXY)

    def test_variable_list_accepted(self):
        p = parse_poly("x*y + 2", ["x", "y"])
        assert p == RXY.var("x") * RXY.var("y") + 2

    def test_implicit_multiplication_rejected(self):
        with pytest.raises(ParseError):
            parse_poly("xy + 1", RXY)  # 'xy' is an unknown identifier

    def test_unary_minus_binds_tighter_than_product(self):
        x, y = RXY.gens()
        assert parse_poly("-x*y", RXY) == -(x * y)
        assert parse_poly("-x^2", RXY) == -(x**2)

    def test_error_positions(self):
        with pytest.raises(ParseError) as exc:
            parse_poly("x + z", RXY)
        assert exc.value.position == 4

    def test_precedence(self):
        x, y = RXY.gens()
        assert parse_poly("2*x^3 + x*y - 4", RXY) == 2 * x**3 + x * y - 4


class TestParseFraction:
    def test_generator_fraction(self):
        x, y = RXY.gens()
        f = parse_fraction("(x-1)/(x^2*y-1)", RXY)
        assert f.numerator == x - 1
        assert f.denominator == x**2 * y - 1

    def test_polynomial_defaults_denominator(self):
        f = parse_fraction("x+1", RXY)
        assert f.denominator == RXY.one()

    def test_probe_fraction(self):
        x, y = RXY.gens()
        f = parse_fraction("(y-1)/(x*y-1)", RXY)
        assert f.numerator == y - 1 and f.denominator == x * y - 1

    def test_zero_denominator_rejected(self):
        with pytest.raises(ParseError):
            parse_fraction("x/(y-y)", RXY)

    def test_double_slash_rejected(self):
        with pytest.raises(ParseError):
            parse_fraction("x/y/2", RXY)


class TestFormat:
    def test_examples(self):
        x, y = RXY.gens()
        assert format_poly(x**2 * y - 1) == "x^2*y - 1"
        assert format_poly(RXY.zero()) == "0"
        assert format_poly(2 * x) == "2*x"

    def test_fraction(self):
        f = parse_fraction("(x-1)/(x*y-1)", RXY)
        assert format_expr(f) == "(x - 1)/(x*y - 1)"

    @given(p=poly_strategy(RXYU))
    @settings(max_examples=200)
    def test_round_trip(self, p):
        assert parse_poly(format_poly(p), RXYU) == p

    @given(text=st.text(alphabet="xyu1230+-*/^() ", max_size=30))
    @settings(max_examples=300)
    def test_no_crash_on_adversarial_input(self, text):
        try:
            parse_poly(text, RXYU)
        except ParseError:
            pass

    def test_comment_ignored(self):
        assert parse_poly("x + 1  # the b generator", RXY) == RXY.var("x") + 1
