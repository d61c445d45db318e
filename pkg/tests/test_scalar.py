# tests/test_scalar.py
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given

from conftest import nonzero_scalars, scalars
from core.errors import DivisionByZero, ParseError
from core.scalar import I_UNIT, ONE, ZERO, Scalar, as_scalar, format_scalar, parse_scalar, pow_int


@pytest.mark.parametrize(
    "text, re, im",
    [
        ("5", 5, 0),
        ("-3/4", Fraction(-3, 4), 0),
        ("6/8", Fraction(3, 4), 0),
        ("i", 0, 1),
        ("-i", 0, -1),
        ("2/3i", 0, Fraction(2, 3)),
        ("3+i", 3, 1),
        ("-1/2+2/3i", Fraction(-1, 2), Fraction(2, 3)),
        ("1-i", 1, -1),
    ],
)
def test_parse_scalar(text, re, im):
    assert parse_scalar(text) == Scalar(re, im)


@pytest.mark.parametrize("text", ["5", "3/4", "-1/2+2/3i", "i", "-i", "3+i", "0", "-7/3i"])
def test_format_is_canonical(text):
    assert format_scalar(parse_scalar(text)) == text


def test_format_reduces_fractions():
    assert format_scalar(parse_scalar("6/8")) == "3/4"
    assert format_scalar(Scalar(Fraction(4, 2))) == "2"


@pytest.mark.parametrize("text", ["", "3/", "/2", "1/0", "2x", "3 + i"])
def test_parse_scalar_rejects(text):
    with pytest.raises(ParseError):
        parse_scalar(text)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO.inv()
    with pytest.raises(DivisionByZero):
        pow_int(ZERO, -1)


def test_imaginary_unit_squares_to_minus_one():
    assert I_UNIT * I_UNIT == -ONE
    assert pow_int(I_UNIT, 4) == ONE
    assert pow_int(Scalar(2), -2) == Scalar(Fraction(1, 4))
    assert pow_int(ZERO, 0) == ONE


def test_as_scalar_rejects_bool():
    with pytest.raises(TypeError):
        as_scalar(True)


def test_scalar_is_immutable():
    s = Scalar(1)
    with pytest.raises(AttributeError):
        s.re = Fraction(2)


@given(scalars, scalars, scalars)
def test_field_laws(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == ZERO


@given(nonzero_scalars)
def test_inverse(x):
    assert x * x.inv() == ONE
    assert ONE / x == x.inv()


@given(scalars)
def test_format_parse_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x


@given(scalars)
def test_hash_agrees_with_equality(x):
    assert hash(x) == hash(Scalar(x.re, x.im))
    if x.is_real and x.re.denominator == 1:
        assert x == int(x.re)
