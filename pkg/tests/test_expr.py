# tests/test_expr.py
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import scalars
from core.algebra import CL, CLI, I, L, AlgElement, element
from core.errors import ParseError, SortError
from core.scalar import Scalar
from services.expr import eval_expr, parse_element, parse_expr, parse_vector
from services.intermediate import ModuleVec


def test_bracket_atom():
    assert parse_element("[L2, I-2]") == element((2, I(0)), (6, CLI))


def test_three_term_element():
    assert parse_element("3/2*L2 + I-1 - CL") == element((Fraction(3, 2), L(2)), I(-1), (-1, CL))


def test_nested_brackets_and_groups():
    x = parse_element("[L1, [L1, L-2]] - 2*(L1 + I0)")
    # [L1, 3 L-1] = 6 L0
    assert x == element((6, L(0)), (-2, L(1)), (-2, I(0)))


def test_complex_coefficients():
    assert parse_element("(1+i)*L1") == element((Scalar(1, 1), L(1)))
    assert parse_element("i*L1 - 2i*I0") == element((Scalar(0, 1), L(1)), (Scalar(0, -2), I(0)))


def test_module_vectors():
    assert parse_vector("v0 - 1/3*v-2") == ModuleVec({0: 1, -2: Fraction(-1, 3)})


def test_zero_is_accepted():
    assert parse_element("0") == AlgElement()
    assert parse_vector("0") == ModuleVec()
    assert parse_element("L1 + 0") == element(L(1))


def test_mixed_sorts():
    with pytest.raises(SortError):
        parse_expr("L1 + v0")
    with pytest.raises(SortError):
        parse_expr("[v0, L1]")
    with pytest.raises(SortError):
        parse_vector("L1")


@pytest.mark.parametrize(
    "text, position",
    [
        ("L1 +", 4),
        ("3 L1", 2),
        ("[L1, L2", 7),
        ("L", 1),
        ("2*", 2),
        ("L1 L2", 3),
    ],
)
def test_parse_errors_carry_position(text, position):
    with pytest.raises(ParseError) as info:
        parse_expr(text)
    assert info.value.position == position


def test_nonzero_bare_scalar_is_rejected():
    with pytest.raises(ParseError):
        parse_expr("L1 + 3")


def test_whitespace_is_ignored():
    assert parse_element("  [ L1 ,L-1 ]") == parse_element("[L1,L-1]")


indices = st.integers(min_value=-9, max_value=9)
generators = st.one_of(st.builds(L, indices), st.builds(I, indices), st.sampled_from([CL, CLI]))


@given(st.lists(st.tuples(generators, scalars), max_size=5))
def test_printed_elements_parse_back(pairs):
    x = AlgElement(pairs)
    assert parse_element(x.format()) == x
    assert parse_element(x.format()).format() == x.format()


@given(st.lists(st.tuples(indices, scalars), max_size=5))
def test_printed_vectors_parse_back(pairs):
    v = ModuleVec(pairs)
    assert eval_expr(parse_expr(v.format()), "module") == v
