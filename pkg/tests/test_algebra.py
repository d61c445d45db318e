# tests/test_algebra.py
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import scalars
from core.algebra import (
    CI,
    CL,
    CLI,
    ZERO_ELEMENT,
    AlgElement,
    Generator,
    I,
    L,
    add,
    bracket,
    bracket_basis,
    degree_decompose,
    element,
    outward,
    scale,
    window_generators,
)
from core.errors import InvalidParameters
from services.lie import check_antisymmetry, check_jacobi

indices = st.integers(min_value=-6, max_value=6)
generators = st.one_of(
    st.builds(L, indices),
    st.builds(I, indices),
    st.sampled_from([CL, CLI, CI]),
)
elements = st.lists(st.tuples(scalars, generators), max_size=4).map(
    lambda pairs: AlgElement([(g, c) for c, g in pairs])
)


@pytest.mark.parametrize(
    "g, h, expected",
    [
        (L(3), L(-3), element((6, L(0)), (2, CL))),
        (L(0), L(0), ZERO_ELEMENT),
        (L(2), I(-2), element((2, I(0)), (6, CLI))),
        (I(4), I(-4), element((4, CI))),
        (CL, L(5), ZERO_ELEMENT),
        (L(2), L(1), element((1, L(3)))),
        (I(1), I(2), ZERO_ELEMENT),
    ],
)
def test_bracket_basis(g, h, expected):
    assert bracket_basis(g, h) == expected


def test_bracket_is_bilinear_on_examples():
    assert bracket(element((2, L(1))), element((3, L(-1)))) == element((12, L(0)))
    assert bracket(element(L(1), I(1)), element(I(-1))) == element(I(0), (2, CLI), CI)
    assert bracket(element(L(4)), ZERO_ELEMENT) == ZERO_ELEMENT


def test_virasoro_cocycle_value():
    assert bracket_basis(L(2), L(-2)).coeff(CL) == Fraction(1, 2)


def test_element_ops():
    assert add(element(L(1)), element((-1, L(1)))) == ZERO_ELEMENT
    assert scale(0, element(L(2))) == ZERO_ELEMENT
    x = element(L(2), I(2), CL)
    assert degree_decompose(x) == {0: element(CL), 2: element(L(2), I(2))}


def test_canonical_order_and_text():
    x = element(CI, I(-1), L(3), CL, L(-2))
    assert [str(g) for g in x.keys()] == ["L-2", "L3", "I-1", "CL", "CI"]
    assert element((6, L(0)), (2, CL)).format() == "6*L0 + 2*CL"
    assert element((-1, L(1)), (Fraction(1, 2), I(0))).format() == "-L1 + 1/2*I0"
    assert ZERO_ELEMENT.format() == "0"


def test_generator_validation():
    with pytest.raises(InvalidParameters):
        Generator("X", 1)
    with pytest.raises(InvalidParameters):
        Generator("CL", 2)


def test_outward_order():
    assert outward(2) == [0, 1, -1, 2, -2]
    gens = window_generators(1)
    assert [str(g) for g in gens] == ["L0", "L1", "L-1", "I0", "I1", "I-1", "CL", "CLI", "CI"]


@given(generators, generators)
def test_antisymmetry_property(g, h):
    assert bracket_basis(g, h) == -bracket_basis(h, g)


@given(elements, elements, elements)
def test_jacobi_property(x, y, z):
    total = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
    assert total == ZERO_ELEMENT


@given(elements, st.sampled_from([CL, CLI, CI]))
def test_centrality(x, c):
    assert bracket(x, AlgElement.of(c)) == ZERO_ELEMENT


@given(generators, generators)
def test_grading(g, h):
    if g.is_central or h.is_central:
        return
    out = bracket_basis(g, h)
    for key in out.keys():
        if key.is_central:
            assert g.n + h.n == 0
        else:
            assert key.degree == g.n + h.n


def test_antisymmetry_suite_window_6():
    report = check_antisymmetry(6)
    assert report.status == "pass"
    assert report.checked == 29 * 29


def test_jacobi_suite_window_6():
    report = check_jacobi(6)
    assert report.status == "pass"
    assert report.checked == 17576
    assert report.window == {"n": [-6, 6]}
