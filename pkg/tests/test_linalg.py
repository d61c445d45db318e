# tests/test_linalg.py
from __future__ import annotations

from fractions import Fraction

from core.linalg import LinearSystem
from core.scalar import I_UNIT, Scalar


def test_unique_solution():
    system = LinearSystem(["x", "y"])
    system.add_row({"x": 1, "y": 1}, 3)
    system.add_row({"x": 1, "y": -1}, 1)
    solution = system.solve()
    assert solution.is_unique
    assert solution.value("x") == 2
    assert solution.value("y") == 1


def test_complex_coefficients():
    system = LinearSystem(["z"])
    system.add_row({"z": I_UNIT}, 1)
    solution = system.solve()
    assert solution.value("z") == -I_UNIT


def test_inconsistent_system():
    system = LinearSystem(["x"])
    system.add_row({"x": 2}, 1)
    system.add_row({"x": 4}, 3)
    assert not system.solve().consistent


def test_zero_row_with_nonzero_rhs_is_a_contradiction():
    system = LinearSystem(["x"])
    system.add_row({"x": 0}, 5)
    assert not system.solve().consistent


def test_nullspace_and_free_unknowns():
    system = LinearSystem(["a", "b", "c"])
    system.add_row({"a": 1, "b": -2})
    solution = system.solve()
    assert solution.consistent
    assert solution.rank == 1
    assert solution.dimension == 2
    spans = {frozenset(vec) for vec in solution.basis}
    assert frozenset({"c"}) in spans
    (pair,) = [vec for vec in solution.basis if "a" in vec]
    assert pair["a"] == Scalar(2) * pair["b"]


def test_duplicate_rows_are_collapsed():
    system = LinearSystem(["x"])
    system.add_row({"x": 1}, Fraction(1, 2))
    system.add_row({"x": 1}, Fraction(1, 2))
    assert system.row_count == 1
    assert system.solve().value("x") == Fraction(1, 2)
