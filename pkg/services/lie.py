# services/lie.py
"""Axiom checks of the untwisted bracket."""
from __future__ import annotations

from itertools import product

from config import settings
from core.algebra import ZERO_ELEMENT, AlgElement, bracket, bracket_basis, window_generators
from services.harness.grid import run_grid
from services.harness.models import CheckReport


def check_antisymmetry(window: int | None = None, **grid_opts) -> CheckReport:
    w = settings.resolve_window(window, "pair")
    gens = window_generators(w)

    def evaluate(point):
        g, h = point
        return bracket_basis(g, h), -bracket_basis(h, g)

    return run_grid(
        "antisym", list(product(gens, gens)), evaluate, ("x", "y"),
        window={"n": [-w, w]}, **grid_opts,
    )


def check_jacobi(window: int | None = None, **grid_opts) -> CheckReport:
    """[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0 over L/I triples; centrals drop out."""
    w = settings.resolve_window(window, "triple")
    gens = window_generators(w, centrals=False)

    def cyclic(x, y, z) -> AlgElement:
        return bracket(AlgElement.of(x), bracket_basis(y, z))

    def evaluate(point):
        x, y, z = point
        return cyclic(x, y, z) + cyclic(y, z, x) + cyclic(z, x, y), ZERO_ELEMENT

    return run_grid(
        "jacobi", list(product(gens, gens, gens)), evaluate, ("x", "y", "z"),
        window={"n": [-w, w]}, **grid_opts,
    )
