# services/homlie.py
"""Yau twist [x, y]_φ := φ([x, y]) and the Hom-Lie identity checkers."""
from __future__ import annotations

from functools import lru_cache
from itertools import product

from config import settings
from core.algebra import ZERO_ELEMENT, AlgElement, Generator, bracket, bracket_basis, window_generators
from services.endo import (
    DeltaCorrections,
    EndoParams,
    apply_endo,
    format_endo,
    image,
    invert_endo,
)
from services.harness.grid import run_grid
from services.harness.models import CheckReport


@lru_cache(maxsize=65536)
def hom_bracket_basis(p: EndoParams, dc: DeltaCorrections, g: Generator, h: Generator) -> AlgElement:
    return apply_endo(p, dc, bracket_basis(g, h))


def hom_bracket(p: EndoParams, dc: DeltaCorrections, x: AlgElement, y: AlgElement) -> AlgElement:
    return apply_endo(p, dc, bracket(x, y))


def induced_bracket(p: EndoParams, dc: DeltaCorrections, x: AlgElement, y: AlgElement) -> AlgElement:
    """φ⁻¹ ∘ [·,·]_φ; recovers the Lie bracket when φ is invertible (k = ±1, b ≠ 0)."""
    return invert_endo(p, dc, hom_bracket(p, dc, x, y))


def _window(kind: str, window: int | None) -> int:
    return settings.resolve_window(window, kind)  # type: ignore[arg-type]


def check_hom_jacobi(p: EndoParams, dc: DeltaCorrections, window: int | None = None,
                     **grid_opts) -> CheckReport:
    """Σ_cyclic [φ(x), [y, z]_φ]_φ = 0 over L/I generator triples."""
    w = _window("triple", window)
    gens = window_generators(w, centrals=False)

    def twisted(x: Generator, y: Generator, z: Generator) -> AlgElement:
        return hom_bracket(p, dc, image(p, dc, x), hom_bracket_basis(p, dc, y, z))

    def evaluate(point):
        x, y, z = point
        total = twisted(x, y, z) + twisted(y, z, x) + twisted(z, x, y)
        return total, ZERO_ELEMENT

    return run_grid(
        "hom-jacobi", list(product(gens, gens, gens)), evaluate, ("x", "y", "z"),
        window={"n": [-w, w]}, params=format_endo(p, dc), **grid_opts,
    )


def check_multiplicative(p: EndoParams, dc: DeltaCorrections, window: int | None = None,
                         **grid_opts) -> CheckReport:
    """φ([x, y]_φ) = [φ(x), φ(y)]_φ on generator pairs."""
    w = _window("pair", window)
    gens = window_generators(w)

    def evaluate(point):
        g, h = point
        lhs = apply_endo(p, dc, hom_bracket_basis(p, dc, g, h))
        rhs = hom_bracket(p, dc, image(p, dc, g), image(p, dc, h))
        return lhs, rhs

    return run_grid(
        "multiplicative", list(product(gens, gens)), evaluate, ("x", "y"),
        window={"n": [-w, w]}, params=format_endo(p, dc), **grid_opts,
    )


def check_hom_antisymmetry(p: EndoParams, dc: DeltaCorrections, window: int | None = None,
                           **grid_opts) -> CheckReport:
    w = _window("pair", window)
    gens = window_generators(w)

    def evaluate(point):
        g, h = point
        return hom_bracket_basis(p, dc, g, h), -hom_bracket_basis(p, dc, h, g)

    return run_grid(
        "hom-antisym", list(product(gens, gens)), evaluate, ("x", "y"),
        window={"n": [-w, w]}, params=format_endo(p, dc), **grid_opts,
    )


def check_induced_algebra(p: EndoParams, dc: DeltaCorrections, window: int | None = None,
                          **grid_opts) -> CheckReport:
    """φ⁻¹([x, y]_φ) = [x, y]; raises InducedAlgebraUnavailable unless k = ±1 and b ≠ 0."""
    w = _window("pair", window)
    gens = window_generators(w)
    # fail fast on non-invertible twists
    invert_endo(p, dc, ZERO_ELEMENT)

    def evaluate(point):
        g, h = point
        return invert_endo(p, dc, hom_bracket_basis(p, dc, g, h)), bracket_basis(g, h)

    return run_grid(
        "induced", list(product(gens, gens)), evaluate, ("x", "y"),
        window={"n": [-w, w]}, params=format_endo(p, dc), **grid_opts,
    )
