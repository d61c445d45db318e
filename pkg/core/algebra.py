# core/algebra.py
"""Twisted Heisenberg–Virasoro algebra: basis, sparse elements, bracket.

    [L_n, L_m]  = (n-m) L_{n+m} + δ_{n,-m} (n³-n)/12 C_L
    [L_n, I_m]  = -m I_{n+m}    + δ_{n,-m} (n²+n) C_LI
    [I_n, I_m]  = n δ_{n,-m} C_I
    C_L, C_LI, C_I are central.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from core.errors import InvalidParameters
from core.scalar import Number, Scalar
from core.sparse import SparseVec

KINDS = ("L", "I", "CL", "CLI", "CI")
CENTRAL_KINDS = ("CL", "CLI", "CI")
_KIND_RANK = {kind: rank for rank, kind in enumerate(KINDS)}


@dataclass(frozen=True, slots=True)
class Generator:
    kind: str
    n: int = 0

    def __post_init__(self) -> None:
        if self.kind not in _KIND_RANK:
            raise InvalidParameters(f"unknown generator kind: {self.kind!r}")
        if self.kind in CENTRAL_KINDS and self.n != 0:
            raise InvalidParameters(f"{self.kind} carries no index")

    @property
    def is_central(self) -> bool:
        return self.kind in CENTRAL_KINDS

    @property
    def degree(self) -> int:
        return self.n

    @property
    def rank(self) -> tuple[int, int]:
        return _KIND_RANK[self.kind], self.n

    def __str__(self) -> str:
        if self.is_central:
            return self.kind
        return f"{self.kind}{self.n}"


def L(n: int) -> Generator:
    return Generator("L", n)


def I(n: int) -> Generator:  # noqa: E743
    return Generator("I", n)


CL = Generator("CL")
CLI = Generator("CLI")
CI = Generator("CI")
CENTRALS = (CL, CLI, CI)


class AlgElement(SparseVec[Generator]):
    """Sparse element: L-terms by ascending n, then I-terms, then CL, CLI, CI."""

    __slots__ = ()

    @staticmethod
    def sort_key(key: Generator) -> tuple[int, int]:
        return key.rank

    @classmethod
    def of(cls, g: Generator, coeff: Number = 1) -> "AlgElement":
        return cls({g: coeff})

    def degree_decompose(self) -> dict[int, "AlgElement"]:
        buckets: dict[int, dict[Generator, Scalar]] = {}
        for g, c in self.items():
            buckets.setdefault(g.degree, {})[g] = c
        return {deg: AlgElement(buckets[deg]) for deg in sorted(buckets)}

    def is_homogeneous(self) -> bool:
        return len({g.degree for g in self.keys()}) <= 1

    def central_part(self) -> "AlgElement":
        return AlgElement({g: c for g, c in self.items() if g.is_central})

    def noncentral_part(self) -> "AlgElement":
        return AlgElement({g: c for g, c in self.items() if not g.is_central})


ZERO_ELEMENT = AlgElement()


def element(*pairs: tuple[Number, Generator] | Generator) -> AlgElement:
    """``element((2, L(1)), I(0))`` -> 2*L1 + I0."""
    terms: list[tuple[Generator, Number]] = []
    for p in pairs:
        if isinstance(p, Generator):
            terms.append((p, 1))
        else:
            coeff, g = p
            terms.append((g, coeff))
    return AlgElement(terms)


# ──────────────────────────────────────────────
# bracket
# ──────────────────────────────────────────────

@lru_cache(maxsize=65536)
def bracket_basis(g: Generator, h: Generator) -> AlgElement:
    if g.is_central or h.is_central:
        return ZERO_ELEMENT
    n, m = g.n, h.n
    diagonal = n + m == 0

    if g.kind == "L" and h.kind == "L":
        terms: dict[Generator, Number] = {L(n + m): n - m}
        if diagonal:
            terms[CL] = Fraction(n**3 - n, 12)
        return AlgElement(terms)

    if g.kind == "L" and h.kind == "I":
        terms = {I(n + m): -m}
        if diagonal:
            terms[CLI] = n * n + n
        return AlgElement(terms)

    if g.kind == "I" and h.kind == "L":
        return -bracket_basis(h, g)

    # [I_n, I_m]
    if diagonal:
        return AlgElement({CI: n})
    return ZERO_ELEMENT


def bracket(x: AlgElement, y: AlgElement) -> AlgElement:
    acc: dict[Generator, Scalar] = {}
    for g, cg in x.items():
        for h, ch in y.items():
            b = bracket_basis(g, h)
            if not b:
                continue
            c = cg * ch
            for key, coeff in b.items():
                prev = acc.get(key)
                acc[key] = c * coeff if prev is None else prev + c * coeff
    return AlgElement(acc)


# ──────────────────────────────────────────────
# element_ops
# ──────────────────────────────────────────────

def add(x: AlgElement, y: AlgElement) -> AlgElement:
    return x + y


def scale(s: Number, x: AlgElement) -> AlgElement:
    return x.scale(s)


def eq(x: AlgElement, y: AlgElement) -> bool:
    return x == y


def degree_decompose(x: AlgElement) -> dict[int, AlgElement]:
    return x.degree_decompose()


def outward(window: int) -> list[int]:
    """0, 1, -1, 2, -2, ... up to ±window: the enumeration order of every grid."""
    out = [0]
    for n in range(1, window + 1):
        out += [n, -n]
    return out


def outward_rank(n: int) -> int:
    return 2 * n - 1 if n > 0 else -2 * n


def window_generators(window: int, *, centrals: bool = True) -> list[Generator]:
    """L's, then I's (indices in outward order), then CL, CLI, CI."""
    idx = outward(window)
    gens: list[Generator] = [L(n) for n in idx] + [I(n) for n in idx]
    if centrals:
        gens += list(CENTRALS)
    return gens


def generator_rank(g: Generator) -> tuple[int, int]:
    """Sort key matching the grid enumeration order."""
    return _KIND_RANK[g.kind], outward_rank(g.n)
