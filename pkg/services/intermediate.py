# services/intermediate.py
"""The seven intermediate-series module families over basis v_t, t ∈ ℤ.

``act_printed`` transcribes the action tables literally, special lines
included. Those tables represent the bracket with (m-n)L_{n+m}, the negative of
the one in ``core.algebra``; ``act`` therefore scales every non-central action
by ``sign = -1``. Centrals act as zero in every family.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterable, Optional, Set, Tuple

from loguru import logger

from config import settings
from core.algebra import AlgElement, Generator, bracket_basis, outward, window_generators
from core.errors import InvalidParameters
from core.scalar import ZERO, Number, Scalar, as_scalar, format_scalar
from core.sparse import SparseVec
from services.harness.grid import run_grid
from services.harness.models import CheckReport

FAMILY_TAGS = ("abf", "af", "bf", "u", "v", "ut", "vt")

# which of (alpha, beta, F) each family reads
FAMILY_FIELDS: Dict[str, Tuple[str, ...]] = {
    "abf": ("alpha", "beta", "F"),
    "af": ("alpha", "F"),
    "bf": ("alpha", "F"),
    "u": ("F",),
    "v": ("F",),
    "ut": ("F",),
    "vt": ("F",),
}


class ModuleVec(SparseVec[int]):
    __slots__ = ()

    @staticmethod
    def format_key(key: int) -> str:
        return f"v{key}"

    @classmethod
    def basis(cls, t: int, coeff: Number = 1) -> "ModuleVec":
        return cls({t: coeff})


ZERO_VEC = ModuleVec()


@dataclass(frozen=True)
class FamilyParams:
    tag: str
    alpha: Scalar = ZERO
    beta: Scalar = ZERO
    F: Scalar = ZERO

    def __post_init__(self) -> None:
        if self.tag not in FAMILY_FIELDS:
            raise InvalidParameters(f"unknown family tag: {self.tag!r} (expected one of {', '.join(FAMILY_TAGS)})")
        used = FAMILY_FIELDS[self.tag]
        for name in ("alpha", "beta", "F"):
            value = as_scalar(getattr(self, name)) if name in used else ZERO
            object.__setattr__(self, name, value)

    def as_dict(self) -> Dict[str, str]:
        out = {"family": self.tag}
        for name in FAMILY_FIELDS[self.tag]:
            out[name] = format_scalar(getattr(self, name))
        return out


def ABF(alpha: Number | str, beta: Number | str, F: Number | str) -> FamilyParams:
    return FamilyParams("abf", as_scalar(alpha), as_scalar(beta), as_scalar(F))


def AF(alpha: Number | str, F: Number | str) -> FamilyParams:
    return FamilyParams("af", alpha=as_scalar(alpha), F=as_scalar(F))


def BF(alpha: Number | str, F: Number | str) -> FamilyParams:
    return FamilyParams("bf", alpha=as_scalar(alpha), F=as_scalar(F))


def U(F: Number | str) -> FamilyParams:
    return FamilyParams("u", F=as_scalar(F))


def V(F: Number | str) -> FamilyParams:
    return FamilyParams("v", F=as_scalar(F))


def Ut(F: Number | str) -> FamilyParams:
    return FamilyParams("ut", F=as_scalar(F))


def Vt(F: Number | str) -> FamilyParams:
    return FamilyParams("vt", F=as_scalar(F))


def family_from_tag(tag: str, alpha: Number | str = 0, beta: Number | str = 0,
                    F: Number | str = 0) -> FamilyParams:
    return FamilyParams(tag.lower(), as_scalar(alpha), as_scalar(beta), as_scalar(F))


# ──────────────────────────────────────────────
# printed action tables
# ──────────────────────────────────────────────

Term = Optional[Tuple[int, Scalar]]


def _L_printed(f: FamilyParams, n: int, t: int) -> Term:
    tag = f.tag
    if tag == "abf":
        return n + t, f.alpha + t + f.beta * n
    if tag == "af":
        if t == 0:
            return n, n * (n + f.alpha)
        return n + t, Scalar(t + n)
    if tag == "bf":
        if t == -n:
            return 0, -n * (n + f.alpha)
        return n + t, Scalar(t)
    if tag == "u":
        return n + t, Scalar(t)
    if tag == "v":
        return n + t, Scalar(t + n)
    # ut, vt
    if t == -n:
        return None
    return n + t, Scalar(t)


def _I_printed(f: FamilyParams, n: int, t: int) -> Term:
    tag = f.tag
    if tag == "abf":
        return n + t, f.F
    if tag in ("af", "v"):
        return (n, n * f.F) if t == 0 else None
    if tag in ("bf", "u", "ut"):
        return (0, n * f.F) if t == -n else None
    # vt: I_n(v_0) = F v_n except n = t = 0
    if t == 0 and n != 0:
        return n, f.F
    return None


def act_printed(f: FamilyParams, g: Generator, t: int) -> ModuleVec:
    if g.is_central:
        return ZERO_VEC
    term = _L_printed(f, g.n, t) if g.kind == "L" else _I_printed(f, g.n, t)
    if term is None:
        return ZERO_VEC
    index, coeff = term
    return ModuleVec({index: coeff})


def act_basis(f: FamilyParams, g: Generator, t: int, sign: int = -1) -> ModuleVec:
    image = act_printed(f, g, t)
    return image if sign == 1 else -image


def act(f: FamilyParams, x: AlgElement, v: ModuleVec, sign: int = -1) -> ModuleVec:
    """Bilinear extension of ``sign * act_printed``."""
    if sign not in (1, -1):
        raise InvalidParameters(f"sign must be +1 or -1, got {sign}")
    acc: Dict[int, Scalar] = {}
    for g, cg in x.items():
        if g.is_central:
            continue
        for t, ct in v.items():
            for index, coeff in act_basis(f, g, t, sign).items():
                acc[index] = acc.get(index, ZERO) + cg * ct * coeff
    return ModuleVec(acc)


# ──────────────────────────────────────────────
# checks / probes
# ──────────────────────────────────────────────

def check_lie_module(f: FamilyParams, window: int | None = None, sign: int = -1,
                     **grid_opts) -> CheckReport:
    """act([g,h]) v_t = act(g, act(h, v_t)) - act(h, act(g, v_t))."""
    if sign not in (1, -1):
        raise InvalidParameters(f"sign must be +1 or -1, got {sign}")
    w = settings.resolve_window(window, "triple")
    gens = window_generators(w)
    points = list(product(gens, gens, outward(w)))

    def evaluate(point):
        g, h, t = point
        v = ModuleVec.basis(t)
        lhs = act(f, bracket_basis(g, h), v, sign)
        hv = act(f, AlgElement.of(h), v, sign)
        gv = act(f, AlgElement.of(g), v, sign)
        rhs = act(f, AlgElement.of(g), hv, sign) - act(f, AlgElement.of(h), gv, sign)
        return lhs, rhs

    return run_grid(
        "lie-module", points, evaluate, ("x", "y", "t"),
        window={"n": [-w, w], "t": [-w, w]},
        params={**f.as_dict(), "sign": sign}, **grid_opts,
    )


def orbit_window_span(f: FamilyParams, t0: int, window: int | None = None,
                      generators: Iterable[Generator] | None = None) -> Set[int]:
    """Indices reachable from v_{t0} by repeated generator actions, clipped to the window."""
    w = settings.resolve_window(window, "triple")
    if abs(t0) > w:
        raise InvalidParameters(f"|t0| = {abs(t0)} exceeds window {w}")
    gens = list(window_generators(w, centrals=False) if generators is None else generators)

    reached = {t0}
    frontier = [t0]
    while frontier:
        nxt = []
        for t in frontier:
            for g in gens:
                for index in act_printed(f, g, t).keys():
                    if abs(index) <= w and index not in reached:
                        reached.add(index)
                        nxt.append(index)
        frontier = nxt
    logger.debug(f"orbit of v{t0} in {f.as_dict()}: {len(reached)} of {2 * w + 1} indices")
    return reached
