# services/homrep/checks.py
from __future__ import annotations

from itertools import product

from config import settings
from core.algebra import AlgElement, L, outward, window_generators
from core.errors import InvalidParameters
from services.endo import image
from services.harness.grid import run_grid
from services.harness.models import CheckReport
from services.homlie import hom_bracket_basis
from services.homrep.models import HomModuleSpec
from services.homrep.twist import hom_act, twist, twist_vec
from services.intermediate import ModuleVec, act


def _window(kind: str, window: int | None) -> int:
    return settings.resolve_window(window, kind)  # type: ignore[arg-type]


def _check_sign(sign: int) -> None:
    if sign not in (1, -1):
        raise InvalidParameters(f"sign must be +1 or -1, got {sign}")


def check_compat_27(s: HomModuleSpec, window: int | None = None, sign: int = -1,
                    **grid_opts) -> CheckReport:
    """ρ(φ(g)) ∘ φ_V = φ_V ∘ ρ(g) on basis vectors; central parts of φ(g) act as zero."""
    _check_sign(sign)
    w = _window("pair", window)
    gens = window_generators(w)
    p, dc, f = s.endo, s.corrections, s.family

    def evaluate(point):
        g, t = point
        lhs = act(f, image(p, dc, g), twist_vec(s, t), sign)
        rhs = twist(s, act(f, AlgElement.of(g), ModuleVec.basis(t), sign))
        return lhs, rhs

    return run_grid(
        "compat-27", list(product(gens, outward(w))), evaluate, ("x", "t"),
        window={"n": [-w, w], "t": [-w, w]},
        params={**s.as_dict(), "sign": sign}, **grid_opts,
    )


def check_homrep_26(s: HomModuleSpec, window: int | None = None, sign: int = -1,
                    **grid_opts) -> CheckReport:
    """ρ_φ([x,y]_φ) φ(v) = ρ_φ(φx) ρ_φ(y) v − ρ_φ(φy) ρ_φ(x) v with ρ_φ = hom_act."""
    _check_sign(sign)
    w = _window("triple", window)
    gens = window_generators(w)
    p, dc = s.endo, s.corrections

    def evaluate(point):
        g, h, t = point
        v = ModuleVec.basis(t)
        lhs = hom_act(s, hom_bracket_basis(p, dc, g, h), twist_vec(s, t), sign)
        hv = hom_act(s, AlgElement.of(h), v, sign)
        gv = hom_act(s, AlgElement.of(g), v, sign)
        rhs = hom_act(s, image(p, dc, g), hv, sign) - hom_act(s, image(p, dc, h), gv, sign)
        return lhs, rhs

    return run_grid(
        "homrep-26", list(product(gens, gens, outward(w))), evaluate, ("x", "y", "t"),
        window={"n": [-w, w], "t": [-w, w]},
        params={**s.as_dict(), "sign": sign}, **grid_opts,
    )


def is_weight_module(s: HomModuleSpec) -> bool:
    return s.endo.k == 1 and (s.family.tag != "abf" or s.q == 0)


def check_weight_module(s: HomModuleSpec, window: int | None = None, sign: int = -1,
                        **grid_opts) -> CheckReport:
    """hom_act(L_0) sends every v_t to a multiple of v_t."""
    _check_sign(sign)
    w = _window("pair", window)
    L0 = AlgElement.of(L(0))

    def evaluate(point):
        (t,) = point
        out = hom_act(s, L0, ModuleVec.basis(t), sign)
        return out, ModuleVec({t: out.coeff(t)})

    return run_grid(
        "weight", [(t,) for t in outward(w)], evaluate, ("t",),
        window={"t": [-w, w]}, params={**s.as_dict(), "sign": sign}, **grid_opts,
    )
