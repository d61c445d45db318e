# services/homrep/twist.py
from __future__ import annotations

from typing import Iterable

from core.algebra import AlgElement, Generator
from core.scalar import Number, Scalar, as_scalar, pow_int
from services.endo import EndoParams, calibrate_corrections
from services.homrep.admissibility import admissibility, loose_shift
from services.homrep.models import HomModuleSpec, TwistMatrix
from services.intermediate import ZERO_VEC, FamilyParams, ModuleVec, act


def derive_spec(
    family: FamilyParams,
    endo: EndoParams,
    norm: Number | str = 1,
    *,
    strict: bool = True,
    window: int | None = None,
) -> HomModuleSpec:
    """Bundle family, endomorphism (with calibrated corrections), norm and q.

    ``strict=False`` skips the admissibility check so inadmissible specs can be
    used as negative controls.
    """
    q = admissibility(family, endo).q if strict else loose_shift(family, endo)
    return HomModuleSpec(
        family=family,
        endo=endo,
        corrections=calibrate_corrections(endo, window),
        norm=as_scalar(norm),
        q=q,
    )


def twist_vec(s: HomModuleSpec, t: int) -> ModuleVec:
    """φ(v_t) = aᵗ·norm·v_{kt+q}."""
    return ModuleVec({s.target(t): pow_int(s.endo.a, t) * s.norm})


def twist(s: HomModuleSpec, v: ModuleVec) -> ModuleVec:
    return v.map_keys(lambda t: twist_vec(s, t), ModuleVec)


def hom_act(s: HomModuleSpec, x: AlgElement, v: ModuleVec, sign: int = -1) -> ModuleVec:
    """ρ_φ = φ ∘ ρ."""
    return twist(s, act(s.family, x, v, sign))


def closed_form_matrix(s: HomModuleSpec, ts: Iterable[int]) -> TwistMatrix:
    return {(t, s.target(t)): pow_int(s.endo.a, t) * s.norm for t in ts}


# ──────────────────────────────────────────────
# closed forms of the Hom-type modules, as printed
# ──────────────────────────────────────────────

def hom_act_printed(s: HomModuleSpec, g: Generator, t: int) -> ModuleVec:
    if g.is_central:
        return ZERO_VEC
    f, e, m = s.family, s.endo, s.norm
    k, n, tag = e.k, g.n, s.family.tag

    def at(index: int, coeff: Scalar) -> ModuleVec:
        return ModuleVec({index: coeff})

    def a(power: int) -> Scalar:
        return pow_int(e.a, power)

    generic = k * (n + t)

    if g.kind == "L":
        if tag == "abf":
            return at(generic + s.q, (f.alpha + t + f.beta * n) * a(n + t) * m)
        if tag == "af":
            if t == 0:
                return at(k * n, n * (n + f.alpha) * a(n) * m)
            return at(generic, (t + n) * k * a(n + t) * m)
        if tag == "bf":
            if t == -n:
                return at(0, -n * (n + f.alpha) * a(n) * m)
            return at(generic, t * a(n + t) * m)
        if tag == "u":
            return at(generic, t * a(n + t) * m)
        if tag == "v":
            return at(generic, (t + n) * a(n + t) * m)
        if tag == "ut":
            return ZERO_VEC if t == -n else at(generic, (t + n) * a(n + t) * m)
        # vt
        return ZERO_VEC if t == -n else at(generic, t * a(n + t) * m)

    if tag == "abf":
        return at(generic + s.q, f.F * a(n + t) * m)
    if tag in ("af", "v"):
        return at(k * n, n * f.F * a(n) * m) if t == 0 else ZERO_VEC
    if tag in ("bf", "u", "ut"):
        return at(0, n * f.F * m) if t == -n else ZERO_VEC
    # vt
    return at(k * n, f.F * a(n) * m) if t == 0 else ZERO_VEC
