# services/homrep/admissibility.py
"""Per-family parameter constraints under which a twist φ(v_t) = aᵗ m v_{kt+q} exists.

The constraint "k⁻¹b⁻¹ = 1" is read as kb = 1. For AF/BF with F = 0 the
equation 1 - k ∓ kFc = 0 reduces to k = 1 and leaves c free.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from loguru import logger

from core.errors import ConstraintViolation
from core.scalar import ONE, ZERO, Scalar, format_scalar
from services.endo import EndoParams
from services.homrep.models import Admissible
from services.intermediate import FamilyParams


@dataclass(frozen=True)
class Constraint:
    name: str
    expected: str
    measure: Callable[[EndoParams, FamilyParams], Scalar]
    holds: Callable[[Scalar], bool]


def _equals(target: Scalar) -> Callable[[Scalar], bool]:
    return lambda value: value == target


def _integral(value: Scalar) -> bool:
    return value.is_integer


def _not_nonzero_integer(value: Scalar) -> bool:
    return not (value.is_integer and value)


def abf_shift(e: EndoParams, f: FamilyParams) -> Scalar:
    """q = kα − α − kFd."""
    return e.k * f.alpha - f.alpha - e.k * f.F * e.d


B_ONE = Constraint("b=1", "1", lambda e, f: e.b, _equals(ONE))
KB_ONE = Constraint("kb=1", "1", lambda e, f: e.k * e.b, _equals(ONE))
C_ZERO = Constraint("c=0", "0", lambda e, f: e.c, _equals(ZERO))
D_ZERO = Constraint("d=0", "0", lambda e, f: e.d, _equals(ZERO))
ALPHA_ADMISSIBLE = Constraint("alpha not in Z\\{0}", "0 or a non-integer",
                              lambda e, f: f.alpha, _not_nonzero_integer)

CONSTRAINT_SETS: Dict[str, List[Constraint]] = {
    "abf": [
        B_ONE,
        C_ZERO,
        Constraint("k*alpha-alpha-k*F*d in Z", "an integer", abf_shift, _integral),
    ],
    "af": [
        ALPHA_ADMISSIBLE,
        KB_ONE,
        Constraint("1-k-k*F*c=0", "0", lambda e, f: 1 - e.k - e.k * f.F * e.c, _equals(ZERO)),
        D_ZERO,
    ],
    "bf": [
        ALPHA_ADMISSIBLE,
        KB_ONE,
        Constraint("1-k+k*F*c=0", "0", lambda e, f: 1 - e.k + e.k * f.F * e.c, _equals(ZERO)),
        D_ZERO,
    ],
    "u": [KB_ONE, C_ZERO, D_ZERO],
    "v": [KB_ONE, C_ZERO, D_ZERO],
    "ut": [KB_ONE, C_ZERO, D_ZERO],
    "vt": [B_ONE, C_ZERO, D_ZERO],
}


def constraint_set(tag: str) -> List[Constraint]:
    return list(CONSTRAINT_SETS[tag])


def evaluate_constraints(f: FamilyParams, e: EndoParams) -> List[Tuple[Constraint, Scalar, bool]]:
    out = []
    for constraint in CONSTRAINT_SETS[f.tag]:
        value = constraint.measure(e, f)
        out.append((constraint, value, constraint.holds(value)))
    return out


def admissibility(f: FamilyParams, e: EndoParams) -> Admissible:
    """Validate the family's constraints in order; return the derived shift q."""
    for constraint, value, ok in evaluate_constraints(f, e):
        if not ok:
            logger.debug(f"{f.tag}: constraint {constraint.name} fails with {format_scalar(value)}")
            raise ConstraintViolation(constraint.name, constraint.expected, format_scalar(value))
    q = int(abf_shift(e, f).re) if f.tag == "abf" else 0
    return Admissible(q=q, constraints=tuple(c.name for c in CONSTRAINT_SETS[f.tag]))


def loose_shift(f: FamilyParams, e: EndoParams) -> int:
    """q for specs built without validation: kα − α − kFd when integral, else 0."""
    if f.tag != "abf":
        return 0
    shift = abf_shift(e, f)
    return int(shift.re) if shift.is_integer else 0
