# services/homrep/models.py
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from pydantic import BaseModel, Field

from core.errors import InvalidParameters
from core.scalar import ONE, Scalar, as_scalar, format_scalar
from services.endo import DeltaCorrections, EndoParams
from services.intermediate import FamilyParams

# (t, j) -> a_{t,j}
TwistMatrix = Dict[Tuple[int, int], Scalar]


@dataclass(frozen=True)
class HomModuleSpec:
    family: FamilyParams
    endo: EndoParams
    corrections: DeltaCorrections
    norm: Scalar = ONE
    q: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "norm", as_scalar(self.norm))
        if self.norm.is_zero:
            raise InvalidParameters("norm must be nonzero")

    def target(self, t: int) -> int:
        """Index of φ(v_t): kt + q."""
        return self.endo.k * t + self.q

    def as_dict(self) -> Dict[str, object]:
        return {
            **self.family.as_dict(),
            "endo": self.endo.as_dict(),
            "norm": format_scalar(self.norm),
            "q": self.q,
        }


@dataclass(frozen=True)
class Admissible:
    """Outcome of a successful admissibility check."""

    q: int
    constraints: Tuple[str, ...] = field(default_factory=tuple)


class TwistEntry(BaseModel):
    t: int
    j: int
    value: str


class TwistSolutionPayload(BaseModel):
    params: Dict[str, object] = Field(default_factory=dict)
    window: int
    interior: List[int]
    index_bound: int
    unknowns: int
    equations: int
    dimension: int
    basis: List[List[TwistEntry]] = Field(default_factory=list)
