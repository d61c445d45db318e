# models/requests.py
from __future__ import annotations

from typing import Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from services.endo import DeltaCorrections, EndoParams, calibrate_corrections, printed_corrections
from services.intermediate import FamilyParams, family_from_tag


class EndoIn(BaseModel):
    """φ parameters; scalars in the scalar grammar ("1/2", "3+i")."""

    model_config = ConfigDict(extra="forbid")

    k: int = 1
    a: str = "1"
    b: str = "1"
    c: str = "0"
    d: str = "0"
    corrections: Literal["calibrated", "printed"] = "calibrated"

    def params(self) -> EndoParams:
        return EndoParams.make(self.k, self.a, self.b, self.c, self.d)

    def resolve(self, window: Optional[int] = None) -> Tuple[EndoParams, DeltaCorrections]:
        p = self.params()
        if self.corrections == "printed":
            return p, printed_corrections(p)
        return p, calibrate_corrections(p, window)


class FamilyIn(BaseModel):
    model_config = ConfigDict(extra="forbid")

    family: str = "abf"
    alpha: str = "0"
    beta: str = "0"
    F: str = "0"

    def params(self) -> FamilyParams:
        return family_from_tag(self.family, self.alpha, self.beta, self.F)


class BracketRequest(BaseModel):
    x: str
    y: str


class HomBracketRequest(BaseModel):
    endo: EndoIn = Field(default_factory=EndoIn)
    x: str
    y: str


class CalibrateRequest(BaseModel):
    endo: EndoIn = Field(default_factory=EndoIn)
    window: Optional[int] = Field(default=None, ge=0)


class ApplyRequest(BaseModel):
    endo: EndoIn = Field(default_factory=EndoIn)
    x: str


class ActRequest(BaseModel):
    family: FamilyIn = Field(default_factory=FamilyIn)
    x: str
    v: str
    printed: bool = False


class SpecRequest(BaseModel):
    """Hom-module spec: family, φ and the norm m of φ_V(v_t) = aᵗ m v_{kt+q}."""

    family: FamilyIn = Field(default_factory=FamilyIn)
    endo: EndoIn = Field(default_factory=EndoIn)
    norm: str = "1"
    strict: bool = True


class SolveTwistRequest(BaseModel):
    family: FamilyIn = Field(default_factory=FamilyIn)
    endo: EndoIn = Field(default_factory=EndoIn)
    window: Optional[int] = Field(default=None, ge=1)


class AuditRequest(SpecRequest):
    window: Optional[int] = Field(default=None, ge=0)


class ElementOut(BaseModel):
    result: str
