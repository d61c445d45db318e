# services/harness/models.py
from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator


class Counterexample(BaseModel):
    # generator names ("L1", "CLI") and integer basis indices ("t")
    point: Dict[str, Union[int, str]]
    lhs: str
    rhs: str


class CheckReport(BaseModel):
    suite: str
    window: Dict[str, List[int]]
    params: Dict[str, Any] = Field(default_factory=dict)
    status: Literal["pass", "fail"]
    checked: int
    failures: int = 0
    counterexamples: List[Counterexample] = Field(default_factory=list)

    model_config = ConfigDict(extra="forbid")

    @model_validator(mode="after")
    def _status_matches(self) -> "CheckReport":
        if (self.status == "fail") != (self.failures > 0):
            raise ValueError("status must be 'fail' exactly when failures > 0")
        if len(self.counterexamples) > self.failures:
            raise ValueError("more counterexamples than failures")
        return self

    @property
    def passed(self) -> bool:
        return self.status == "pass"


class AuditEntry(BaseModel):
    component: str
    printed: str
    derived: str
    verdict: Literal["match", "mismatch"]


class AuditReport(BaseModel):
    subject: str
    params: Dict[str, Any] = Field(default_factory=dict)
    entries: List[AuditEntry] = Field(default_factory=list)
    checks: List[CheckReport] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    @property
    def mismatches(self) -> List[AuditEntry]:
        return [e for e in self.entries if e.verdict == "mismatch"]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def verdict(self) -> Literal["identical", "mismatch"]:
        return "mismatch" if self.mismatches else "identical"


class SuiteConfig(BaseModel):
    """Inputs of one registered suite; scalars travel as strings in the scalar grammar."""

    window: Optional[int] = Field(default=None, ge=0)
    max_counterexamples: Optional[int] = Field(default=None, ge=0)
    parallel: Optional[bool] = None

    # endomorphism (k, a, b, c, d) and its corrections
    k: int = 1
    a: str = "1"
    b: str = "1"
    c: str = "0"
    d: str = "0"
    corrections: Literal["calibrated", "printed"] = "calibrated"

    # module family
    family: str = "abf"
    alpha: str = "0"
    beta: str = "0"
    F: str = "0"
    sign: Literal[-1, 1] = -1
    norm: str = "1"
    # False builds inadmissible specs as negative controls
    strict: bool = True

    model_config = ConfigDict(extra="forbid")
