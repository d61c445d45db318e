# models/__init__.py
# request DTOs of the HTTP layer; report models live in services.harness.models

from .requests import (
    ActRequest,
    AuditRequest,
    BracketRequest,
    EndoIn,
    FamilyIn,
    SolveTwistRequest,
    SpecRequest,
)

__all__ = [
    "ActRequest",
    "AuditRequest",
    "BracketRequest",
    "EndoIn",
    "FamilyIn",
    "SolveTwistRequest",
    "SpecRequest",
]
