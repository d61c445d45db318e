# routers/audits.py
from __future__ import annotations

from fastapi import APIRouter, HTTPException

from core.errors import HVHomError
from models.requests import AuditRequest
from services.endo import audit_lemma28, audit_theorem22
from services.harness.models import AuditReport
from services.homrep import audit_section3, derive_spec

router = APIRouter(prefix="/audits", tags=["audits"])

SUBJECTS = ("thm22", "lemma28", "section3")


@router.post("/{subject}", response_model=AuditReport)
def post_audit(subject: str, body: AuditRequest | None = None):
    if subject not in SUBJECTS:
        raise HTTPException(404, f"unknown audit subject: {subject}")
    body = body or AuditRequest()
    try:
        if subject == "thm22":
            return audit_theorem22(body.endo.params(), body.window)
        if subject == "lemma28":
            return audit_lemma28(body.endo.d, body.window)
        spec = derive_spec(body.family.params(), body.endo.params(), body.norm, strict=body.strict)
        return audit_section3(spec, body.window)
    except HVHomError as e:
        raise HTTPException(400, str(e))
