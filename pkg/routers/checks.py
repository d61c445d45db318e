# routers/checks.py
from __future__ import annotations

from fastapi import APIRouter, HTTPException

from core.errors import HVHomError
from services.harness.models import CheckReport, SuiteConfig
from services.harness.registry import SUITES, run_suite

router = APIRouter(prefix="/checks", tags=["checks"])


@router.get("")
def list_suites():
    return {"suites": list(SUITES)}


@router.post("/{suite}", response_model=CheckReport)
def post_check(suite: str, body: SuiteConfig | None = None):
    if suite not in SUITES:
        raise HTTPException(404, f"unknown suite: {suite}")
    try:
        return run_suite(suite, body or SuiteConfig())
    except HVHomError as e:
        raise HTTPException(400, str(e))
