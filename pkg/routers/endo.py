# routers/endo.py
from __future__ import annotations

from fastapi import APIRouter, HTTPException

from core.errors import HVHomError
from models.requests import ApplyRequest, CalibrateRequest, ElementOut
from services.endo import apply_endo
from services.expr import parse_element

router = APIRouter(prefix="/endo", tags=["endo"])


@router.post("/calibrate")
def post_calibrate(body: CalibrateRequest):
    try:
        p, dc = body.endo.resolve(body.window)
    except HVHomError as e:
        raise HTTPException(400, str(e))
    return {"endo": p.as_dict(), "corrections": dc.as_dict()}


@router.post("/apply", response_model=ElementOut)
def post_apply(body: ApplyRequest):
    try:
        p, dc = body.endo.resolve()
        result = apply_endo(p, dc, parse_element(body.x))
    except HVHomError as e:
        raise HTTPException(400, str(e))
    return {"result": result.format()}
