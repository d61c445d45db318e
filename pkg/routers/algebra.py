# routers/algebra.py
from __future__ import annotations

from fastapi import APIRouter, HTTPException

from core.algebra import bracket
from core.errors import HVHomError
from models.requests import BracketRequest, ElementOut, HomBracketRequest
from services.expr import parse_element
from services.homlie import hom_bracket

router = APIRouter(prefix="/algebra", tags=["algebra"])


@router.post("/bracket", response_model=ElementOut)
def post_bracket(body: BracketRequest):
    try:
        result = bracket(parse_element(body.x), parse_element(body.y))
    except HVHomError as e:
        raise HTTPException(400, str(e))
    return {"result": result.format()}


@router.post("/hom-bracket", response_model=ElementOut)
def post_hom_bracket(body: HomBracketRequest):
    try:
        p, dc = body.endo.resolve()
        result = hom_bracket(p, dc, parse_element(body.x), parse_element(body.y))
    except HVHomError as e:
        raise HTTPException(400, str(e))
    return {"result": result.format()}
