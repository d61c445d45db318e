# routers/modules.py
from __future__ import annotations

from fastapi import APIRouter, HTTPException

from core.errors import HVHomError
from models.requests import ActRequest, ElementOut, SolveTwistRequest, SpecRequest
from services.expr import parse_element, parse_vector
from services.homrep import admissibility, derive_spec, is_weight_module, solve_twist_window
from services.homrep.models import TwistSolutionPayload
from services.intermediate import act

router = APIRouter(prefix="/modules", tags=["modules"])


def _spec(body: SpecRequest):
    return derive_spec(body.family.params(), body.endo.params(), body.norm, strict=body.strict)


@router.post("/act", response_model=ElementOut)
def post_act(body: ActRequest):
    try:
        sign = 1 if body.printed else -1
        result = act(body.family.params(), parse_element(body.x), parse_vector(body.v), sign)
    except HVHomError as e:
        raise HTTPException(400, str(e))
    return {"result": result.format()}


@router.post("/admissible")
def post_admissible(body: SpecRequest):
    try:
        found = admissibility(body.family.params(), body.endo.params())
        spec = _spec(body)
    except HVHomError as e:
        raise HTTPException(400, str(e))
    return {"q": found.q, "constraints": list(found.constraints), "spec": spec.as_dict()}


@router.post("/solve-twist", response_model=TwistSolutionPayload)
def post_solve_twist(body: SolveTwistRequest):
    try:
        solution = solve_twist_window(body.family.params(), body.endo.params(), body.window)
    except HVHomError as e:
        raise HTTPException(400, str(e))
    return solution.to_payload()


@router.post("/weight")
def post_weight(body: SpecRequest):
    try:
        spec = _spec(body)
    except HVHomError as e:
        raise HTTPException(400, str(e))
    return {"weight": is_weight_module(spec), "spec": spec.as_dict()}
