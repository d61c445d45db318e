# main.py
from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from config import settings
from routers.algebra import router as algebra_router
from routers.audits import router as audits_router
from routers.checks import router as checks_router
from routers.endo import router as endo_router
from routers.modules import router as modules_router

app = FastAPI(title=settings.APP_NAME)

app.add_middleware(
    CORSMiddleware,
    allow_origin_regex=".*",
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(algebra_router)   # /algebra/*
app.include_router(endo_router)      # /endo/*
app.include_router(modules_router)   # /modules/*
app.include_router(checks_router)    # /checks/{suite}
app.include_router(audits_router)    # /audits/{subject}


@app.get("/", tags=["default"])
def root():
    return {"ok": True, "service": settings.APP_NAME}


@app.get("/healthz", tags=["default"])
def healthz():
    return {"ok": True}
