"""FastAPI service exposing the analysis, suite, morphism, and enumeration
endpoints.  All computation lives in the core package; the endpoints only
translate between the request models and the drivers."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__, analysis, checks, schemas
from .errors import (CapExceeded, ChainGeomError, DescriptorError,
                     MorphismConditionError)

app = FastAPI(title="chaingeom", version=__version__)

_ENDPOINTS = ["/analyze", "/verify-suite", "/morphism", "/points", "/chains", "/checks"]


@app.exception_handler(DescriptorError)
async def _descriptor_error(request: Request, exc: DescriptorError):
    return JSONResponse(status_code=422,
                        content={"error": "invalid-descriptor", "detail": str(exc)})


@app.exception_handler(CapExceeded)
async def _cap_error(request: Request, exc: CapExceeded):
    return JSONResponse(status_code=400,
                        content={"error": "cap-exceeded", "detail": str(exc)})


@app.exception_handler(MorphismConditionError)
async def _morphism_error(request: Request, exc: MorphismConditionError):
    return JSONResponse(status_code=400,
                        content={"error": "morphism-condition", "detail": str(exc)})


@app.exception_handler(ChainGeomError)
async def _domain_error(request: Request, exc: ChainGeomError):
    return JSONResponse(status_code=400,
                        content={"error": "domain-error", "detail": str(exc)})


@app.get("/", response_model=schemas.ServiceInfo)
def info():
    return schemas.ServiceInfo(version=__version__, endpoints=_ENDPOINTS)


@app.get("/checks")
def list_checks():
    return {"checks": checks.check_ids()}


@app.post("/analyze", response_model=schemas.Certificate)
def analyze(req: schemas.AnalyzeRequest):
    return analysis.analyze(req)


@app.post("/verify-suite", response_model=schemas.SuiteCertificate)
def verify_suite(req: schemas.VerifySuiteRequest):
    return checks.run_suite(req)


@app.post("/morphism", response_model=schemas.MorphismCertificate)
def morphism(req: schemas.MorphismRequest):
    return analysis.morphism_report(req)


@app.post("/points", response_model=schemas.PointsResponse)
def points(req: schemas.GeometryRequest):
    return analysis.points_payload(req)


@app.post("/chains", response_model=schemas.ChainsResponse)
def chains(req: schemas.GeometryRequest):
    return analysis.chains_payload(req)
