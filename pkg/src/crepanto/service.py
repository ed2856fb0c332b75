"""HTTP front end: one stateless endpoint per computation.

Every endpoint returns the same report envelope the CLI prints, so the CLI
can run against a remote service or in process interchangeably.
"""

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__, reports
from .errors import CrepantoError

app = FastAPI(
    title="crepanto",
    description="Exact toric computations for crepant resolutions of "
    "abelian quotient singularities",
    version=__version__,
)


class TypeRequest(BaseModel):
    l: int = Field(ge=2, description="group order")
    weights: list[int]


class SeriesRequest(BaseModel):
    l: int = Field(ge=2)
    r: int = Field(ge=2)


class SeriesScanRequest(BaseModel):
    l_min: int = Field(ge=2)
    l_max: int = Field(ge=2)
    r: int = Field(ge=2)


class FactorizeRequest(BaseModel):
    l: int = Field(ge=2)
    r: int = Field(ge=2)
    mode: str = "speedy"


class BundleRequest(BaseModel):
    r: int = Field(ge=2)
    twists: list[int]


class TriangulationPayload(BaseModel):
    denominator: int = Field(ge=1)
    points: list[list[int]]
    simplices: list[list[int]]


class Report(BaseModel):
    schema_version: str
    command: str
    input: dict
    result: dict


def _run(builder, *args):
    try:
        return builder(*args)
    except CrepantoError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.get("/")
def index():
    return {"service": "crepanto", "version": __version__}


@app.post("/analyze", response_model=Report)
def analyze(req: TypeRequest):
    return _run(reports.analyze_report, req.l, req.weights)


@app.post("/hilbert", response_model=Report)
def hilbert(req: TypeRequest):
    return _run(reports.hilbert_report, req.l, req.weights)


@app.post("/criterion", response_model=Report)
def criterion(req: TypeRequest):
    return _run(reports.criterion_report, req.l, req.weights)


@app.post("/cohomology", response_model=Report)
def cohomology(req: TypeRequest):
    return _run(reports.cohomology_report, req.l, req.weights)


@app.post("/resolve-series", response_model=Report)
def resolve_series(req: SeriesRequest):
    return _run(reports.resolve_series_report, req.l, req.r)


@app.post("/resolve-series/scan", response_model=Report)
def resolve_series_scan(req: SeriesScanRequest):
    return _run(reports.series_scan_report, req.l_min, req.l_max, req.r)


@app.post("/factorize", response_model=Report)
def factorize(req: FactorizeRequest):
    return _run(reports.factorize_report, req.l, req.r, req.mode)


@app.post("/bundle", response_model=Report)
def bundle(req: BundleRequest):
    return _run(reports.bundle_report, req.r, req.twists)


@app.post("/triangulate/check", response_model=Report)
def triangulate_check(payload: TriangulationPayload):
    return _run(reports.triangulate_check_report, payload.model_dump())
