"""HTTP service exposing the constructions as deterministic JSON reports.

POST /v1/kpar     -- K_par of a finite group with its block decomposition
POST /v1/rankone  -- full rank-one pipeline, optionally diffed against the
                     embedded reference cases
POST /v1/verify   -- the invariant suites
GET  /v1/health

Responses are rendered through canonical JSON (sorted keys), so identical
requests produce byte-identical bodies.
"""

from __future__ import annotations

from typing import Any, List, Optional

from fastapi import FastAPI, HTTPException, Response
from pydantic import BaseModel, Field

from .errors import HopfparError
from .reports import (canonical_json, kpar_report, parse_field_spec,
                      rankone_report, resolve_group, verify_report)

app = FastAPI(
    title="hopfpar",
    description="Exact block decompositions of partial-representation "
                "algebras at desk scale",
    version="0.1.0",
)


class GroupSpec(BaseModel):
    spec: Optional[str] = Field(default=None,
                                description="builtin spec, e.g. cyclic:4, klein4, s3, d4, q8")
    table: Optional[List[List[int]]] = None
    labels: Optional[List[str]] = None
    name: Optional[str] = None

    def build(self):
        table_json = None
        if self.table is not None:
            table_json = {"table": self.table, "labels": self.labels,
                          "name": self.name or "G"}
        return resolve_group(self.spec, table_json)


class KparRequest(BaseModel):
    group: GroupSpec
    include_structure: bool = False


class RankOneRequest(BaseModel):
    group: GroupSpec
    chi: str = "-1"
    a: str = "g"
    kappa: str = "0"
    truncation: int = Field(default=3, ge=1)
    field: str = "auto"
    against_paper: Optional[str] = None
    include_structure: bool = False


class VerifyRequest(BaseModel):
    suites: List[str] = ["all"]
    max_group_order: int = Field(default=4, ge=1, le=8)
    truncation: int = Field(default=3, ge=1)
    hopf_structure: Optional[dict] = None


class BlockEntry(BaseModel):
    representative: str
    orbit: List[str]
    stabilizer_order: int
    dim: int


class KparReport(BaseModel):
    schema_id: str = Field(alias="schema")
    command: str
    group: dict
    dim: int
    components: List[dict]
    matrix_decomposition: str
    blocks: List[BlockEntry]
    checks: dict
    structure: Optional[dict] = None

    model_config = {"populate_by_name": True}


class RankOneReport(BaseModel):
    schema_id: str = Field(alias="schema")
    command: str
    field: dict
    truncation: int
    datum: dict
    hopf: dict
    apar: dict
    hpar: dict
    multiplicities: Optional[dict] = None
    against: Optional[dict] = None
    structure: Optional[dict] = None

    model_config = {"populate_by_name": True}


class VerifyReport(BaseModel):
    schema_id: str = Field(alias="schema")
    command: str
    max_group_order: int
    truncation: int
    passed: bool
    suites: List[dict]

    model_config = {"populate_by_name": True}


def _respond(model: BaseModel) -> Response:
    payload = canonical_json(model.model_dump(by_alias=True, exclude_none=True))
    return Response(content=payload, media_type="application/json")


def _wrap(fn, *args: Any):
    try:
        return fn(*args)
    except HopfparError as exc:
        raise HTTPException(status_code=400, detail=exc.to_json())


@app.get("/v1/health")
def health():
    return {"schema": "hopfpar/1", "status": "ok"}


@app.post("/v1/kpar", response_model=KparReport)
def kpar_endpoint(req: KparRequest) -> Response:
    group = _wrap(req.group.build)
    report = _wrap(kpar_report, group, req.include_structure)
    return _respond(KparReport.model_validate(report))


@app.post("/v1/rankone", response_model=RankOneReport)
def rankone_endpoint(req: RankOneRequest) -> Response:
    group = _wrap(req.group.build)
    field = _wrap(parse_field_spec, req.field, req.chi, req.kappa)

    def run():
        return rankone_report(group, req.chi, req.a, req.kappa,
                              req.truncation, field, against=req.against_paper,
                              include_structure=req.include_structure)

    report = _wrap(run)
    return _respond(RankOneReport.model_validate(report))


@app.post("/v1/verify", response_model=VerifyReport)
def verify_endpoint(req: VerifyRequest) -> Response:
    def run():
        return verify_report(req.suites, req.max_group_order, req.truncation,
                             hopf_structure=req.hopf_structure)

    report = _wrap(run)
    return _respond(VerifyReport.model_validate(report))
