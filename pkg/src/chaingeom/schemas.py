"""Pydantic request/response models for the service and the certificates.

Certificates are emitted as UTF-8 JSON with the field order fixed by the
model declarations below; ``canonical_json_bytes`` is the single
serialisation path used by the service and the CLI, so identical inputs
and seed produce byte-identical files.  Matrix entries are int-encoded
field elements (base-p packed coefficient vectors).
"""

from __future__ import annotations

import json

from pydantic import BaseModel, Field

SCHEMA_VERSION = "chaingeom-cert/1"


def canonical_json_bytes(payload) -> bytes:
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    return (json.dumps(payload, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


class GeometryDesc(BaseModel):
    ring: str
    field: str
    embed: str = "scalar"


class AnalyzeRequest(BaseModel):
    ring: str
    field: str
    embed: str = "scalar"
    rep: str = "natural"
    dim: int | None = Field(default=None, description="module dimension for basis reps")
    seed: int = 0
    cap: int = 100_000
    spread_limit: int | None = Field(
        default=None, description="classify spreads for at most this many chains")
    include_timings: bool = False


class VerifySuiteRequest(BaseModel):
    seed: int = 0
    only: str | None = None
    cap: int = 64
    include_timings: bool = False


class MorphismRequest(BaseModel):
    source: GeometryDesc
    target: GeometryDesc
    kappa: str = "frob^0"
    h1: list[list[int]]
    omega: str | None = None
    force: bool = False
    isomorphism: bool = False
    chain_cap: int = 100_000
    include_timings: bool = False


class GeometryRequest(BaseModel):
    ring: str
    field: str | None = None
    embed: str = "scalar"
    cap: int = 100_000
    include_elements: bool = True


# -- certificate fragments ---------------------------------------------------

class CountsInfo(BaseModel):
    points: int
    chains: int | None = None
    chain_size: int | None = None
    chain_enumeration_complete: bool | None = None


class RepresentationInfo(BaseModel):
    kind: str
    dim_u: int
    scalar_field: str
    faithful: bool


class TransversalInfo(BaseModel):
    vector: list[int]
    hom_source: str
    hom_target: str
    generator_image: int
    full: bool


class LinkedClassInfo(BaseModel):
    generator_image: int
    dimension: int
    basis: list[list[int]]


class VerdictInfo(BaseModel):
    verdict: str
    automorphism: str | None = None
    classes: list[LinkedClassInfo] | None = None
    witness_basis: list[list[int]] | None = None
    reason: str | None = None
    synthetic_checked: bool = False


class SpreadInfo(BaseModel):
    chain_index: int
    classification: str


class MorphismVerdicts(BaseModel):
    bijective: bool
    distant_preserving_forward: bool
    distant_preserving_backward: bool
    chains_into_chains: bool
    chains_onto_chains: bool
    fundamental: bool


class MorphismDescriptor(BaseModel):
    kappa: str
    H1: list[list[int]] | None = None
    omega: str | None = None


class MorphismCertificate(BaseModel):
    schema_version: str = SCHEMA_VERSION
    kind: str = "morphism"
    source: GeometryDesc
    target: GeometryDesc
    descriptor: MorphismDescriptor
    forced: bool = False
    verdicts: MorphismVerdicts
    timings: dict[str, float] | None = None


class Certificate(BaseModel):
    schema_version: str = SCHEMA_VERSION
    kind: str = "analysis"
    geometry: GeometryDesc
    counts: CountsInfo
    representation: RepresentationInfo
    transversals: list[TransversalInfo]
    verdict: VerdictInfo
    spreads: list[SpreadInfo]
    spread_summary: dict[str, int]
    morphism_reports: list[MorphismCertificate] = []
    timings: dict[str, float] | None = None
    rng_seed: int = 0


class CheckResult(BaseModel):
    id: str
    status: str  # pass | fail
    details: str


class SuiteCertificate(BaseModel):
    schema_version: str = SCHEMA_VERSION
    kind: str = "suite"
    seed: int
    selected: str | None = None
    checks: list[CheckResult]
    passed: bool
    timings: dict[str, float] | None = None


class PointInfo(BaseModel):
    id: int
    a: list[list[int]]
    b: list[list[int]]


class PointsResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    kind: str = "points"
    ring: str
    count: int
    points: list[PointInfo] | None = None


class ChainInfo(BaseModel):
    points: list[int]
    witness: list[list[list[list[int]]]]


class ChainsResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    kind: str = "chains"
    ring: str
    field: str
    embed: str
    count: int
    chain_size: int
    complete: bool
    chains: list[ChainInfo] | None = None


class ErrorResponse(BaseModel):
    error: str
    detail: str


class ServiceInfo(BaseModel):
    service: str = "chaingeom"
    version: str
    schema_version: str = SCHEMA_VERSION
    endpoints: list[str]
