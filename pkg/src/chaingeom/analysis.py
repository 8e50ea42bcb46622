"""Driver functions shared by the service endpoints and the CLI client:
build geometries from descriptors, run the analyses, and assemble the
certificate models."""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import descriptors, morphisms, projline, representations as reps, rings, schemas
from .errors import DescriptorError


@dataclass
class Geometry:
    ring: rings.FiniteRing
    emb: rings.SubfieldEmbedding
    line: projline.ProjectiveLine
    desc: schemas.GeometryDesc


def build_geometry(ring_desc: str, field_desc: str, embed_mode: str) -> Geometry:
    ring = descriptors.parse_ring(ring_desc)
    F = descriptors.parse_field(field_desc)
    if embed_mode not in ("scalar", "regular"):
        raise DescriptorError(f"invalid embedding mode {embed_mode!r}")
    emb = rings.embed_subfield(F, ring, embed_mode)
    line = projline.projective_line(ring)
    return Geometry(ring, emb, line,
                    schemas.GeometryDesc(ring=ring.descriptor, field=F.name,
                                         embed=embed_mode))


def build_representation(geom: Geometry, rep_desc: str, dim: int | None = None):
    kind, power = descriptors.parse_rep_descriptor(rep_desc)
    if kind == "natural":
        return reps.natural_representation(geom.ring)
    if kind == "regular":
        return reps.regular_representation(geom.emb)
    if geom.ring.kind != "matrix_ring" or geom.ring.d != 1:
        raise DescriptorError("basis representations require a field as ring")
    return reps.scalar_representation(geom.ring.K, dim or 2, power)


def _transversal_info(rec) -> schemas.TransversalInfo:
    return schemas.TransversalInfo(
        vector=list(rec.vector),
        hom_source=rec.hom.source.name,
        hom_target=rec.hom.target.name,
        generator_image=rec.hom(rec.hom.source.generator),
        full=rec.full,
    )


def _verdict_info(cert: reps.RegulusCertificate) -> schemas.VerdictInfo:
    classes = None
    if cert.classes:
        classes = [
            schemas.LinkedClassInfo(
                generator_image=cls.hom(cls.hom.source.generator),
                dimension=len(cls.basis),
                basis=[list(r) for r in cls.basis])
            for cls in cert.classes
        ]
    return schemas.VerdictInfo(
        verdict=cert.verdict,
        automorphism=cert.twist.name if cert.twist is not None else None,
        classes=classes,
        witness_basis=[list(r) for r in cert.witness_basis] or None,
        reason=cert.reason,
        synthetic_checked=cert.synthetic_checked,
    )


def analyze(req: schemas.AnalyzeRequest) -> schemas.Certificate:
    timings = {}
    t0 = time.perf_counter()
    geom = build_geometry(req.ring, req.field, req.embed)
    rep = build_representation(geom, req.rep, req.dim)
    timings["build"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    orbit = projline.enumerate_chains(geom.line, geom.emb, cap=req.cap,
                                      allow_partial=True)
    timings["chains"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    transversals = reps.weak_transversals(rep, geom.emb)
    verdict = reps.regulus_verdict(rep, geom.emb)
    timings["analysis"] = time.perf_counter() - t0

    spreads = []
    summary = {"not_spread": 0, "spread": 0, "regular_spread": 0, "skipped": 0}
    t0 = time.perf_counter()
    if rep.dim == 2:
        limit = len(orbit.chains) if req.spread_limit is None else req.spread_limit
        for idx, chain in enumerate(orbit.chains):
            if idx >= limit:
                summary["skipped"] += 1
                continue
            pairs = [geom.line.points[p] for p in chain.point_ids]
            cls = reps.classify_spread(rep, pairs)
            spreads.append(schemas.SpreadInfo(chain_index=idx, classification=cls))
            summary[cls] += 1
    timings["spreads"] = time.perf_counter() - t0

    return schemas.Certificate(
        geometry=geom.desc,
        counts=schemas.CountsInfo(
            points=len(geom.line),
            chains=len(orbit.chains),
            chain_size=len(orbit.chains[0].point_ids),
            chain_enumeration_complete=orbit.complete,
        ),
        representation=schemas.RepresentationInfo(
            kind=rep.label, dim_u=rep.dim, scalar_field=rep.K.name,
            faithful=rep.faithful),
        transversals=[_transversal_info(r) for r in transversals],
        verdict=_verdict_info(verdict),
        spreads=spreads,
        spread_summary=summary,
        timings={k: round(v, 6) for k, v in timings.items()}
                if req.include_timings else None,
        rng_seed=req.seed,
    )


def morphism_report(req: schemas.MorphismRequest) -> schemas.MorphismCertificate:
    timings = {}
    t0 = time.perf_counter()
    src = build_geometry(req.source.ring, req.source.field, req.source.embed)
    tgt = build_geometry(req.target.ring, req.target.field, req.target.embed)
    kappa = _parse_kappa(src.ring.K, tgt.ring.K, req.kappa)
    omega = (descriptors.parse_automorphism(src.ring.K, req.omega)
             if req.omega is not None else None)
    h1 = [[int(c) for c in row] for row in req.h1]
    spec = morphisms.make_fundamental(src.line, src.emb, tgt.line, tgt.emb,
                                      kappa, h1, omega=omega, force=req.force,
                                      isomorphism=req.isomorphism)
    timings["build"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    src_orbit = projline.enumerate_chains(src.line, src.emb, cap=req.chain_cap)
    tgt_orbit = projline.enumerate_chains(tgt.line, tgt.emb, cap=req.chain_cap)
    report = morphisms.verify_morphism(spec, src_orbit, tgt_orbit)
    timings["verify"] = time.perf_counter() - t0

    return schemas.MorphismCertificate(
        source=src.desc,
        target=tgt.desc,
        descriptor=schemas.MorphismDescriptor(**spec.descriptor),
        forced=req.force,
        verdicts=schemas.MorphismVerdicts(
            bijective=report.bijective,
            distant_preserving_forward=report.distant_preserving_forward,
            distant_preserving_backward=report.distant_preserving_backward,
            chains_into_chains=report.chains_into_chains,
            chains_onto_chains=report.chains_onto_chains,
            fundamental=report.fundamental,
        ),
        timings={k: round(v, 6) for k, v in timings.items()}
                if req.include_timings else None,
    )


def _parse_kappa(src_K, tgt_K, text: str):
    if src_K == tgt_K:
        return descriptors.parse_automorphism(src_K, text)
    from .fields import homomorphisms
    homs = [h for h in homomorphisms(src_K, tgt_K) if h.is_surjective()]
    if not homs:
        raise DescriptorError("no isomorphism between the coefficient fields")
    aut = descriptors.parse_automorphism(tgt_K, text)
    return homs[0].then(aut)


def points_payload(req: schemas.GeometryRequest) -> schemas.PointsResponse:
    ring = descriptors.parse_ring(req.ring)
    line = projline.projective_line(ring, pair_cap=req.cap)
    pts = None
    if req.include_elements:
        pts = [schemas.PointInfo(id=i,
                                 a=[list(r) for r in ring.mat(a)],
                                 b=[list(r) for r in ring.mat(b)])
               for i, (a, b) in enumerate(line.points)]
    return schemas.PointsResponse(ring=ring.descriptor, count=len(line), points=pts)


def chains_payload(req: schemas.GeometryRequest) -> schemas.ChainsResponse:
    if req.field is None:
        raise DescriptorError("chains need a subfield descriptor")
    geom = build_geometry(req.ring, req.field, req.embed)
    orbit = projline.enumerate_chains(geom.line, geom.emb, cap=req.cap,
                                      allow_partial=True)
    ring = geom.ring
    chains = None
    if req.include_elements:
        chains = []
        for c in orbit.chains:
            witness = [[[list(r) for r in ring.mat(c.witness[i][j])]
                        for j in range(2)] for i in range(2)]
            chains.append(schemas.ChainInfo(points=list(c.point_ids),
                                            witness=witness))
    return schemas.ChainsResponse(
        ring=ring.descriptor, field=geom.emb.F.name, embed=geom.emb.mode,
        count=len(orbit.chains), chain_size=len(orbit.chains[0].point_ids),
        complete=orbit.complete, chains=chains)


def distant_graph_dot(ring_desc: str) -> str:
    """DOT rendering of the distant graph; a convenience, not a contract."""
    ring = descriptors.parse_ring(ring_desc)
    line = projline.projective_line(ring)
    lines = [f'graph distant_{ring.descriptor.replace(":", "_").replace("(", "").replace(")", "")} {{']
    n = len(line)
    for p in range(n):
        lines.append(f"  p{p};")
    for p in range(n):
        for q in range(p + 1, n):
            if line.is_distant(p, q):
                lines.append(f"  p{p} -- p{q};")
    lines.append("}")
    return "\n".join(lines) + "\n"
