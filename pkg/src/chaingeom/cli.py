"""Command-line client for the analysis service.

The CLI is a thin client: every subcommand builds a request model and
sends it through the service API, in-process by default or over HTTP when
--server is given.  Certificates are re-serialised through the canonical
JSON writer, so files are byte-identical for identical inputs and seed.

Exit codes: 0 success, 1 verification failure, 2 invalid descriptor,
3 cap exceeded, 4 morphism/domain error.
"""

from __future__ import annotations

import sys

import click

from . import schemas
from .schemas import canonical_json_bytes

EXIT_VERIFY_FAILED = 1
EXIT_BAD_DESCRIPTOR = 2
EXIT_CAP_EXCEEDED = 3
EXIT_DOMAIN_ERROR = 4

_ERROR_EXITS = {
    "invalid-descriptor": EXIT_BAD_DESCRIPTOR,
    "cap-exceeded": EXIT_CAP_EXCEEDED,
    "morphism-condition": EXIT_DOMAIN_ERROR,
    "domain-error": EXIT_DOMAIN_ERROR,
}


class ServiceClient:
    """POSTs request models to the service, remote or in-process."""

    def __init__(self, server: str | None):
        if server:
            import httpx
            self._client = httpx.Client(base_url=server, timeout=600.0)
        else:
            import warnings
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient
            from .service import app
            self._client = TestClient(app)

    def post(self, path: str, model) -> dict:
        resp = self._client.post(path, json=model.model_dump(mode="json"))
        payload = resp.json()
        if resp.status_code != 200:
            detail = payload.get("detail", payload)
            error = payload.get("error", "domain-error")
            if isinstance(detail, list):  # pydantic validation errors
                error = "invalid-descriptor"
                detail = "; ".join(str(e.get("msg", e)) for e in detail)
            click.echo(f"error ({error}): {detail}", err=True)
            sys.exit(_ERROR_EXITS.get(error, EXIT_DOMAIN_ERROR))
        return payload


def _emit(payload: dict, emit_path: str | None):
    data = canonical_json_bytes(payload)
    if emit_path:
        with open(emit_path, "wb") as fh:
            fh.write(data)
        click.echo(f"certificate written to {emit_path}")
    return data


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="Service base URL; default runs the service in-process.")
@click.pass_context
def main(ctx, server):
    """Analyse chain geometries over small finite rings."""
    ctx.obj = ServiceClient(server)


@main.command()
@click.option("--ring", required=True, help='e.g. "m2:gf(3)", "dual:gf(2)"')
@click.option("--field", "field_", required=True, help='e.g. "gf(9)"')
@click.option("--embed", default="scalar", type=click.Choice(["scalar", "regular"]))
@click.option("--rep", default="natural", help="natural | regular | basis:frob^i")
@click.option("--dim", default=None, type=int, help="module dimension for basis reps")
@click.option("--seed", default=0, type=int)
@click.option("--cap", default=100_000, type=int, help="chain enumeration cap")
@click.option("--spread-limit", default=None, type=int,
              help="classify spreads for at most this many chains")
@click.option("--timings", is_flag=True, help="include timings (breaks byte determinism)")
@click.option("--emit", default=None, type=click.Path(), help="write the certificate here")
@click.option("--emit-dot", default=None, type=click.Path(),
              help="also write the distant graph in DOT format")
@click.pass_obj
def analyze(client, ring, field_, embed, rep, dim, seed, cap, spread_limit,
            timings, emit, emit_dot):
    """Full analysis certificate for one geometry and representation."""
    req = schemas.AnalyzeRequest(ring=ring, field=field_, embed=embed, rep=rep,
                                 dim=dim, seed=seed, cap=cap,
                                 spread_limit=spread_limit,
                                 include_timings=timings)
    cert = client.post("/analyze", req)
    _emit(cert, emit)
    if emit_dot:
        from .analysis import distant_graph_dot
        with open(emit_dot, "w", encoding="utf-8") as fh:
            fh.write(distant_graph_dot(ring))
        click.echo(f"distant graph written to {emit_dot}")
    counts = cert["counts"]
    click.echo(f"geometry: {cert['geometry']['ring']} / {cert['geometry']['field']} "
               f"({cert['geometry']['embed']})")
    click.echo(f"points: {counts['points']}  chains: {counts['chains']} "
               f"(size {counts['chain_size']}, complete: {counts['chain_enumeration_complete']})")
    click.echo(f"representation: {cert['representation']['kind']} "
               f"dim {cert['representation']['dim_u']} over "
               f"{cert['representation']['scalar_field']}")
    click.echo(f"transversals: {len(cert['transversals'])} "
               f"(full: {sum(1 for t in cert['transversals'] if t['full'])})")
    v = cert["verdict"]
    extra = f" ({v['automorphism']})" if v.get("automorphism") else ""
    extra += f" [{v['reason']}]" if v.get("reason") else ""
    click.echo(f"verdict: {v['verdict']}{extra}")
    click.echo(f"spreads: {cert['spread_summary']}")
    if not emit:
        sys.stdout.buffer.write(canonical_json_bytes(cert))


@main.command("verify-suite")
@click.option("--seed", default=0, type=int)
@click.option("--only", default=None, help="run only checks whose id contains this")
@click.option("--cap", default=64, type=int, help="chain budget for the heavy checks")
@click.option("--timings", is_flag=True)
@click.option("--emit", default=None, type=click.Path())
@click.pass_obj
def verify_suite(client, seed, only, cap, timings, emit):
    """Run the structural verification suite; nonzero exit on failure."""
    req = schemas.VerifySuiteRequest(seed=seed, only=only, cap=cap,
                                     include_timings=timings)
    cert = client.post("/verify-suite", req)
    _emit(cert, emit)
    width = max((len(c["id"]) for c in cert["checks"]), default=10)
    for c in cert["checks"]:
        click.echo(f"{c['id']:<{width}}  {c['status']:<4}  {c['details']}")
    click.echo(f"overall: {'pass' if cert['passed'] else 'FAIL'} "
               f"({len(cert['checks'])} checks, seed {cert['seed']})")
    if not cert["passed"]:
        sys.exit(EXIT_VERIFY_FAILED)


@main.command()
@click.option("--source-ring", required=True)
@click.option("--source-field", required=True)
@click.option("--source-embed", default="scalar", type=click.Choice(["scalar", "regular"]))
@click.option("--target-ring", required=True)
@click.option("--target-field", required=True)
@click.option("--target-embed", default="scalar", type=click.Choice(["scalar", "regular"]))
@click.option("--kappa", default="frob^0", help='coefficient-field map, e.g. "frob^1"')
@click.option("--h1", required=True,
              help='2x2 block over the target coefficient field, e.g. "1,0;0,1"')
@click.option("--omega", default=None, help="antiautomorphism factor, e.g. frob^0")
@click.option("--force", is_flag=True,
              help="build even if the subfield condition fails (negative control)")
@click.option("--isomorphism", is_flag=True,
              help="require equality instead of inclusion of the conjugated subfield")
@click.option("--emit", default=None, type=click.Path())
@click.pass_obj
def morphism(client, source_ring, source_field, source_embed, target_ring,
             target_field, target_embed, kappa, h1, omega, force, isomorphism,
             emit):
    """Build a fundamental map and verify its morphism properties."""
    try:
        h1_matrix = [[int(c) for c in row.split(",")] for row in h1.split(";")]
    except ValueError:
        click.echo(f"error (invalid-descriptor): cannot parse --h1 {h1!r}", err=True)
        sys.exit(EXIT_BAD_DESCRIPTOR)
    req = schemas.MorphismRequest(
        source=schemas.GeometryDesc(ring=source_ring, field=source_field,
                                    embed=source_embed),
        target=schemas.GeometryDesc(ring=target_ring, field=target_field,
                                    embed=target_embed),
        kappa=kappa, h1=h1_matrix, omega=omega, force=force,
        isomorphism=isomorphism)
    cert = client.post("/morphism", req)
    _emit(cert, emit)
    for key, value in cert["verdicts"].items():
        click.echo(f"{key:<28s} {value}")
    if not emit:
        sys.stdout.buffer.write(canonical_json_bytes(cert))


@main.command()
@click.option("--ring", required=True)
@click.option("--cap", default=100_000, type=int)
@click.option("--count-only", is_flag=True)
@click.option("--emit", default=None, type=click.Path())
@click.option("--emit-dot", default=None, type=click.Path())
@click.pass_obj
def points(client, ring, cap, count_only, emit, emit_dot):
    """Enumerate the points of the projective line over a ring."""
    req = schemas.GeometryRequest(ring=ring, cap=cap,
                                  include_elements=not count_only)
    payload = client.post("/points", req)
    _emit(payload, emit)
    click.echo(f"points of P({payload['ring']}): {payload['count']}")
    if emit_dot:
        from .analysis import distant_graph_dot
        with open(emit_dot, "w", encoding="utf-8") as fh:
            fh.write(distant_graph_dot(ring))
        click.echo(f"distant graph written to {emit_dot}")


@main.command()
@click.option("--ring", required=True)
@click.option("--field", "field_", required=True)
@click.option("--embed", default="scalar", type=click.Choice(["scalar", "regular"]))
@click.option("--cap", default=100_000, type=int)
@click.option("--count-only", is_flag=True)
@click.option("--emit", default=None, type=click.Path())
@click.pass_obj
def chains(client, ring, field_, embed, cap, count_only, emit):
    """Enumerate the chain orbit of a geometry."""
    req = schemas.GeometryRequest(ring=ring, field=field_, embed=embed, cap=cap,
                                  include_elements=not count_only)
    payload = client.post("/chains", req)
    _emit(payload, emit)
    click.echo(f"chains of ({payload['ring']}, {payload['field']}, {payload['embed']}): "
               f"{payload['count']} of size {payload['chain_size']} "
               f"(complete: {payload['complete']})")


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", default=8000, type=int)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn
    uvicorn.run("chaingeom.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
