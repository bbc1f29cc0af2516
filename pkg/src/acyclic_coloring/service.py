"""FastAPI service wrapping the coloring library.

Endpoints mirror the CLI subcommands: /color, /verify, /oracle, /generate,
/bench, plus /health.  Inputs carry graphs in the edge-list text format;
colorings travel as {"schema": 1, "palette": p, "edges": [[u, v, color]]}.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import __version__
from .bench import run_bench
from .coloring import coloring_from_dict, coloring_to_dict, is_acyclic
from .errors import (
    BadSpec,
    ExtensionFailed,
    GraphError,
    KTooSmall,
    MaxColorsExceeded,
    NotKDegenerate,
)
from .generate import GenSpec, build
from .graph import format_edge_list, parse_edge_list
from .oracle import exact_acyclic_chromatic_index, verify_coloring
from .runner import run_color
from .schemas import (
    BenchRequest,
    BenchResponse,
    ColoringPayload,
    ColorRequest,
    ColorResponse,
    ColorSummary,
    GenerateRequest,
    GenerateResponse,
    HealthResponse,
    OracleRequest,
    OracleResponse,
    VerifyRequest,
    VerifyResponse,
)


def _bad_request(code: str, exc: Exception) -> HTTPException:
    return HTTPException(status_code=400, detail={"code": code, "message": str(exc)})


def _unprocessable(code: str, exc: Exception) -> HTTPException:
    return HTTPException(status_code=422, detail={"code": code, "message": str(exc)})


def _parse_graph(edge_list: str):
    try:
        return parse_edge_list(edge_list)
    except GraphError as exc:
        raise _bad_request("parse", exc)


def create_app() -> FastAPI:
    app = FastAPI(title="acyclic-coloring", version=__version__)

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/color", response_model=ColorResponse)
    def color(req: ColorRequest) -> ColorResponse:
        g = _parse_graph(req.edge_list)
        try:
            run = run_color(g, algorithm=req.algorithm, k=req.k, verify=req.verify)
        except NotKDegenerate as exc:
            raise _unprocessable("not-degenerate", exc)
        except KTooSmall as exc:
            raise _unprocessable("bad-spec", exc)
        except ExtensionFailed as exc:
            raise HTTPException(
                status_code=500,
                detail={"code": "extension-failed", "message": str(exc)},
            )
        colors_used = len(run.coloring.used_colors())
        summary = ColorSummary(
            n=g.n,
            m=g.m,
            max_degree=g.max_degree(),
            degeneracy=run.degeneracy,
            algorithm=run.algorithm,
            k=run.k,
            palette=run.palette,
            colors_used=colors_used,
            verified=None if run.report is None else run.report.ok,
        )
        payload = ColoringPayload(**coloring_to_dict(g, run.coloring))
        return ColorResponse(coloring=payload, summary=summary)

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        try:
            g, coloring = coloring_from_dict(
                req.coloring.model_dump(by_alias=True)
            )
        except (GraphError, KeyError, ValueError) as exc:
            raise _bad_request("parse", exc)
        bound = req.bound if req.bound is not None else coloring.palette
        report = verify_coloring(g, coloring, bound)
        cycle = report.cycle
        return VerifyResponse(
            ok=report.ok,
            total=report.total,
            proper=report.proper,
            acyclic=report.acyclic,
            colors_used=report.colors_used,
            bound=report.bound,
            bound_ok=report.bound_ok,
            improper_vertex=report.improper_vertex,
            cycle_vertices=None if cycle is None else cycle.vertices,
            cycle_edges=None if cycle is None else cycle.edges,
            cycle_colors=None if cycle is None else list(cycle.colors),
        )

    @app.post("/oracle", response_model=OracleResponse)
    def oracle(req: OracleRequest) -> OracleResponse:
        g = _parse_graph(req.edge_list)
        max_colors = (
            req.max_colors if req.max_colors is not None else g.max_degree() + 5
        )
        try:
            result = exact_acyclic_chromatic_index(g, max_colors)
        except MaxColorsExceeded as exc:
            raise _unprocessable("exceeded", exc)
        witness_report = is_acyclic(g, result.witness)
        if not (witness_report.proper and witness_report.acyclic):
            raise HTTPException(
                status_code=500,
                detail={"code": "oracle-bug", "message": "witness failed verification"},
            )
        return OracleResponse(
            exact_index=result.exact_index,
            nodes_explored=result.nodes_explored,
            witness=ColoringPayload(**coloring_to_dict(g, result.witness)),
        )

    @app.post("/generate", response_model=GenerateResponse)
    def generate(req: GenerateRequest) -> GenerateResponse:
        try:
            g = build(GenSpec(family=req.family, n=req.n, k=req.k, seed=req.seed))
        except BadSpec as exc:
            raise _unprocessable("bad-spec", exc)
        return GenerateResponse(n=g.n, m=g.m, edge_list=format_edge_list(g))

    @app.post("/bench", response_model=BenchResponse)
    def bench(req: BenchRequest) -> BenchResponse:
        rows = run_bench(seed=req.seed, max_n=req.max_n, oracle_max_n=req.oracle_max_n)
        return BenchResponse(rows=rows)

    return app


app = create_app()
