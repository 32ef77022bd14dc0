"""FastAPI service exposing the pipeline over HTTP.

Every endpoint is a stateless wrapper around the core package; parsing,
validation and computation all happen server-side so that clients stay
thin.  Domain errors surface as 422 responses with a human-readable
detail message.

Run with:  uvicorn agjordan.service:app
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__
from .checks import CheckReport, check_rank_matrix
from .codim2 import jdt_from_jordan_type
from .errors import DomainError
from .jordan import (
    jdt_matrix,
    jordan_degree_type_from_rank_matrix,
    jordan_type_from_rank_matrix,
    rank_matrix,
)
from .lefschetz import conjugate, slp_witness, sperner, wlp_witness
from .multipoly import render_polynomial
from .polyparse import VarTable, infer_vars, parse_linear_form, parse_poly
from .refcases import verify_reference_examples
from .schemas import (
    Codim2Request,
    Codim2Response,
    CollideRequest,
    CollideResponse,
    CollisionModel,
    HealthResponse,
    HilbertRequest,
    HilbertResponse,
    LefschetzResponse,
    MatrixCheckRequest,
    MatrixCheckResponse,
    PipelineRequest,
    PipelineResponse,
    RealizeRequest,
    RealizeResponse,
    StringEntry,
    VerifyAssertion,
    VerifyResponse,
    ViolationModel,
)
from .search import SearchConfig, find_collisions, realize
from .structures import IndexedPartition, RankMatrix


def _table(variables: list[str] | None, *texts: str) -> VarTable:
    if variables is not None:
        return VarTable(variables)
    return infer_vars(*texts)


def _strings_payload(strings: IndexedPartition) -> list[StringEntry]:
    return [StringEntry(len=length, deg=start) for length, start in strings]


def _check_payload(report: CheckReport) -> MatrixCheckResponse:
    return MatrixCheckResponse(
        passed=report.passed,
        violations=[
            ViolationModel(rule=v.rule, row=v.row, col=v.col, detail=v.detail)
            for v in report.violations
        ],
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="agjordan",
        version=__version__,
        description="Jordan types and Jordan degree types from dual generators, computed exactly.",
    )

    @app.exception_handler(DomainError)
    async def _domain_error(request: Request, exc: DomainError) -> JSONResponse:
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/hilbert", response_model=HilbertResponse)
    def hilbert_endpoint(req: HilbertRequest) -> HilbertResponse:
        from .apolar import hilbert

        table = _table(req.variables, req.generator)
        f = parse_poly(req.generator, table)
        return HilbertResponse(hilbert=list(hilbert(f)))

    @app.post("/pipeline", response_model=PipelineResponse)
    def pipeline_endpoint(req: PipelineRequest) -> PipelineResponse:
        table = _table(req.variables, req.generator, req.ell)
        f = parse_poly(req.generator, table)
        ell = parse_linear_form(req.ell, table)
        m = rank_matrix(f, ell)
        j = jdt_matrix(m)
        return PipelineResponse(
            hilbert=list(m.diagonal(0)),
            rank_matrix=m.to_lists(),
            jdt_matrix=j.to_lists(),
            jordan_type=list(jordan_type_from_rank_matrix(m)),
            jordan_degree_type=_strings_payload(j.strings()),
        )

    @app.post("/lefschetz", response_model=LefschetzResponse)
    def lefschetz_endpoint(req: PipelineRequest) -> LefschetzResponse:
        table = _table(req.variables, req.generator, req.ell)
        f = parse_poly(req.generator, table)
        ell = parse_linear_form(req.ell, table)
        m = rank_matrix(f, ell)
        h = m.diagonal(0)
        p = jordan_type_from_rank_matrix(m)
        return LefschetzResponse(
            hilbert=list(h),
            jordan_type=list(p),
            parts=len(p),
            sperner=sperner(h),
            conjugate=list(conjugate(h)),
            wlp_witness=wlp_witness(p, h),
            slp_witness=slp_witness(p, h),
        )

    @app.post("/rank-matrix/check", response_model=MatrixCheckResponse)
    def check_endpoint(req: MatrixCheckRequest) -> MatrixCheckResponse:
        return _check_payload(check_rank_matrix(RankMatrix(req.matrix)))

    @app.post("/codim2/jdt", response_model=Codim2Response)
    def codim2_endpoint(req: Codim2Request) -> Codim2Response:
        strings = jdt_from_jordan_type(req.jordan_type, req.socle)
        return Codim2Response(jordan_degree_type=_strings_payload(strings))

    @app.post("/realize", response_model=RealizeResponse)
    def realize_endpoint(req: RealizeRequest) -> RealizeResponse:
        if req.variables is not None:
            names = tuple(req.variables)
            nvars = len(names)
        elif req.nvars is not None:
            nvars = req.nvars
            names = tuple(f"x{i+1}" for i in range(nvars))
        else:
            nvars, names = 3, ("x", "y", "z")
        defaults = SearchConfig()
        cfg = SearchConfig(
            coefficient_pool=tuple(req.coefficient_pool) if req.coefficient_pool else defaults.coefficient_pool,
            max_trials_per_layer=req.max_trials_per_layer or defaults.max_trials_per_layer,
            rng_seed=req.seed,
            time_budget=req.time_budget or defaults.time_budget,
        )
        result = realize(RankMatrix(req.matrix), nvars, cfg)
        return RealizeResponse(
            outcome=result.outcome,
            generator=render_polynomial(result.generator, names) if result.generator else None,
            variables=list(names),
            trials=result.trials,
            deepest_layer=result.deepest_layer,
            check=_check_payload(result.check_report) if result.check_report else None,
        )

    @app.post("/collide", response_model=CollideResponse)
    def collide_endpoint(req: CollideRequest) -> CollideResponse:
        if not req.pool:
            return CollideResponse(collisions=[])
        texts = [t for entry in req.pool for t in (entry.generator, entry.ell)]
        table = _table(req.variables, *texts)
        pool = [
            (parse_poly(entry.generator, table), parse_linear_form(entry.ell, table))
            for entry in req.pool
        ]
        hits = find_collisions(pool)
        return CollideResponse(
            collisions=[
                CollisionModel(
                    first=c.first,
                    second=c.second,
                    hilbert=list(c.hilbert),
                    jordan_type=list(c.jordan_type),
                    first_jdt=_strings_payload(c.first_strings),
                    second_jdt=_strings_payload(c.second_strings),
                )
                for c in hits
            ]
        )

    @app.post("/verify-examples", response_model=VerifyResponse)
    def verify_endpoint() -> VerifyResponse:
        results = verify_reference_examples()
        failed = sum(1 for r in results if not r.passed)
        return VerifyResponse(
            passed=failed == 0,
            total=len(results),
            failed=failed,
            results=[VerifyAssertion(name=r.name, passed=r.passed, detail=r.detail) for r in results],
        )

    return app


app = create_app()
