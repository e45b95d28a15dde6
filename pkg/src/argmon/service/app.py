"""HTTP service exposing the solver over JSON.

Graphs arrive as structured JSON rather than tgf/apx text, with request
and response shapes validated by the models in ``schemas``.  Domain errors
(unknown arguments, bad tokens) map to 422 responses.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..core import GraphError
from ..degrees import degree_table
from ..semantics import extensions
from ..verify import SweepConfig, sweep
from .schemas import (
    DegreesRequest,
    DegreesResponse,
    GraphModel,
    HealthResponse,
    RemoveRequest,
    RemoveResponse,
    SolveRequest,
    SolveResponse,
    VerifyRequest,
    VerifyResponse,
)
from ..io import GraphFormat, serialize_graph


def create_app() -> FastAPI:
    app = FastAPI(
        title="argmon",
        version=__version__,
        description=(
            "Extensions, labellings, and acceptability degrees for abstract "
            "argumentation graphs, plus the monotonicity verification sweep."
        ),
    )

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/solve", response_model=SolveResponse)
    def solve(request: SolveRequest) -> SolveResponse:
        graph = _graph_or_422(request.graph)
        found = extensions(graph, request.semantics)
        return SolveResponse(
            semantics=request.semantics,
            extensions=[sorted(ext) for ext in found],
        )

    @app.post("/degrees", response_model=DegreesResponse)
    def degrees(request: DegreesRequest) -> DegreesResponse:
        graph = _graph_or_422(request.graph)
        table = degree_table(graph, request.semantics, request.convention)
        return DegreesResponse(
            semantics=request.semantics,
            convention=request.convention,
            degrees={name: float(deg.json_value) for name, deg in table.items()},
        )

    @app.post("/remove", response_model=RemoveResponse)
    def remove(request: RemoveRequest) -> RemoveResponse:
        graph = _graph_or_422(request.graph)
        try:
            reduced = graph.remove_attacks(
                [(a.source, a.target) for a in request.attacks]
            )
        except GraphError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from None
        return RemoveResponse(
            graph=GraphModel.from_graph(reduced),
            tgf=serialize_graph(reduced, GraphFormat.TGF),
        )

    @app.post("/verify", response_model=VerifyResponse)
    def verify(request: VerifyRequest) -> VerifyResponse:
        try:
            config = SweepConfig(
                max_n=request.max_n,
                random_n=request.random_n,
                samples=request.samples,
                seed=request.seed,
                semantics=tuple(request.semantics),
                conventions=tuple(request.conventions),
            )
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from None
        return VerifyResponse.from_report(sweep(config))

    return app


def _graph_or_422(model: GraphModel):
    try:
        return model.to_graph()
    except GraphError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from None


app = create_app()