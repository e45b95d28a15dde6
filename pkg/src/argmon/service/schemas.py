"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field

from ..core import ArgumentationGraph, build_graph
from ..degrees import DegreeConvention
from ..semantics import SemanticsId
from ..verify import VerificationReport


class AttackModel(BaseModel):
    source: str
    target: str


class GraphModel(BaseModel):
    arguments: list[str] = Field(default_factory=list)
    attacks: list[AttackModel] = Field(default_factory=list)

    def to_graph(self) -> ArgumentationGraph:
        return build_graph(
            self.arguments, [(a.source, a.target) for a in self.attacks]
        )

    @classmethod
    def from_graph(cls, graph: ArgumentationGraph) -> "GraphModel":
        return cls(
            arguments=list(graph.arguments),
            attacks=[
                AttackModel(source=s, target=t) for s, t in sorted(graph.attacks)
            ],
        )


class SolveRequest(BaseModel):
    graph: GraphModel
    semantics: SemanticsId


class SolveResponse(BaseModel):
    semantics: SemanticsId
    extensions: list[list[str]]


class DegreesRequest(BaseModel):
    graph: GraphModel
    semantics: SemanticsId
    convention: DegreeConvention = DegreeConvention.STANDARD


class DegreesResponse(BaseModel):
    semantics: SemanticsId
    convention: DegreeConvention
    degrees: dict[str, float]


class RemoveRequest(BaseModel):
    graph: GraphModel
    attacks: list[AttackModel]


class RemoveResponse(BaseModel):
    graph: GraphModel
    tgf: str


class VerifyRequest(BaseModel):
    """Sweep parameters, bounded so one request cannot pin the server."""

    max_n: int = Field(default=2, ge=1, le=4)
    random_n: int | None = Field(default=None, ge=1, le=8)
    samples: int | None = Field(default=None, ge=1, le=20000)
    seed: int = Field(default=0, ge=0, lt=1 << 64)
    semantics: list[SemanticsId] = Field(
        default_factory=lambda: list(SemanticsId)
    )
    conventions: list[DegreeConvention] = Field(
        default_factory=lambda: list(DegreeConvention)
    )


class ViolationModel(BaseModel):
    kind: str
    semantics: str | None
    convention: str | None
    argument: str | None
    removed: list[list[str]]
    graph_tgf: str
    detail: str


class VerifyResponse(BaseModel):
    graphs_checked: int
    checks_performed: int
    violations: list[ViolationModel]
    elapsed_ms: int

    @classmethod
    def from_report(cls, report: VerificationReport) -> "VerifyResponse":
        return cls(**report.to_json())


class HealthResponse(BaseModel):
    status: str
    version: str