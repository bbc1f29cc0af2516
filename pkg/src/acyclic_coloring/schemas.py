"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class ColoringPayload(BaseModel):
    """Wire form of a coloring: color 0 means uncolored."""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=1, alias="schema")
    palette: int
    edges: list[list[int]]  # [u, v, color]


class ColorRequest(BaseModel):
    edge_list: str
    algorithm: Literal["auto", "kdeg", "deg3"] = "auto"
    k: Optional[int] = None
    verify: bool = True


class ColorSummary(BaseModel):
    n: int
    m: int
    max_degree: int
    degeneracy: int
    algorithm: str
    k: Optional[int]
    palette: int
    colors_used: int
    verified: Optional[bool]  # None when verification was skipped


class ColorResponse(BaseModel):
    coloring: ColoringPayload
    summary: ColorSummary


class VerifyRequest(BaseModel):
    coloring: ColoringPayload
    bound: Optional[int] = None  # defaults to the payload's palette


class VerifyResponse(BaseModel):
    ok: bool
    total: bool
    proper: bool
    acyclic: bool
    colors_used: int
    bound: Optional[int]
    bound_ok: Optional[bool]
    improper_vertex: Optional[int] = None
    cycle_vertices: Optional[list[int]] = None
    cycle_edges: Optional[list[int]] = None
    cycle_colors: Optional[list[int]] = None


class OracleRequest(BaseModel):
    edge_list: str
    max_colors: Optional[int] = None  # defaults to max_degree + 5


class OracleResponse(BaseModel):
    exact_index: int
    nodes_explored: int
    witness: ColoringPayload


class GenerateRequest(BaseModel):
    family: str = "random-kdeg"
    n: int
    k: int = 1
    seed: int = 0


class GenerateResponse(BaseModel):
    n: int
    m: int
    edge_list: str


class BenchRequest(BaseModel):
    seed: int = 0
    max_n: int = 24
    oracle_max_n: int = 7


class BenchRow(BaseModel):
    family: str
    n: int
    k: Optional[int]
    max_degree: int
    degeneracy: int
    algorithm: str
    palette: int
    colors_used: int
    oracle_exact: Optional[int]
    verified: bool
    wall_time_s: float


class BenchResponse(BaseModel):
    rows: list[BenchRow]


class HealthResponse(BaseModel):
    status: str
    version: str
