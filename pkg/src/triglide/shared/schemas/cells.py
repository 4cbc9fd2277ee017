"""Cell-model and oracle request schemas."""

from pydantic import BaseModel, ConfigDict, Field

from triglide.domain.models import CadCell, CellSpace, ReducedJoints


class ClassifyRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    space: CellSpace = CellSpace.JOINT
    point: tuple[float, ...] = Field(..., min_length=1)


class CellListResponse(BaseModel):
    space: CellSpace
    coordinates: tuple[str, ...]
    cells: list[CadCell]


class OracleRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    mu: ReducedJoints
    starts: int = Field(2000, ge=1, le=100_000)
    seed: int = 0


class HealthResponse(BaseModel):
    status: str = "ok"
    version: str
