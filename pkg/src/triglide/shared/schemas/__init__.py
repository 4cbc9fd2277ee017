"""Schemas Package Initialization"""

from .kinematics import (
    AspectRequest,
    AspectResponse,
    DkpRequest,
    DkpResponse,
    ResidualResponse,
)
from .cells import CellListResponse, ClassifyRequest, HealthResponse, OracleRequest

__all__ = [
    "AspectRequest",
    "AspectResponse",
    "DkpRequest",
    "DkpResponse",
    "ResidualResponse",
    "CellListResponse",
    "ClassifyRequest",
    "HealthResponse",
    "OracleRequest",
]
