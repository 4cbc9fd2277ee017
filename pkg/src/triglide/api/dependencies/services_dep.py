"""Service dependencies for FastAPI routes"""

from functools import lru_cache
from typing import Annotated

from fastapi import Depends

from triglide.application.services import (
    CellService,
    KinematicsService,
    OracleService,
    SingularityService,
)
from triglide.domain.models import GeometryConfig
from triglide.infrastructure.adapters.solvers import MultistartNewtonSolver
from triglide.infrastructure.config.config import Settings, get_settings
from triglide.infrastructure.config.geometry_loader import load_geometry


@lru_cache
def get_geometry() -> GeometryConfig:
    """Get the geometry configured by ``TRIGLIDE_GEOMETRY_FILE``"""
    return load_geometry(get_settings().geometry_file)


def get_kinematics_service(
    settings: Annotated[Settings, Depends(get_settings)],
    geometry: Annotated[GeometryConfig, Depends(get_geometry)],
) -> KinematicsService:
    """Get Kinematics Service instance"""
    return KinematicsService(settings, geometry)


def get_singularity_service(
    settings: Annotated[Settings, Depends(get_settings)],
) -> SingularityService:
    """Get Singularity Service instance"""
    return SingularityService(settings)


def get_cell_service(
    settings: Annotated[Settings, Depends(get_settings)],
) -> CellService:
    """Get Cell Service instance"""
    return CellService(settings)


def get_solver(
    settings: Annotated[Settings, Depends(get_settings)],
) -> MultistartNewtonSolver:
    """Get the numerical constraint solver"""
    return MultistartNewtonSolver(settings)


def get_oracle_service(
    solver: Annotated[MultistartNewtonSolver, Depends(get_solver)],
    settings: Annotated[Settings, Depends(get_settings)],
) -> OracleService:
    """Get Oracle Service instance"""
    return OracleService(solver, settings)
