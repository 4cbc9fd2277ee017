"""Application services."""

from .kinematics_service import KinematicsService
from .singularity_service import SingularityService
from .cell_service import CellService
from .oracle_service import OracleService

__all__ = ["KinematicsService", "SingularityService", "CellService", "OracleService"]
