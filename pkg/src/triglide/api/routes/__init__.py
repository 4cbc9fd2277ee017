"""Routes package"""

from .kinematics_route import router as kinematics_router
from .cells_route import router as cells_router
from .oracle_route import router as oracle_router

__all__ = ["kinematics_router", "cells_router", "oracle_router"]
