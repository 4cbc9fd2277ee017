"""Kinematics Routes"""

import logging
from typing import Annotated

import numpy as np
from fastapi import APIRouter, Depends, HTTPException, status

from triglide.api.dependencies.services_dep import (
    get_kinematics_service,
    get_singularity_service,
)
from triglide.application.services import KinematicsService, SingularityService
from triglide.domain.models import JointState, Pose
from triglide.shared.schemas import (
    AspectRequest,
    AspectResponse,
    DkpRequest,
    DkpResponse,
    ResidualResponse,
)

router = APIRouter(tags=["Kinematics"])

_logger = logging.getLogger(__name__)


@router.post("/ik", response_model=JointState)
async def inverse_kinematics(
    pose: Pose,
    service: Annotated[KinematicsService, Depends(get_kinematics_service)],
):
    """Unique joint vector of a pose"""

    return service.inverse_kinematics(pose)


@router.post("/residual", response_model=ResidualResponse)
async def constraint_residual(
    pose: Pose,
    joints: JointState,
    service: Annotated[KinematicsService, Depends(get_kinematics_service)],
):
    """Constraint residual of a (pose, joints) pair"""

    residual = service.residual(pose, joints)
    return ResidualResponse(
        residual=residual.tolist(), norm=float(np.linalg.norm(residual))
    )


@router.post("/dkp", response_model=DkpResponse)
async def direct_kinematics(
    request: DkpRequest,
    service: Annotated[KinematicsService, Depends(get_kinematics_service)],
):
    """Assembly modes of a joint image or of a full joint vector"""

    try:
        if request.joints is not None:
            result, poses = service.direct_kinematics_from_joints(request.joints)
        else:
            result, poses = service.direct_kinematics(request.mu), None
    except ValueError as e:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail=f"Direct kinematics failed: {str(e)}",
        ) from e

    return DkpResponse(
        mu=result.mu,
        solutions=list(result.solutions),
        root_count=result.root_count,
        degenerate=result.degenerate,
        poses=poses,
    )


@router.post("/aspect", response_model=AspectResponse)
async def aspect(
    request: AspectRequest,
    service: Annotated[SingularityService, Depends(get_singularity_service)],
):
    """Aspect label, determinant factors and parallel-Jacobian determinant"""

    report = service.aspect(request.as_pose())
    return AspectResponse(**report.model_dump())
