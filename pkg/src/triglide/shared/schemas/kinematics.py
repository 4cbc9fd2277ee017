"""Request and response schemas of the kinematics endpoints and commands."""

from typing import Optional

from pydantic import BaseModel, ConfigDict, model_validator

from triglide.domain.models import (
    AspectLabel,
    DkpSolution,
    JointState,
    Pose,
    Quaternion,
    ReducedJoints,
)


class DkpRequest(BaseModel):
    """Either a reduced joint image or a full joint vector."""

    model_config = ConfigDict(extra="forbid")

    mu: Optional[ReducedJoints] = None
    joints: Optional[JointState] = None

    @model_validator(mode="after")
    def exactly_one(self) -> "DkpRequest":
        if (self.mu is None) == (self.joints is None):
            raise ValueError("give exactly one of 'mu' and 'joints'")
        return self


class DkpResponse(BaseModel):
    mu: ReducedJoints
    solutions: list[DkpSolution]
    root_count: int
    degenerate: bool
    poses: Optional[list[Pose]] = None


class AspectRequest(BaseModel):
    """An orientation, optionally with the position of a full pose."""

    model_config = ConfigDict(extra="forbid")

    q: Optional[Quaternion] = None
    pose: Optional[Pose] = None

    @model_validator(mode="after")
    def exactly_one(self) -> "AspectRequest":
        if (self.q is None) == (self.pose is None):
            raise ValueError("give exactly one of 'q' and 'pose'")
        return self

    def as_pose(self) -> Pose:
        return self.pose if self.pose is not None else Pose.at(self.q)


class AspectResponse(BaseModel):
    label: AspectLabel
    f1: float
    f2: float
    det: float
    near_singular: bool = False


class ResidualResponse(BaseModel):
    residual: list[float]
    norm: float
