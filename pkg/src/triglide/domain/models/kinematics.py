"""Pose and joint value types."""

from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from triglide.domain.models.orientation import Quaternion


def _canonical(q: Quaternion) -> Quaternion:
    # imported here: the orientation algebra depends on this package
    from triglide.domain.kinematics.orientation import canonicalize

    return canonicalize(q)


class Pose(BaseModel):
    """Platform pose: reference point P = (x, y, z) and orientation ``q``.

    ``q`` is normalized and sign-canonicalized on construction.
    """

    model_config = ConfigDict(frozen=True)

    x: float
    y: float
    z: float
    q: Quaternion

    @field_validator("q")
    @classmethod
    def canonical_orientation(cls, q: Quaternion) -> Quaternion:
        return _canonical(q)

    @classmethod
    def at(
        cls, q: Quaternion, x: float = 0.0, y: float = 0.0, z: float = 0.0
    ) -> "Pose":
        return cls(x=x, y=y, z=z, q=q)

    def position(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    def translated(self, dx: float, dy: float, dz: float) -> "Pose":
        return Pose(x=self.x + dx, y=self.y + dy, z=self.z + dz, q=self.q)


class JointState(BaseModel):
    """Six actuated and three passive prismatic joint values, in edge units."""

    model_config = ConfigDict(frozen=True)

    rho1x: float = 0.0
    rho1y: float = 0.0
    rho1z: float = 0.0
    rho2x: float = 0.0
    rho2y: float = 0.0
    rho2z: float = 0.0
    rho3x: float = 0.0
    rho3y: float = 0.0
    rho3z: float = 0.0

    def actuated(self) -> np.ndarray:
        """(rho1y, rho1z, rho2y, rho2z, rho3y, rho3z)"""
        return np.array(
            [self.rho1y, self.rho1z, self.rho2y, self.rho2z, self.rho3y, self.rho3z]
        )

    def passive(self) -> np.ndarray:
        return np.array([self.rho1x, self.rho2x, self.rho3x])


class ReducedJoints(BaseModel):
    """Joint image after the change of variables: (mu2z, mu3z, mu3y)."""

    model_config = ConfigDict(frozen=True)

    mu2z: float
    mu3z: float
    mu3y: float

    @model_validator(mode="before")
    @classmethod
    def from_sequence(cls, data: Any) -> Any:
        if isinstance(data, np.ndarray):
            data = data.tolist()
        if isinstance(data, (list, tuple)):
            if len(data) != 3:
                raise ValueError("reduced joints are (mu2z, mu3z, mu3y)")
            return dict(zip(("mu2z", "mu3z", "mu3y"), data))
        return data

    @classmethod
    def of(cls, mu2z: float, mu3z: float, mu3y: float) -> "ReducedJoints":
        return cls(mu2z=mu2z, mu3z=mu3z, mu3y=mu3y)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.mu2z, self.mu3z, self.mu3y)


class ReducedPose(BaseModel):
    """Translated pose (x', 0, 0) with the unchanged orientation ``q``.

    ``x`` holds the translated coordinate x'.
    """

    model_config = ConfigDict(frozen=True)

    x: float
    q: Quaternion

    @field_validator("q")
    @classmethod
    def canonical_orientation(cls, q: Quaternion) -> Quaternion:
        return _canonical(q)

    def as_array(self) -> np.ndarray:
        """(x', q1, q2, q3, q4)"""
        return np.array([self.x, *self.q.as_tuple()])
