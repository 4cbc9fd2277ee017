"""Kinematics Service"""

import logging
from typing import Optional

import numpy as np

from triglide.domain.kinematics.constraints import (
    constraint_residual,
    inverse_kinematics,
    joints_from_array,
    joints_to_array,
    lift_reduced_pose,
    reduce_joints,
    reduce_pose,
)
from triglide.domain.kinematics.dkp import direct_kinematics
from triglide.domain.kinematics.geometry import leg_points_from_joints
from triglide.domain.models import (
    DkpSolutionSet,
    GeometryConfig,
    JointState,
    LegPoints,
    Pose,
    ReducedJoints,
    ReducedPose,
)
from triglide.infrastructure.config.config import Settings, get_settings

_logger = logging.getLogger(__name__)


class KinematicsService:
    """Inverse and direct kinematics in physical units.

    Inputs are divided by the platform edge before reaching the domain
    functions and outputs multiplied by it on the way back.
    """

    def __init__(
        self,
        settings: Optional[Settings] = None,
        geometry: Optional[GeometryConfig] = None,
    ):
        self.settings = settings or get_settings()
        self.geometry = geometry or GeometryConfig()
        self.edge = self.geometry.platform_edge

    def _scaled(self, pose: Pose, factor: float) -> Pose:
        if factor == 1.0:
            return pose
        return Pose(x=pose.x * factor, y=pose.y * factor, z=pose.z * factor, q=pose.q)

    def _pose_in(self, pose: Pose) -> Pose:
        return self._scaled(pose, 1.0 / self.edge)

    def _pose_out(self, pose: Pose) -> Pose:
        return self._scaled(pose, self.edge)

    def _joints_in(self, joints: JointState) -> JointState:
        return joints_from_array(joints_to_array(joints) / self.edge)

    def _joints_out(self, joints: JointState) -> JointState:
        return joints_from_array(joints_to_array(joints) * self.edge)

    def _mu_in(self, mu: ReducedJoints) -> ReducedJoints:
        return ReducedJoints.model_validate([v / self.edge for v in mu.as_tuple()])

    def _mu_out(self, mu: ReducedJoints) -> ReducedJoints:
        return ReducedJoints.model_validate([v * self.edge for v in mu.as_tuple()])

    def inverse_kinematics(self, pose: Pose) -> JointState:
        """Unique joint vector of ``pose``."""
        return self._joints_out(inverse_kinematics(self._pose_in(pose)))

    def residual(self, pose: Pose, joints: JointState) -> np.ndarray:
        """The six constraint equations, in edge units."""
        return constraint_residual(self._pose_in(pose), self._joints_in(joints))

    def reduce_joints(self, joints: JointState) -> ReducedJoints:
        return self._mu_out(reduce_joints(self._joints_in(joints)))

    def reduce_pose(self, pose: Pose, joints: JointState) -> ReducedPose:
        reduced = reduce_pose(
            self._pose_in(pose),
            self._joints_in(joints),
            tol=self.settings.consistency_tol,
        )
        return reduced.model_copy(update={"x": reduced.x * self.edge})

    def leg_points(self, joints: JointState) -> LegPoints:
        return leg_points_from_joints(joints, self.geometry)

    def direct_kinematics(self, mu: ReducedJoints) -> DkpSolutionSet:
        """Canonical assembly modes of ``mu``."""
        result = direct_kinematics(
            self._mu_in(mu),
            coupling_tol=self.settings.coupling_tol,
            residual_tol=self.settings.dkp_residual_tol,
            dedup_tol=self.settings.dedup_tol,
            singular_band=self.settings.singular_band,
            boundary_band=self.settings.boundary_band,
            merge_tol=self.settings.root_merge_tol,
            unit_norm_tol=self.settings.unit_norm_tol,
        )
        if result.degenerate:
            _logger.warning(
                "mu=%s lies on the joint-space boundary; %d solutions",
                mu.as_tuple(),
                len(result),
            )
        if self.edge == 1.0:
            return result
        solutions = tuple(
            s.model_copy(
                update={"pose": s.pose.model_copy(update={"x": s.pose.x * self.edge})}
            )
            for s in result.solutions
        )
        return result.model_copy(update={"mu": mu, "solutions": solutions})

    def direct_kinematics_from_joints(
        self, joints: JointState
    ) -> tuple[DkpSolutionSet, list[Pose]]:
        """Assembly modes of a full joint vector, with the lifted poses."""
        local = self._joints_in(joints)
        result = self.direct_kinematics(self.reduce_joints(joints))
        poses = []
        for s in result.solutions:
            reduced = s.pose.model_copy(update={"x": s.pose.x / self.edge})
            poses.append(self._pose_out(lift_reduced_pose(reduced, local)))
        return result, poses
