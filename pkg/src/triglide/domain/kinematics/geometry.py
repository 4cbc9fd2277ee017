"""Base and platform geometry: vertex sets, world points, leg points."""

import numpy as np

from triglide.domain.kinematics.orientation import SQRT3, rotation_matrix_array
from triglide.domain.models.geometry import GeometryConfig, LegPoints, PlatformLocation
from triglide.domain.models.kinematics import JointState, Pose

_VERTICES: dict[PlatformLocation, np.ndarray] = {
    PlatformLocation.CENTER: np.array(
        [[SQRT3 / 3, 0.0, 0.0], [-SQRT3 / 6, 0.5, 0.0], [-SQRT3 / 6, -0.5, 0.0]]
    ),
    PlatformLocation.CORNER: np.array(
        [[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.5, SQRT3 / 2, 0.0]]
    ),
    PlatformLocation.CORNER_MEDIAN: np.array(
        [[0.0, 0.0, 0.0], [SQRT3 / 2, 0.5, 0.0], [SQRT3 / 2, -0.5, 0.0]]
    ),
}


def platform_vertices(
    loc: PlatformLocation = PlatformLocation.CORNER_MEDIAN,
) -> np.ndarray:
    """V1, V2, V3 of the unit platform in the moving frame, as rows of a 3x3."""
    return _VERTICES[PlatformLocation(loc)].copy()


def world_platform_points(
    pose: Pose, loc: PlatformLocation = PlatformLocation.CORNER_MEDIAN
) -> np.ndarray:
    """W_i = R V_i + P, one point per row."""
    rot = rotation_matrix_array(pose.q.as_array())
    return platform_vertices(loc) @ rot.T + pose.position()


def leg_points_from_joints(
    joints: JointState, geometry: GeometryConfig | None = None
) -> LegPoints:
    """Leg origins A_i and spherical-joint centers C_i for a joint vector.

    Legs 2 and 3 are leg 1 turned by +90 and -90 degrees about z.
    """
    offset = (geometry or GeometryConfig()).base_offset
    j = joints
    return LegPoints(
        a1=(offset, j.rho1y, j.rho1z),
        a2=(-j.rho2y, offset, j.rho2z),
        a3=(j.rho3y, -offset, j.rho3z),
        c1=(j.rho1x, j.rho1y, j.rho1z),
        c2=(-j.rho2y, j.rho2x, j.rho2z),
        c3=(j.rho3y, -j.rho3x, j.rho3z),
    )


def leg_point_array(joints: JointState) -> np.ndarray:
    """C1, C2, C3 as rows."""
    return np.array(leg_points_from_joints(joints).ends(), dtype=float)


def pairwise_distances(points: np.ndarray) -> np.ndarray:
    """(|P1-P2|, |P2-P3|, |P1-P3|)"""
    p = np.asarray(points, dtype=float)
    return np.array(
        [
            np.linalg.norm(p[0] - p[1]),
            np.linalg.norm(p[1] - p[2]),
            np.linalg.norm(p[0] - p[2]),
        ]
    )
