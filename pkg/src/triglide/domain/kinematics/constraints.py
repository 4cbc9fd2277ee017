"""Constraint equations, inverse kinematics and the reduced coordinates.

Joint arrays follow the :class:`JointState` field order
``(rho1x, rho1y, rho1z, rho2x, rho2y, rho2z, rho3x, rho3y, rho3z)``.
Reduced pose arrays are ``(x', q1, q2, q3, q4)``.
"""

import logging

import numpy as np

from triglide.domain.errors import PoseJointMismatchError
from triglide.domain.kinematics.geometry import (
    leg_point_array,
    pairwise_distances,
    world_platform_points,
)
from triglide.domain.kinematics.orientation import SQRT3, rotation_matrix_array
from triglide.domain.models.geometry import PlatformLocation
from triglide.domain.models.kinematics import (
    JointState,
    Pose,
    ReducedJoints,
    ReducedPose,
)

_logger = logging.getLogger(__name__)

JOINT_FIELDS = tuple(JointState.model_fields)

CONSISTENCY_TOL = 1e-8


def _split(q: np.ndarray):
    return q[..., 0], q[..., 1], q[..., 2], q[..., 3]


def inverse_kinematics_array(positions: np.ndarray, qs: np.ndarray) -> np.ndarray:
    """Vectorized IKP: ``(N, 3)`` positions and ``(N, 4)`` quaternions to ``(N, 9)``."""
    positions = np.atleast_2d(np.asarray(positions, dtype=float))
    qs = np.atleast_2d(np.asarray(qs, dtype=float))
    x, y, z = positions[:, 0], positions[:, 1], positions[:, 2]
    q1, q2, q3, q4 = _split(qs)
    rot = rotation_matrix_array(qs)
    u_y, v_y = rot[:, 1, 0], rot[:, 1, 1]
    s = q1**2 + q2**2
    out = np.empty((len(positions), 9))
    out[:, 0] = x
    out[:, 1] = y
    out[:, 2] = z
    out[:, 3] = SQRT3 / 2 * u_y + v_y / 2 + y
    out[:, 4] = q1 * q4 - q2 * q3 + SQRT3 / 2 - SQRT3 * s - x
    out[:, 5] = (SQRT3 * q2 + q3) * q4 - (SQRT3 * q3 - q2) * q1 + z
    out[:, 6] = -SQRT3 / 2 * u_y + v_y / 2 - y
    out[:, 7] = q1 * q4 - q2 * q3 - SQRT3 / 2 + SQRT3 * s + x
    out[:, 8] = (SQRT3 * q2 - q3) * q4 - (SQRT3 * q3 + q2) * q1 + z
    return out


def constraint_residual_array(
    positions: np.ndarray, qs: np.ndarray, joints: np.ndarray
) -> np.ndarray:
    """The six quaternion-form constraint equations, row-wise ``(N, 6)``."""
    positions = np.atleast_2d(np.asarray(positions, dtype=float))
    qs = np.atleast_2d(np.asarray(qs, dtype=float))
    j = np.atleast_2d(np.asarray(joints, dtype=float))
    x, y, z = positions[:, 0], positions[:, 1], positions[:, 2]
    q1, q2, q3, q4 = _split(qs)
    planar = (-2 * q1**2 - 2 * q2**2 + 1) * SQRT3 / 2
    tilt = SQRT3 * (q1 * q3 - q2 * q4)
    return np.stack(
        [
            j[:, 1] - y,
            j[:, 2] - z,
            planar + q1 * q4 - q2 * q3 - x - j[:, 4],
            tilt - q1 * q2 - q3 * q4 + j[:, 5] - z,
            planar - q1 * q4 + q2 * q3 - x + j[:, 7],
            tilt + q1 * q2 + q3 * q4 + j[:, 8] - z,
        ],
        axis=1,
    )


def passive_residual_array(
    positions: np.ndarray, qs: np.ndarray, joints: np.ndarray
) -> np.ndarray:
    """Deviation of the three passive joints from their closed form, ``(N, 3)``."""
    expected = inverse_kinematics_array(positions, qs)[:, [0, 3, 6]]
    j = np.atleast_2d(np.asarray(joints, dtype=float))
    return j[:, [0, 3, 6]] - expected


def joints_to_array(joints: JointState) -> np.ndarray:
    return np.array([getattr(joints, name) for name in JOINT_FIELDS])


def joints_from_array(values: np.ndarray) -> JointState:
    return JointState(**{name: float(v) for name, v in zip(JOINT_FIELDS, values)})


def inverse_kinematics(pose: Pose) -> JointState:
    """Unique joint vector (actuated and passive) reaching ``pose``."""
    row = inverse_kinematics_array(pose.position(), pose.q.as_array())[0]
    return joints_from_array(row)


def constraint_residual(pose: Pose, joints: JointState) -> np.ndarray:
    """Six-vector that vanishes iff ``joints`` actuate ``pose``."""
    return constraint_residual_array(
        pose.position(), pose.q.as_array(), joints_to_array(joints)
    )[0]


def full_constraint_residual(pose: Pose, joints: JointState) -> np.ndarray:
    """Six actuated equations followed by the three passive-joint equations."""
    args = (pose.position(), pose.q.as_array(), joints_to_array(joints))
    return np.concatenate(
        [constraint_residual_array(*args)[0], passive_residual_array(*args)[0]]
    )


def passive_joints(pose: Pose) -> tuple[float, float, float]:
    """(rho1x, rho2x, rho3x) for ``pose``."""
    j = inverse_kinematics(pose)
    return (j.rho1x, j.rho2x, j.rho3x)


def reduce_joints(joints: JointState) -> ReducedJoints:
    """Change of variables to (mu2z, mu3z, mu3y).

    The translation that zeroes rho1y, rho1z and rho2y is
    (rho2y, -rho1y, -rho1z); it moves rho3y by +rho2y.
    """
    return ReducedJoints(
        mu2z=joints.rho2z - joints.rho1z,
        mu3z=joints.rho3z - joints.rho1z,
        mu3y=joints.rho3y + joints.rho2y,
    )


def reduce_joints_array(joints: np.ndarray) -> np.ndarray:
    """``(N, 9)`` joints to ``(N, 3)`` rows of (mu2z, mu3z, mu3y)."""
    j = np.atleast_2d(np.asarray(joints, dtype=float))
    return np.stack([j[:, 5] - j[:, 2], j[:, 8] - j[:, 2], j[:, 7] + j[:, 4]], axis=1)


def reduced_passive(joints: JointState) -> tuple[float, float, float]:
    """(mu1x, mu2x, mu3x): passive joints after the same translation."""
    return (
        joints.rho1x + joints.rho2y,
        joints.rho2x - joints.rho1y,
        joints.rho3x + joints.rho1y,
    )


def reduce_pose(
    pose: Pose, joints: JointState, tol: float = CONSISTENCY_TOL
) -> ReducedPose:
    """Translated pose (x', q) for a consistent (pose, joints) pair.

    Raises:
        PoseJointMismatchError: the constraint residual exceeds ``tol``.
    """
    residual = float(np.linalg.norm(constraint_residual(pose, joints)))
    if residual > tol:
        _logger.debug("reduce_pose rejected residual %.3e", residual)
        raise PoseJointMismatchError(residual, tol)
    return ReducedPose(x=pose.x + joints.rho2y, q=pose.q)


def lift_reduced_pose(reduced: ReducedPose, joints: JointState) -> Pose:
    """Undo the translation: x = x' - rho2y, y = rho1y, z = rho1z."""
    return Pose(
        x=reduced.x - joints.rho2y, y=joints.rho1y, z=joints.rho1z, q=reduced.q
    )


def distance_residual(joints: JointState) -> np.ndarray:
    """(|C1-C2|-1, |C2-C3|-1, |C1-C3|-1) for the leg points of ``joints``."""
    return pairwise_distances(leg_point_array(joints)) - 1.0


def world_leg_joints(pose: Pose, loc: PlatformLocation) -> JointState:
    """Joint values that put C_i on W_i for a frame attached at ``loc``.

    For the corner-median location this coincides with
    :func:`inverse_kinematics`.
    """
    w = world_platform_points(pose, loc)
    return JointState(
        rho1x=w[0, 0],
        rho1y=w[0, 1],
        rho1z=w[0, 2],
        rho2x=w[1, 1],
        rho2y=-w[1, 0],
        rho2z=w[1, 2],
        rho3x=-w[2, 1],
        rho3y=w[2, 0],
        rho3z=w[2, 2],
    )


def reduced_residual(points: np.ndarray, mu: np.ndarray) -> np.ndarray:
    """The five reduced equations at ``(N, 5)`` points (x', q1..q4)."""
    p = np.atleast_2d(np.asarray(points, dtype=float))
    mu2z, mu3z, mu3y = np.asarray(mu, dtype=float)
    x = p[:, 0]
    q1, q2, q3, q4 = p[:, 1], p[:, 2], p[:, 3], p[:, 4]
    planar = SQRT3 / 2 - SQRT3 * (q1**2 + q2**2)
    return np.stack(
        [
            planar + q1 * q4 - q2 * q3 - x,
            (SQRT3 * q1 - q4) * q3 - SQRT3 * q2 * q4 - q1 * q2 + mu2z,
            mu3y + planar - q1 * q4 + q2 * q3 - x,
            (SQRT3 * q1 + q4) * q3 - SQRT3 * q2 * q4 + q1 * q2 + mu3z,
            q1**2 + q2**2 + q3**2 + q4**2 - 1.0,
        ],
        axis=1,
    )


def reduced_jacobian(points: np.ndarray) -> np.ndarray:
    """d(reduced equations)/d(x', q1..q4), shape ``(N, 5, 5)``."""
    p = np.atleast_2d(np.asarray(points, dtype=float))
    q1, q2, q3, q4 = p[:, 1], p[:, 2], p[:, 3], p[:, 4]
    one = np.ones_like(q1)
    zero = np.zeros_like(q1)
    rows = [
        [-one, -2 * SQRT3 * q1 + q4, -2 * SQRT3 * q2 - q3, -q2, q1],
        [zero, SQRT3 * q3 - q2, -SQRT3 * q4 - q1, SQRT3 * q1 - q4, -q3 - SQRT3 * q2],
        [-one, -2 * SQRT3 * q1 - q4, -2 * SQRT3 * q2 + q3, q2, -q1],
        [zero, SQRT3 * q3 + q2, -SQRT3 * q4 + q1, SQRT3 * q1 + q4, q3 - SQRT3 * q2],
        [zero, 2 * q1, 2 * q2, 2 * q3, 2 * q4],
    ]
    return np.stack([np.stack(r, axis=-1) for r in rows], axis=1)


def coupling_residual(points: np.ndarray) -> np.ndarray:
    """The two coupling equations, ``(N, 2)``."""
    p = np.atleast_2d(np.asarray(points, dtype=float))
    x = p[:, 0]
    q1, q2, q3, q4 = p[:, 1], p[:, 2], p[:, 3], p[:, 4]
    return np.stack(
        [
            SQRT3 * q1**2 + SQRT3 * q2**2 - q1 * q4 + q2 * q3 + x - SQRT3 / 2,
            q1**2 + q2**2 + q3**2 + q4**2 - 1.0,
        ],
        axis=1,
    )
