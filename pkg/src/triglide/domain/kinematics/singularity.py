"""Parallel singularities, aspects and the two Jacobians."""

import logging
import math

import numpy as np

from triglide.domain.kinematics.constraints import (
    full_constraint_residual,
    inverse_kinematics,
    joints_from_array,
    joints_to_array,
    reduced_jacobian,
)
from triglide.domain.models.kinematics import JointState, Pose
from triglide.domain.models.orientation import Quaternion
from triglide.domain.models.singularity import AspectLabel, AspectReport

_logger = logging.getLogger(__name__)

SINGULAR_BAND = 1e-10
NEAR_SINGULAR_BAND = 1e-3
HALF_SQRT2 = math.sqrt(2.0) / 2
QUARTER_TURNS = (0.0, 0.25, 0.5, 0.75)


def singularity_factors(q: Quaternion) -> tuple[float, float]:
    """(q2^2 + q3^2 - 1/2, q2^2 + q4^2 - 1/2)"""
    return q.q2**2 + q.q3**2 - 0.5, q.q2**2 + q.q4**2 - 0.5


def singularity_factors_array(qs: np.ndarray) -> np.ndarray:
    """Row-wise factors for ``(N, 4)`` quaternions, shape ``(N, 2)``."""
    qs = np.atleast_2d(np.asarray(qs, dtype=float))
    q2sq = qs[:, 1] ** 2
    return np.stack([q2sq + qs[:, 2] ** 2 - 0.5, q2sq + qs[:, 3] ** 2 - 0.5], axis=1)


def determinant_factors(q: Quaternion) -> tuple[float, float]:
    """The two factors with q1 kept:
    (q1^2 - q2^2 - q3^2 + q4^2, q1^2 - q2^2 + q3^2 - q4^2).

    On the unit sphere they equal -2 f1 and -2 f2.
    """
    a, b, c, d = q.q1**2, q.q2**2, q.q3**2, q.q4**2
    return a - b - c + d, a - b + c - d


def label_from_factors(f1: float, f2: float, band: float = SINGULAR_BAND) -> AspectLabel:
    if abs(f1) <= band or abs(f2) <= band:
        return AspectLabel.SINGULAR
    if f1 > 0:
        return AspectLabel.PP if f2 > 0 else AspectLabel.PN
    return AspectLabel.NP if f2 > 0 else AspectLabel.NN


def classify_aspect(q: Quaternion, band: float = SINGULAR_BAND) -> AspectLabel:
    """Aspect of an orientation from the signs of the two factors."""
    return label_from_factors(*singularity_factors(q), band=band)


def parallel_jacobian(pose: Pose) -> np.ndarray:
    """7x7 Jacobian of the six constraint equations plus the unit norm.

    Columns are (x, y, z, q1, q2, q3, q4); the actuated joints are held
    fixed, so no entry depends on them or on the position.
    """
    q = pose.q.as_array()
    red = reduced_jacobian(np.concatenate([[0.0], q]))[0]
    jac = np.zeros((7, 7))
    jac[0, 1] = -1.0
    jac[1, 2] = -1.0
    # constraint rows 3..6 share the reduced rows; z enters rows 4 and 6
    jac[2, [0, 3, 4, 5, 6]] = red[0]
    jac[3, [0, 3, 4, 5, 6]] = red[1]
    jac[3, 2] = -1.0
    jac[4, [0, 3, 4, 5, 6]] = red[2]
    jac[5, [0, 3, 4, 5, 6]] = red[3]
    jac[5, 2] = -1.0
    jac[6, 3:] = red[4, 1:]
    return jac


def numeric_parallel_jacobian_det(pose: Pose) -> float:
    """det of :func:`parallel_jacobian`; zero exactly on the singular cylinders."""
    return float(np.linalg.det(parallel_jacobian(pose)))


def parallel_jacobian_det_array(qs: np.ndarray) -> np.ndarray:
    """Batched determinant over ``(N, 4)`` orientations.

    Rows 1 and 2 of the 7x7 matrix are unit rows in y and z, so the
    determinant equals, up to sign, that of the reduced 5x5 block.
    """
    qs = np.atleast_2d(np.asarray(qs, dtype=float))
    pts = np.column_stack([np.zeros(len(qs)), qs])
    return np.linalg.det(reduced_jacobian(pts))


def serial_jacobian(pose: Pose, joints: JointState | None = None) -> np.ndarray:
    """9x9 derivative of the full constraint residual w.r.t. the nine joints.

    Central differences on the residual, which is affine in the joints.
    """
    base = joints_to_array(joints or inverse_kinematics(pose))
    step = 1e-6
    cols = []
    for k in range(9):
        dj = np.zeros(9)
        dj[k] = step
        plus = full_constraint_residual(pose, joints_from_array(base + dj))
        minus = full_constraint_residual(pose, joints_from_array(base - dj))
        cols.append((plus - minus) / (2 * step))
    return np.column_stack(cols)


def serial_jacobian_rank(pose: Pose, joints: JointState | None = None) -> int:
    return int(np.linalg.matrix_rank(serial_jacobian(pose, joints)))


def aspect_report(
    pose: Pose,
    band: float = SINGULAR_BAND,
    near_band: float = NEAR_SINGULAR_BAND,
) -> AspectReport:
    f1, f2 = singularity_factors(pose.q)
    near = min(abs(f1), abs(f2)) <= near_band
    if near:
        _logger.warning(
            "orientation %s is within %.1e of a singular cylinder",
            pose.q.as_tuple(),
            near_band,
        )
    return AspectReport(
        label=label_from_factors(f1, f2, band),
        f1=f1,
        f2=f2,
        det=numeric_parallel_jacobian_det(pose),
        near_singular=near,
    )


def _snap(values: np.ndarray) -> np.ndarray:
    return np.where(np.abs(values) < 1e-15, 0.0, values)


def singular_surface_sample(factor: int, resolution: int) -> np.ndarray:
    """Points of one singular cylinder inside the unit ball, as ``(N, 3)``.

    Factor 1 is q2^2 + q3^2 = 1/2 with q4 free, factor 2 is q2^2 + q4^2 = 1/2
    with q3 free. The free coordinate spans [-sqrt2/2, sqrt2/2], which is
    exactly the part of the cylinder inside the ball. The angles are
    ``resolution`` even steps plus the quarter turns they miss, so the lines
    where one of the two angle coordinates vanishes are always sampled. Rows are (q2, q3, q4) in
    row-major (angle, height) order.
    """
    if factor not in (1, 2):
        raise ValueError("factor must be 1 or 2")
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    turns = np.union1d(np.arange(resolution) / resolution, QUARTER_TURNS)
    height = np.linspace(-HALF_SQRT2, HALF_SQRT2, resolution)
    th, t = np.meshgrid(2 * np.pi * turns, height, indexing="ij")
    a = HALF_SQRT2 * _snap(np.cos(th).ravel())
    b = HALF_SQRT2 * _snap(np.sin(th).ravel())
    t = t.ravel()
    if factor == 1:
        return np.column_stack([a, b, t])
    return np.column_stack([a, t, b])
