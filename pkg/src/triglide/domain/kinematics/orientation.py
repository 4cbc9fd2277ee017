"""Unit-quaternion orientation algebra."""

import math

import numpy as np

from triglide.domain.errors import DegenerateOrientationError
from triglide.domain.models.orientation import Quaternion, RotationMatrix

SQRT3 = math.sqrt(3.0)

UNIT_NORM_TOL = 1e-12


def canonical_array(q: np.ndarray, tol: float = UNIT_NORM_TOL) -> np.ndarray:
    """Normalize and sign-fix a single quaternion given as a 4-array.

    The first component with magnitude above ``tol`` is made positive, so
    ``q`` and ``-q`` give the same result. Normalization is skipped when the
    norm is already within ``tol`` of one, which keeps the map idempotent.
    """
    q = np.asarray(q, dtype=float)
    norm = float(np.linalg.norm(q))
    if not math.isfinite(norm) or norm <= tol:
        raise DegenerateOrientationError()
    if abs(norm - 1.0) > tol:
        q = q / norm
    lead = np.flatnonzero(np.abs(q) > tol)
    if lead.size and q[lead[0]] < 0.0:
        q = -q
    # -0.0 -> 0.0
    return q + 0.0


def canonical_batch(qs: np.ndarray, tol: float = UNIT_NORM_TOL) -> np.ndarray:
    """Row-wise :func:`canonical_array` over an ``(N, 4)`` array."""
    qs = np.asarray(qs, dtype=float)
    norms = np.linalg.norm(qs, axis=1)
    if np.any(norms <= tol):
        raise DegenerateOrientationError()
    scale = np.where(np.abs(norms - 1.0) > tol, norms, 1.0)
    qs = qs / scale[:, None]
    big = np.abs(qs) > tol
    first = np.argmax(big, axis=1)
    lead = qs[np.arange(len(qs)), first]
    flip = np.where(lead < 0.0, -1.0, 1.0)
    return qs * flip[:, None] + 0.0


def canonicalize(q: Quaternion, tol: float = UNIT_NORM_TOL) -> Quaternion:
    """Normalized, sign-canonical form of ``q`` (q1 >= 0).

    Raises:
        DegenerateOrientationError: ``q`` is the zero quaternion.
    """
    return Quaternion.model_validate(canonical_array(q.as_array(), tol))


def rotation_matrix_array(q: np.ndarray) -> np.ndarray:
    """Direction-cosine matrices for quaternions stacked on the last axis.

    ``q[..., 0]`` is the scalar part; the result has shape ``q.shape[:-1] +
    (3, 3)``.
    """
    q = np.asarray(q, dtype=float)
    q1, q2, q3, q4 = q[..., 0], q[..., 1], q[..., 2], q[..., 3]
    r = np.empty(q.shape[:-1] + (3, 3))
    r[..., 0, 0] = 2 * q1**2 + 2 * q2**2 - 1
    r[..., 0, 1] = -2 * q1 * q4 + 2 * q2 * q3
    r[..., 0, 2] = 2 * q1 * q3 + 2 * q2 * q4
    r[..., 1, 0] = 2 * q1 * q4 + 2 * q2 * q3
    r[..., 1, 1] = 2 * q1**2 + 2 * q3**2 - 1
    r[..., 1, 2] = -2 * q1 * q2 + 2 * q3 * q4
    r[..., 2, 0] = -2 * q1 * q3 + 2 * q2 * q4
    r[..., 2, 1] = 2 * q1 * q2 + 2 * q3 * q4
    r[..., 2, 2] = 2 * q1**2 + 2 * q4**2 - 1
    return r


def to_rotation_matrix(q: Quaternion) -> RotationMatrix:
    return RotationMatrix.from_array(rotation_matrix_array(q.as_array()))


def orthonormality_error(matrix: np.ndarray) -> float:
    """max(|R^T R - I|, |det R - 1|) for a 3x3 matrix."""
    gram = matrix.T @ matrix
    return float(
        max(np.max(np.abs(gram - np.eye(3))), abs(np.linalg.det(matrix) - 1.0))
    )
