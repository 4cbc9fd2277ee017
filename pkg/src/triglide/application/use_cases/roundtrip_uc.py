"""Round-trip Use Case - IKP, change of variables and DKP recovery."""

import logging
from typing import Optional

import numpy as np
from scipy.spatial.transform import Rotation

from triglide.domain.kinematics.constraints import (
    constraint_residual_array,
    inverse_kinematics_array,
    joints_from_array,
    reduce_joints,
)
from triglide.domain.kinematics.dkp import direct_kinematics
from triglide.domain.kinematics.orientation import canonical_batch
from triglide.domain.kinematics.singularity import singularity_factors_array
from triglide.domain.models import Pose, Quaternion, RoundTripReport
from triglide.infrastructure.config.config import Settings, get_settings

_logger = logging.getLogger(__name__)

RECOVERY_TOL = 1e-9
MAX_REPORTED_FAILURES = 10


def random_poses(
    n: int, rng: np.random.Generator, near_band: float = 0.0
) -> tuple[np.ndarray, np.ndarray, int]:
    """Positions uniform in [-1, 1]^3 and uniform orientations (w, x, y, z).

    Orientations within ``near_band`` of a singular cylinder are redrawn.
    Returns the positions, the canonical quaternions and the redraw count.
    """
    positions = rng.uniform(-1.0, 1.0, size=(n, 3))
    qs = np.empty((n, 4))
    todo = np.arange(n)
    redrawn = 0
    while todo.size:
        xyzw = Rotation.random(todo.size, rng).as_quat()
        qs[todo] = canonical_batch(xyzw[:, [3, 0, 1, 2]])
        f = singularity_factors_array(qs[todo])
        bad = np.min(np.abs(f), axis=1) <= near_band
        redrawn += int(bad.sum())
        todo = todo[bad]
    return positions, qs, redrawn


class RoundTripUseCase:
    """Recover random poses from their own joint values."""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()

    def run(self, n: int, seed: int, tol: float = RECOVERY_TOL) -> RoundTripReport:
        """Check that every pose is among the DKP solutions of its joints.

        Args:
            n: Number of random nonsingular poses.
            seed: Seed of the generator.
            tol: Max-norm tolerance on (x', q) for a recovered pose.

        Returns:
            RoundTripReport with the recovery count and the worst errors.
        """
        if n < 1:
            raise ValueError("n must be at least 1")
        rng = np.random.default_rng(seed)
        positions, qs, redrawn = random_poses(
            n, rng, near_band=self.settings.near_singular_band
        )
        joints = inverse_kinematics_array(positions, qs)
        ik_residual = np.max(
            np.abs(constraint_residual_array(positions, qs, joints)), initial=0.0
        )

        recovered = 0
        worst = 0.0
        failed: list[Pose] = []
        for position, q, row in zip(positions, qs, joints):
            j = joints_from_array(row)
            target = np.array([position[0] + j.rho2y, *q])
            solutions = direct_kinematics(
                reduce_joints(j),
                coupling_tol=self.settings.coupling_tol,
                residual_tol=self.settings.dkp_residual_tol,
                dedup_tol=self.settings.dedup_tol,
                singular_band=self.settings.singular_band,
                boundary_band=self.settings.boundary_band,
                merge_tol=self.settings.root_merge_tol,
                unit_norm_tol=self.settings.unit_norm_tol,
            )
            errors = [np.max(np.abs(p.as_array() - target)) for p in solutions.poses()]
            best = min(errors, default=np.inf)
            if best <= tol:
                recovered += 1
                worst = max(worst, float(best))
            elif len(failed) < MAX_REPORTED_FAILURES:
                x, y, z = position
                failed.append(Pose(x=x, y=y, z=z, q=Quaternion.model_validate(q)))

        report = RoundTripReport(
            n=n,
            seed=seed,
            recovered=recovered,
            failures=n - recovered,
            max_ik_residual=float(ik_residual),
            max_recovery_error=worst,
            resampled=redrawn,
            failed_poses=tuple(failed),
        )
        _logger.info(
            "round trip n=%d seed=%d: %d recovered, %d failures",
            n,
            seed,
            recovered,
            report.failures,
        )
        return report
