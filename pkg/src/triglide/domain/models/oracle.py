"""Numerical-oracle report types."""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from triglide.domain.models.kinematics import Pose, ReducedJoints, ReducedPose

KEY_DECIMALS = 9


def solution_key(point: np.ndarray) -> tuple[float, ...]:
    """Ordering key of a solution that ignores noise past ``KEY_DECIMALS``."""
    return tuple(np.round(np.asarray(point, dtype=float), KEY_DECIMALS).tolist())


def _tiebreak(pose: ReducedPose) -> tuple[tuple[float, ...], tuple[float, ...]]:
    point = pose.as_array()
    return solution_key(point), tuple(point.tolist())


class SolveReport(BaseModel):
    """Converged, deduplicated roots of one multistart run."""

    model_config = ConfigDict(frozen=True)

    mu: ReducedJoints
    solutions: tuple[ReducedPose, ...] = ()
    residuals: tuple[float, ...] = ()
    attempts: int = 0
    converged: int = 0
    max_residual: float = 0.0
    dedup_tol: float = Field(1e-6, exclude=True)

    def merge(self, other: "SolveReport") -> "SolveReport":
        """Set union of two reports for the same joint image.

        The result does not depend on the merge order. ``solutions`` are sorted
        by (x', q) rounded to ``KEY_DECIMALS``; residual ties keep the smaller key.
        """
        if other.mu != self.mu:
            raise ValueError("cannot merge reports of different joint images")
        pairs = list(zip(self.solutions, self.residuals))
        for pose, res in zip(other.solutions, other.residuals):
            hit = next(
                (
                    i
                    for i, (kept, _) in enumerate(pairs)
                    if np.max(np.abs(kept.as_array() - pose.as_array()))
                    <= self.dedup_tol
                ),
                None,
            )
            if hit is None:
                pairs.append((pose, res))
            elif (res, _tiebreak(pose)) < (pairs[hit][1], _tiebreak(pairs[hit][0])):
                pairs[hit] = (pose, res)
        pairs.sort(key=lambda pr: solution_key(pr[0].as_array()))
        return SolveReport(
            mu=self.mu,
            solutions=tuple(p for p, _ in pairs),
            residuals=tuple(r for _, r in pairs),
            attempts=self.attempts + other.attempts,
            converged=self.converged + other.converged,
            max_residual=max((r for _, r in pairs), default=0.0),
            dedup_tol=self.dedup_tol,
        )


class MatchReport(BaseModel):
    """Set comparison between the closed-form chain and the oracle."""

    model_config = ConfigDict(frozen=True)

    mu: ReducedJoints
    matched: bool
    closed_form_count: int
    oracle_count: int
    missing_from_closed_form: tuple[ReducedPose, ...] = ()
    missing_from_oracle: tuple[ReducedPose, ...] = ()
    flags: tuple[str, ...] = ()


class RoundTripReport(BaseModel):
    """IKP -> change of variables -> DKP recovery over random poses."""

    model_config = ConfigDict(frozen=True)

    n: int
    seed: int
    recovered: int
    failures: int
    max_ik_residual: float
    max_recovery_error: float
    resampled: int = 0
    failed_poses: tuple[Pose, ...] = ()
