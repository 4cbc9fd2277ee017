"""Multistart damped-Newton solver for the reduced constraint system."""

import logging
from typing import Optional

import numpy as np
from scipy.stats import qmc

from triglide.domain.kinematics.constraints import reduced_jacobian, reduced_residual
from triglide.domain.kinematics.orientation import canonical_batch
from triglide.domain.models.kinematics import ReducedJoints, ReducedPose
from triglide.domain.models.oracle import SolveReport, solution_key
from triglide.domain.models.orientation import Quaternion
from triglide.domain.ports.solver import ConstraintSolverPort
from triglide.infrastructure.config.config import Settings, get_settings

_logger = logging.getLogger(__name__)

X_RANGE = (-2.0, 2.0)
CHUNK = 512


def uniform_quaternions(u: np.ndarray) -> np.ndarray:
    """Map ``(N, 3)`` points of the unit cube to uniform unit quaternions."""
    u1, u2, u3 = u[:, 0], u[:, 1], u[:, 2]
    a = np.sqrt(1.0 - u1)
    b = np.sqrt(u1)
    return np.column_stack(
        [
            a * np.sin(2 * np.pi * u2),
            a * np.cos(2 * np.pi * u2),
            b * np.sin(2 * np.pi * u3),
            b * np.cos(2 * np.pi * u3),
        ]
    )


def start_points(starts: int, seed: int) -> np.ndarray:
    """Scrambled Halton starts on the quaternion sphere times ``X_RANGE``."""
    sampler = qmc.Halton(d=4, scramble=True, seed=seed)
    u = sampler.random(starts)
    x = qmc.scale(u[:, :1], [X_RANGE[0]], [X_RANGE[1]])
    return np.column_stack([x, uniform_quaternions(u[:, 1:])])


class MultistartNewtonSolver(ConstraintSolverPort):
    """Damped Newton from many starts, canonicalized and deduplicated."""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()

    def _newton(self, points: np.ndarray, mu: np.ndarray) -> np.ndarray:
        pts = np.array(points, dtype=float, copy=True)
        active = np.ones(len(pts), dtype=bool)
        norms = np.linalg.norm(reduced_residual(pts, mu), axis=1)
        for iteration in range(self.settings.newton_max_iter):
            active &= norms >= self.settings.newton_tol
            if not active.any():
                break
            idx = np.flatnonzero(active)
            p = pts[idx]
            res = reduced_residual(p, mu)
            step = (np.linalg.pinv(reduced_jacobian(p)) @ res[..., None])[..., 0]
            t = np.ones(len(idx))
            pending = np.ones(len(idx), dtype=bool)
            for _ in range(self.settings.newton_max_halvings + 1):
                trial = p[pending] - t[pending, None] * step[pending]
                trial_norm = np.linalg.norm(reduced_residual(trial, mu), axis=1)
                better = trial_norm < norms[idx[pending]]
                hit = np.flatnonzero(pending)[better]
                pts[idx[hit]] = trial[better]
                norms[idx[hit]] = trial_norm[better]
                pending[hit] = False
                if not pending.any():
                    break
                t[pending] *= 0.5
            # no descent after every halving: the start has stalled
            active[idx[pending]] = False
            _logger.debug(
                "newton iteration %d: %d active, %d stalled",
                iteration,
                int(active.sum()),
                int(pending.sum()),
            )
        return pts

    def _report(
        self, mu: ReducedJoints, pts: np.ndarray, attempts: int
    ) -> SolveReport:
        mu_arr = np.array(mu.as_tuple())
        res = np.max(np.abs(reduced_residual(pts, mu_arr)), axis=1, initial=0.0)
        good = np.isfinite(res) & (res < self.settings.oracle_residual_tol)
        pts, res = pts[good], res[good]
        if len(pts):
            pts[:, 1:] = canonical_batch(pts[:, 1:], tol=self.settings.unit_norm_tol)
            res = np.max(np.abs(reduced_residual(pts, mu_arr)), axis=1, initial=0.0)
        kept: list[int] = []
        for i in np.argsort(res, kind="stable"):
            if all(
                np.max(np.abs(pts[i] - pts[k])) > self.settings.dedup_tol for k in kept
            ):
                kept.append(int(i))
        kept.sort(key=lambda i: solution_key(pts[i]))
        return SolveReport(
            mu=mu,
            solutions=tuple(
                ReducedPose(x=float(pts[i, 0]), q=Quaternion.model_validate(pts[i, 1:]))
                for i in kept
            ),
            residuals=tuple(float(res[i]) for i in kept),
            attempts=attempts,
            converged=int(good.sum()),
            max_residual=float(max((res[i] for i in kept), default=0.0)),
            dedup_tol=self.settings.dedup_tol,
        )

    def solve(self, mu: ReducedJoints, starts: int, seed: int) -> SolveReport:
        """Find the real roots of the five reduced equations for ``mu``.

        Starts are processed in chunks whose reports are merged; the merge is
        a set union, so the chunking does not change the result set.

        Args:
            mu (ReducedJoints): Joint image (mu2z, mu3z, mu3y).
            starts (int): Number of initial points, at least one.
            seed (int): Seed of the scrambled Halton sequence.

        Returns:
            SolveReport: Converged, canonicalized and deduplicated roots.
        """
        if starts < 1:
            raise ValueError("starts must be at least 1")
        mu_arr = np.array(mu.as_tuple())
        initial = start_points(starts, seed)
        report = SolveReport(mu=mu, dedup_tol=self.settings.dedup_tol)
        for lo in range(0, starts, CHUNK):
            chunk = initial[lo : lo + CHUNK]
            with np.errstate(over="ignore", invalid="ignore"):
                pts = self._newton(chunk, mu_arr)
            report = report.merge(self._report(mu, pts, len(chunk)))
        _logger.info(
            "oracle mu=%s: %d/%d starts converged to %d roots",
            mu.as_tuple(),
            report.converged,
            report.attempts,
            len(report.solutions),
        )
        return report
