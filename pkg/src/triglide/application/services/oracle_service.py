"""Oracle Service"""

import logging
from typing import Optional

import numpy as np

from triglide.domain.kinematics.dkp import direct_kinematics, joint_space_factors
from triglide.domain.models import MatchReport, ReducedJoints, ReducedPose, SolveReport
from triglide.domain.ports.solver import ConstraintSolverPort
from triglide.infrastructure.config.config import Settings, get_settings

_logger = logging.getLogger(__name__)

MULTIPLICITY_FLAG = "degenerate: multiplicity"


def _unmatched(
    left: tuple[ReducedPose, ...], right: tuple[ReducedPose, ...], tol: float
) -> tuple[ReducedPose, ...]:
    """Members of ``left`` with no partner in ``right`` within ``tol``."""
    targets = [p.as_array() for p in right]
    return tuple(
        p
        for p in left
        if not any(np.max(np.abs(p.as_array() - t)) <= tol for t in targets)
    )


class OracleService:
    """Cross-checks the closed-form chain against a numerical solver."""

    def __init__(self, solver: ConstraintSolverPort, settings: Optional[Settings] = None):
        self.solver = solver
        self.settings = settings or get_settings()

    def solve(
        self, mu: ReducedJoints, starts: Optional[int] = None, seed: Optional[int] = None
    ) -> SolveReport:
        return self.solver.solve(
            mu,
            starts if starts is not None else self.settings.oracle_starts,
            seed if seed is not None else self.settings.oracle_seed,
        )

    def compare(
        self, mu: ReducedJoints, starts: Optional[int] = None, seed: Optional[int] = None
    ) -> MatchReport:
        """Set equality of the two solution sets within the dedup tolerance.

        A joint image on the double-root locus is flagged; its comparison is
        still reported but a mismatch there is expected.
        """
        closed = direct_kinematics(
            mu,
            coupling_tol=self.settings.coupling_tol,
            residual_tol=self.settings.dkp_residual_tol,
            dedup_tol=self.settings.dedup_tol,
            singular_band=self.settings.singular_band,
            boundary_band=self.settings.boundary_band,
            merge_tol=self.settings.root_merge_tol,
            unit_norm_tol=self.settings.unit_norm_tol,
        )
        oracle = self.solve(mu, starts, seed)
        tol = self.settings.dedup_tol
        missing_closed = _unmatched(oracle.solutions, tuple(closed.poses()), tol)
        missing_oracle = _unmatched(tuple(closed.poses()), oracle.solutions, tol)

        flags: list[str] = []
        _, f2 = joint_space_factors(mu)
        double = closed.derivation is not None and closed.derivation.x_roots.double
        if closed.degenerate or double or abs(f2) <= self.settings.boundary_band:
            flags.append(MULTIPLICITY_FLAG)

        matched = not missing_closed and not missing_oracle
        if not matched:
            log = _logger.info if flags else _logger.warning
            log(
                "mu=%s: closed form %d vs oracle %d solutions (%d/%d unmatched)",
                mu.as_tuple(),
                len(closed),
                len(oracle.solutions),
                len(missing_oracle),
                len(missing_closed),
            )
        return MatchReport(
            mu=mu,
            matched=matched,
            closed_form_count=len(closed),
            oracle_count=len(oracle.solutions),
            missing_from_closed_form=missing_closed,
            missing_from_oracle=missing_oracle,
            flags=tuple(flags),
        )
