"""Constraint Solver Port Interface"""

from typing import Protocol, runtime_checkable

from triglide.domain.models.kinematics import ReducedJoints
from triglide.domain.models.oracle import SolveReport


@runtime_checkable
class ConstraintSolverPort(Protocol):
    """Interface for numerical solvers of the reduced constraint system."""

    def solve(self, mu: ReducedJoints, starts: int, seed: int) -> SolveReport:
        """Find the real roots of the five reduced equations for ``mu``.

        Args:
            mu (ReducedJoints): Joint image (mu2z, mu3z, mu3y).
            starts (int): Number of initial points.
            seed (int): Seed of the start sequence.

        Returns:
            SolveReport: Converged, canonicalized and deduplicated roots.
        """
