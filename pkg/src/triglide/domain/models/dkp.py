"""Direct-kinematics result types."""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field

from triglide.domain.models.kinematics import ReducedJoints, ReducedPose
from triglide.domain.models.singularity import AspectLabel


class DkpBranch(str, Enum):
    """Which root of the x-quadratic a solution comes from."""

    MINUS = "-"
    PLUS = "+"
    DOUBLE = "double"
    LINEAR = "linear"


class XRoots(BaseModel):
    """Real roots of the x-quadratic, ascending."""

    model_config = ConfigDict(frozen=True)

    roots: tuple[float, ...] = ()
    coefficients: tuple[float, float, float]
    discriminant: float
    double: bool = False
    linear: bool = False
    on_boundary: bool = False

    def branch_of(self, index: int) -> DkpBranch:
        if self.linear:
            return DkpBranch.LINEAR
        if self.double:
            return DkpBranch.DOUBLE
        return DkpBranch.MINUS if index == 0 else DkpBranch.PLUS


class DkpBranchDetail(BaseModel):
    """Per-x intermediate values of the closed-form chain."""

    model_config = ConfigDict(frozen=True)

    x: float
    branch: DkpBranch
    delta1: float
    delta3: float
    q12_candidates: tuple[float, ...]
    q34_candidates: tuple[float, ...]


class DkpDerivation(BaseModel):
    """Intermediate quantities of one closed-form DKP run."""

    model_config = ConfigDict(frozen=True)

    mu: ReducedJoints
    x_roots: XRoots
    branches: tuple[DkpBranchDetail, ...] = ()


class DkpSolution(BaseModel):
    """One assembly mode in reduced coordinates."""

    model_config = ConfigDict(frozen=True)

    pose: ReducedPose
    x_branch: DkpBranch
    signs: tuple[int, int, int, int]
    coupling_residual: float
    residual: float
    aspect: AspectLabel


class DkpSolutionSet(BaseModel):
    """Canonical solutions for one joint image.

    ``root_count`` counts the real roots of the constraint system in
    (x', q1..q4), i.e. both members of every quaternion pair ``(q, -q)``.
    """

    model_config = ConfigDict(frozen=True)

    mu: ReducedJoints
    solutions: tuple[DkpSolution, ...] = ()
    degenerate: bool = False
    derivation: Optional[DkpDerivation] = Field(default=None, exclude=True)

    @computed_field
    @property
    def root_count(self) -> int:
        return 2 * len(self.solutions)

    def __len__(self) -> int:
        return len(self.solutions)

    def poses(self) -> list[ReducedPose]:
        return [s.pose for s in self.solutions]
