"""Domain value types."""

from .orientation import Quaternion, RotationMatrix
from .geometry import GeometryConfig, LegPoints, PlatformLocation
from .kinematics import JointState, Pose, ReducedJoints, ReducedPose
from .dkp import (
    DkpBranch,
    DkpBranchDetail,
    DkpDerivation,
    DkpSolution,
    DkpSolutionSet,
    XRoots,
)
from .singularity import AspectLabel, AspectReport
from .cells import (
    BoundRoot,
    CadCell,
    CellBound,
    CellMembership,
    CellSpace,
    DiscriminantVariety,
    RootEnclosure,
    VarietySpace,
)
from .oracle import MatchReport, RoundTripReport, SolveReport

__all__ = [
    "Quaternion",
    "RotationMatrix",
    "GeometryConfig",
    "LegPoints",
    "PlatformLocation",
    "JointState",
    "Pose",
    "ReducedJoints",
    "ReducedPose",
    "DkpBranch",
    "DkpBranchDetail",
    "DkpDerivation",
    "DkpSolution",
    "DkpSolutionSet",
    "XRoots",
    "AspectLabel",
    "AspectReport",
    "BoundRoot",
    "CadCell",
    "CellBound",
    "CellMembership",
    "CellSpace",
    "DiscriminantVariety",
    "RootEnclosure",
    "VarietySpace",
    "MatchReport",
    "RoundTripReport",
    "SolveReport",
]
