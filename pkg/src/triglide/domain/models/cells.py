"""Cell-model types.

A bound ``[P, n, v, Q, m]`` says coordinate ``v`` runs from the n-th real
root of ``P`` to the m-th real root of ``Q``, where both polynomials are read
as univariate in ``v`` once the earlier coordinates are fixed.
"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class CellSpace(str, Enum):
    """Available cell tables."""

    JOINT = "joint"
    NN = "nn"


class VarietySpace(str, Enum):
    JOINTSPACE = "jointspace"
    WORKSPACE = "workspace"


class RootEnclosure(BaseModel):
    """Interval ``[lo, hi]`` holding exactly one real root, plus its estimate."""

    model_config = ConfigDict(frozen=True)

    lo: float
    hi: float
    root: float
    multiplicity_odd: bool = True

    @property
    def width(self) -> float:
        return self.hi - self.lo


class BoundRoot(BaseModel):
    """The ``root_index``-th real root (1-based) of a named polynomial."""

    model_config = ConfigDict(frozen=True)

    label: str
    polynomial: str
    root_index: int = Field(..., ge=1)


class CellBound(BaseModel):
    model_config = ConfigDict(frozen=True)

    coordinate: str
    lower: BoundRoot
    upper: BoundRoot

    def bracket(self) -> str:
        """Render in the ``[P, n, v, Q, m]`` notation."""
        return (
            f"[{self.lower.label}, {self.lower.root_index}, {self.coordinate}, "
            f"{self.upper.label}, {self.upper.root_index}]"
        )


class CadCell(BaseModel):
    """One open cell: a chain of bounds over ordered coordinates."""

    model_config = ConfigDict(frozen=True)

    index: int = Field(..., ge=1)
    coordinates: tuple[str, ...]
    bounds: tuple[CellBound, ...]
    sample_point: tuple[float, ...]


class CellMembership(BaseModel):
    """Result of locating a point in a cell table.

    ``cell`` is the 1-based index of the cell whose interior holds the point,
    or ``None``. ``adjacent`` lists cells whose closure holds a boundary point.
    """

    model_config = ConfigDict(frozen=True)

    point: tuple[float, ...]
    cell: Optional[int] = None
    boundary: bool = False
    adjacent: tuple[int, ...] = ()

    @property
    def interior(self) -> bool:
        return self.cell is not None and not self.boundary


class DiscriminantVariety(BaseModel):
    model_config = ConfigDict(frozen=True)

    space: str
    coordinates: tuple[str, ...]
    components: tuple[str, ...]
