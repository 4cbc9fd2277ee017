"""Robot geometry value types."""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

Vector3 = tuple[float, float, float]


class PlatformLocation(str, Enum):
    """Where the moving frame sits on the equilateral platform."""

    CENTER = "center"
    CORNER = "corner"
    CORNER_MEDIAN = "corner-median"


class GeometryConfig(BaseModel):
    """Geometric constants of the U-shaped base and the platform.

    ``base_offset`` is the distance of the leg origins A_i from the base
    center; it only moves the passive-joint strokes. ``platform_edge`` is the
    physical length of the platform edge: every computation runs in edge
    units and the service layer scales at the boundary.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    base_offset: float = Field(2.0, gt=0.0)
    platform_edge: float = Field(1.0, gt=0.0)


class LegPoints(BaseModel):
    """Leg origins A_i and leg end points C_i in the base frame."""

    model_config = ConfigDict(frozen=True)

    a1: Vector3
    a2: Vector3
    a3: Vector3
    c1: Vector3
    c2: Vector3
    c3: Vector3

    def origins(self) -> tuple[Vector3, Vector3, Vector3]:
        return (self.a1, self.a2, self.a3)

    def ends(self) -> tuple[Vector3, Vector3, Vector3]:
        return (self.c1, self.c2, self.c3)
