"""Cell Service"""

from typing import Optional, Sequence

import numpy as np

from triglide.domain.cells.classify import classify_point
from triglide.domain.cells.tables import cell_table
from triglide.domain.cells.varieties import (
    discriminant_variety,
    discriminant_variety_residual,
)
from triglide.domain.models import (
    CadCell,
    CellMembership,
    CellSpace,
    DiscriminantVariety,
    VarietySpace,
)
from triglide.infrastructure.config.config import Settings, get_settings


class CellService:
    """Cell tables and point location."""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()

    def cells(self, space: CellSpace | str) -> list[CadCell]:
        return list(cell_table(CellSpace(space)).cells)

    def coordinates(self, space: CellSpace | str) -> tuple[str, ...]:
        return cell_table(CellSpace(space)).coordinates

    def classify(self, space: CellSpace | str, point: Sequence[float]) -> CellMembership:
        return classify_point(
            space,
            point,
            band=self.settings.boundary_band,
            refine_tol=self.settings.root_refine_tol,
        )

    def variety(self, which: VarietySpace | str) -> DiscriminantVariety:
        return discriminant_variety(which)

    def variety_residual(
        self, which: VarietySpace | str, point: Sequence[float]
    ) -> np.ndarray:
        return discriminant_variety_residual(which, point)
