"""Sweep Use Case - grid data behind the joint-space and workspace plots."""

import itertools
import logging
from enum import Enum
from typing import Any, Iterator, Optional, Sequence

import numpy as np

from triglide.domain.cells.classify import classify_point
from triglide.domain.kinematics.dkp import direct_kinematics
from triglide.domain.kinematics.singularity import (
    label_from_factors,
    singular_surface_sample,
)
from triglide.domain.models import CellSpace, ReducedJoints
from triglide.infrastructure.config.config import Settings, get_settings

_logger = logging.getLogger(__name__)

MIN_RESOLUTION = 2
MAX_RESOLUTION = 2000
JOINT_RANGE = (-1.2, 1.2)


class SweepSpace(str, Enum):
    JOINT = "joint"
    WORKSPACE = "workspace"
    SURFACE = "surface"


HEADERS: dict[SweepSpace, tuple[str, ...]] = {
    SweepSpace.JOINT: ("mu2z", "mu3z", "mu3y", "cell", "boundary", "dkp_count"),
    SweepSpace.WORKSPACE: ("q2", "q3", "q4", "label", "f1", "f2", "nn_cell"),
    SweepSpace.SURFACE: ("q2", "q3", "q4"),
}


class SweepUseCase:
    """Row generators over regular grids, in row-major order."""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()

    @staticmethod
    def check_resolution(resolution: int) -> None:
        if not MIN_RESOLUTION <= resolution <= MAX_RESOLUTION:
            raise ValueError(
                f"resolution must be in [{MIN_RESOLUTION}, {MAX_RESOLUTION}]"
            )

    def header(self, space: SweepSpace | str) -> tuple[str, ...]:
        return HEADERS[SweepSpace(space)]

    def rows(
        self, space: SweepSpace | str, resolution: int, factor: int = 1
    ) -> Iterator[Sequence[Any]]:
        """Rows of the requested sweep; ``factor`` only applies to surfaces."""
        self.check_resolution(resolution)
        space = SweepSpace(space)
        _logger.info("sweep %s at resolution %d", space.value, resolution)
        if space is SweepSpace.JOINT:
            return self._joint_rows(resolution)
        if space is SweepSpace.WORKSPACE:
            return self._workspace_rows(resolution)
        return self._surface_rows(factor, resolution)

    def _joint_rows(self, resolution: int) -> Iterator[Sequence[Any]]:
        axis = np.linspace(*JOINT_RANGE, resolution)
        for point in itertools.product(axis, repeat=3):
            point = tuple(float(v) for v in point)
            membership = classify_point(
                CellSpace.JOINT,
                point,
                band=self.settings.boundary_band,
                refine_tol=self.settings.root_refine_tol,
            )
            solutions = direct_kinematics(
                ReducedJoints.model_validate(point),
                coupling_tol=self.settings.coupling_tol,
                residual_tol=self.settings.dkp_residual_tol,
                dedup_tol=self.settings.dedup_tol,
                singular_band=self.settings.singular_band,
                boundary_band=self.settings.boundary_band,
                merge_tol=self.settings.root_merge_tol,
                unit_norm_tol=self.settings.unit_norm_tol,
            )
            yield (*point, membership.cell, membership.boundary, solutions.root_count)

    def _workspace_rows(self, resolution: int) -> Iterator[Sequence[Any]]:
        axis = np.linspace(-1.0, 1.0, resolution)
        band = self.settings.singular_band
        for q2, q3, q4 in itertools.product(axis, repeat=3):
            if q2 * q2 + q3 * q3 + q4 * q4 > 1.0:
                continue
            f1 = q2 * q2 + q3 * q3 - 0.5
            f2 = q2 * q2 + q4 * q4 - 0.5
            membership = classify_point(
                CellSpace.NN,
                (q2, q3, q4),
                band=self.settings.boundary_band,
                refine_tol=self.settings.root_refine_tol,
            )
            yield (
                float(q2),
                float(q3),
                float(q4),
                label_from_factors(f1, f2, band),
                float(f1),
                float(f2),
                membership.cell,
            )

    def _surface_rows(self, factor: int, resolution: int) -> Iterator[Sequence[Any]]:
        for row in singular_surface_sample(factor, resolution):
            yield tuple(float(v) for v in row)
