"""Singularity Service"""

from typing import Optional

import numpy as np

from triglide.domain.kinematics.singularity import (
    aspect_report,
    classify_aspect,
    serial_jacobian_rank,
    singular_surface_sample,
)
from triglide.domain.models import AspectLabel, AspectReport, Pose, Quaternion
from triglide.infrastructure.config.config import Settings, get_settings


class SingularityService:
    """Aspect labels and singular-surface samples with configured bands."""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()

    def aspect(self, pose: Pose) -> AspectReport:
        return aspect_report(
            pose,
            band=self.settings.singular_band,
            near_band=self.settings.near_singular_band,
        )

    def label(self, q: Quaternion) -> AspectLabel:
        return classify_aspect(q, self.settings.singular_band)

    def serial_rank(self, pose: Pose) -> int:
        return serial_jacobian_rank(pose)

    def surface(self, factor: int, resolution: int) -> np.ndarray:
        return singular_surface_sample(factor, resolution)
