"""Application use cases."""

from .roundtrip_uc import RoundTripUseCase
from .sweep_uc import SweepSpace, SweepUseCase

__all__ = ["RoundTripUseCase", "SweepSpace", "SweepUseCase"]
