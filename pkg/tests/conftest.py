"""Shared fixtures."""

import math

import numpy as np
import pytest

from triglide.domain.cells.classify import classify_point
from triglide.domain.models import CellSpace, Pose, Quaternion, ReducedJoints
from triglide.infrastructure.config.config import Settings, get_settings

SQRT3 = math.sqrt(3.0)


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Each test reads the environment anew."""
    for name in ("TRIGLIDE_TOL", "TRIGLIDE_GEOMETRY_FILE", "LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def settings() -> Settings:
    return Settings()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def identity() -> Quaternion:
    return Quaternion.identity()


@pytest.fixture
def home_pose(identity) -> Pose:
    return Pose.at(identity)


@pytest.fixture
def origin_mu() -> ReducedJoints:
    return ReducedJoints.of(0.0, 0.0, 0.0)


@pytest.fixture
def unit_quaternions(rng):
    """Draw ``n`` canonical unit quaternions as an ``(n, 4)`` array."""

    def draw(n: int) -> np.ndarray:
        q = rng.normal(size=(n, 4))
        q /= np.linalg.norm(q, axis=1, keepdims=True)
        q[q[:, 0] < 0] *= -1
        return q

    return draw


@pytest.fixture
def joint_images(rng):
    """Draw ``n`` joint images of [-1.2, 1.2]^3 that are inside (or outside)
    the joint-space cells, at least ``band`` away from every bound."""

    def draw(n: int, inside: bool = True, band: float = 1e-3) -> list[tuple[float, ...]]:
        out = []
        while len(out) < n:
            point = tuple(float(v) for v in rng.uniform(-1.2, 1.2, size=3))
            membership = classify_point(CellSpace.JOINT, point, band=band)
            if membership.boundary:
                continue
            if (membership.cell is not None) == inside:
                out.append(point)
        return out

    return draw
