import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from triglide.domain.kinematics.constraints import (
    distance_residual,
    inverse_kinematics,
    joints_to_array,
    world_leg_joints,
)
from triglide.domain.kinematics.geometry import (
    leg_point_array,
    leg_points_from_joints,
    pairwise_distances,
    platform_vertices,
    world_platform_points,
)
from triglide.domain.models import GeometryConfig, JointState, PlatformLocation, Pose


def _random_pose(rng, unit_quaternions) -> Pose:
    x, y, z = rng.uniform(-1, 1, size=3)
    return Pose(x=x, y=y, z=z, q=unit_quaternions(1)[0])


class TestPlatformVertices:
    @pytest.mark.parametrize("loc", list(PlatformLocation))
    def test_unit_equilateral(self, loc):
        assert_allclose(pairwise_distances(platform_vertices(loc)), [1, 1, 1])

    def test_center_location_is_centroid(self):
        assert_allclose(platform_vertices(PlatformLocation.CENTER).sum(axis=0), 0, atol=1e-15)

    def test_corner_median_puts_first_vertex_on_origin(self):
        v = platform_vertices()
        assert_allclose(v[0], [0, 0, 0])
        assert_allclose(v[1], [math.sqrt(3) / 2, 0.5, 0])

    def test_copy_is_returned(self):
        v = platform_vertices()
        v[0, 0] = 5.0
        assert platform_vertices()[0, 0] == 0.0


class TestWorldPoints:
    def test_identity_pose(self, home_pose):
        assert_allclose(world_platform_points(home_pose), platform_vertices())

    @pytest.mark.parametrize("loc", list(PlatformLocation))
    def test_rigid(self, rng, unit_quaternions, loc):
        for _ in range(20):
            w = world_platform_points(_random_pose(rng, unit_quaternions), loc)
            assert_allclose(pairwise_distances(w), [1, 1, 1], atol=1e-12)


class TestLegPoints:
    def test_layout(self):
        j = JointState(rho1x=0.1, rho1y=0.2, rho1z=0.3, rho2x=0.4, rho2y=0.5,
                       rho2z=0.6, rho3x=0.7, rho3y=0.8, rho3z=0.9)
        legs = leg_points_from_joints(j)
        assert legs.a1 == (2.0, 0.2, 0.3)
        assert legs.a2 == (-0.5, 2.0, 0.6)
        assert legs.a3 == (0.8, -2.0, 0.9)
        assert legs.c2 == (-0.5, 0.4, 0.6)
        assert legs.c3 == (0.8, -0.7, 0.9)

    def test_base_offset_moves_only_origins(self):
        legs = leg_points_from_joints(JointState(), GeometryConfig(base_offset=3.0))
        assert legs.a1[0] == 3.0
        assert legs.ends() == ((0.0, 0.0, 0.0),) * 3

    def test_ik_puts_leg_ends_on_the_platform(self, rng, unit_quaternions):
        for _ in range(50):
            pose = _random_pose(rng, unit_quaternions)
            joints = inverse_kinematics(pose)
            assert_allclose(leg_point_array(joints), world_platform_points(pose), atol=1e-12)
            assert np.max(np.abs(distance_residual(joints))) < 1e-12

    def test_world_leg_joints_matches_ik_at_corner_median(self, rng, unit_quaternions):
        pose = _random_pose(rng, unit_quaternions)
        assert_allclose(
            joints_to_array(world_leg_joints(pose, PlatformLocation.CORNER_MEDIAN)),
            joints_to_array(inverse_kinematics(pose)),
            atol=1e-12,
        )

    @pytest.mark.parametrize("loc", [PlatformLocation.CENTER, PlatformLocation.CORNER])
    def test_world_leg_joints_keep_unit_edges(self, rng, unit_quaternions, loc):
        joints = world_leg_joints(_random_pose(rng, unit_quaternions), loc)
        assert np.max(np.abs(distance_residual(joints))) < 1e-12
