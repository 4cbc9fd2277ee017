import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from triglide.domain.cells.classify import classify_point
from triglide.domain.kinematics.constraints import (
    coupling_residual,
    inverse_kinematics,
    reduce_joints,
    reduced_residual,
)
from triglide.domain.kinematics.dkp import (
    direct_kinematics,
    direct_kinematics_from_joints,
    joint_space_factors,
    solve_q12,
    solve_q34,
    solve_x,
    x_quadratic,
)
from triglide.domain.kinematics.singularity import classify_aspect
from triglide.domain.models import CellSpace, DkpBranch, Pose, ReducedJoints

SQRT3 = math.sqrt(3.0)

INTERIOR = [
    (-0.75, -0.375, 0.0),
    (0.0, 0.0, 0.0),
    (0.75, 0.375, 0.0),
    (0.2, -0.1, 0.3),
    (-0.3, 0.25, -0.5),
]


def _as_set(solutions):
    return sorted(tuple(np.round(p.as_array(), 9)) for p in solutions.poses())


class TestSolveX:
    def test_origin(self, origin_mu):
        roots = solve_x(origin_mu)
        assert roots.roots == pytest.approx((-SQRT3 / 2, SQRT3 / 2))
        assert roots.branch_of(0) is DkpBranch.MINUS
        assert roots.branch_of(1) is DkpBranch.PLUS

    def test_discriminant_factorizes(self, rng):
        for mu in rng.uniform(-1.2, 1.2, size=(200, 3)):
            m = ReducedJoints.model_validate(mu)
            a, b, c = x_quadratic(m)
            f1, f2 = joint_space_factors(m)
            assert b * b - 4 * a * c == pytest.approx(16 * f1 * f2, rel=1e-9, abs=1e-9)

    def test_roots_satisfy_quadratic(self, rng):
        for mu in rng.uniform(-0.45, 0.45, size=(50, 3)):
            m = ReducedJoints.model_validate(mu)
            a, b, c = x_quadratic(m)
            for x in solve_x(m).roots:
                assert a * x * x + b * x + c == pytest.approx(0.0, abs=1e-9)

    def test_double_root_on_boundary(self):
        # (mu2z - mu3z)^2 + mu3y^2 = 1
        roots = solve_x(ReducedJoints.of(0.25, 0.25, 1.0))
        assert roots.on_boundary
        assert roots.double
        assert roots.branch_of(0) is DkpBranch.DOUBLE

    def test_linear_fallback(self):
        roots = solve_x(ReducedJoints.of(1.0, 0.0, 0.3))
        assert roots.linear
        assert len(roots.roots) == 1


class TestBiquadratics:
    def test_origin_magnitudes(self, origin_mu):
        x = -SQRT3 / 2
        q12 = solve_q12(origin_mu, x)
        q34 = solve_q34(origin_mu, x)
        assert max(q12) == pytest.approx(1.0, abs=1e-9)
        assert min(q12) < 1e-6
        assert max(q34) < 1e-6

    def test_magnitudes_are_nonnegative(self, rng):
        for mu in rng.uniform(-0.9, 0.9, size=(50, 3)):
            m = ReducedJoints.model_validate(mu)
            for x in solve_x(m).roots:
                assert all(v >= 0.0 for v in solve_q12(m, x) + solve_q34(m, x))


class TestDirectKinematics:
    def test_origin_solution_set(self, origin_mu):
        result = direct_kinematics(origin_mu)
        expected = sorted(
            [
                (round(-SQRT3 / 2, 9), 1.0, 0.0, 0.0, 0.0),
                (round(-SQRT3 / 2, 9), 0.0, 1.0, 0.0, 0.0),
                (round(SQRT3 / 2, 9), 0.0, 0.0, 1.0, 0.0),
                (round(SQRT3 / 2, 9), 0.0, 0.0, 0.0, 1.0),
            ]
        )
        assert _as_set(result) == expected
        assert result.root_count == 8
        assert not result.degenerate

    def test_known_solution_with_mu3y(self):
        result = direct_kinematics(ReducedJoints.of(0.0, 0.0, SQRT3 / 2))
        target = np.array([0.0, SQRT3 / 2, 0.0, 0.0, 0.5])
        assert min(np.max(np.abs(p.as_array() - target)) for p in result.poses()) < 1e-9
        assert result.root_count == 8

    @pytest.mark.parametrize("mu", INTERIOR)
    def test_interior_points_have_eight_roots(self, mu):
        result = direct_kinematics(ReducedJoints.model_validate(mu))
        assert len(result) == 4
        assert result.root_count == 8

    def test_solutions_are_canonical_and_sorted(self):
        result = direct_kinematics(ReducedJoints.of(0.2, -0.1, 0.3))
        xs = [s.pose.x for s in result.solutions]
        assert xs == sorted(xs)
        for s in result.solutions:
            q = s.pose.q.as_array()
            assert q[np.flatnonzero(np.abs(q) > 1e-12)[0]] > 0

    def test_every_solution_satisfies_the_system(self, joint_images):
        for mu in joint_images(50):
            result = direct_kinematics(ReducedJoints.model_validate(mu))
            for s in result.solutions:
                point = s.pose.as_array()
                assert np.max(np.abs(reduced_residual(point, np.array(mu)))) < 1e-9
                assert np.max(np.abs(coupling_residual(point))) < 1e-9
                assert s.residual < 1e-9

    def test_solution_aspect_matches_classifier(self):
        result = direct_kinematics(ReducedJoints.of(0.2, -0.1, 0.3))
        for s in result.solutions:
            assert s.aspect is classify_aspect(s.pose.q)

    def test_branches_annotated(self, origin_mu):
        result = direct_kinematics(origin_mu)
        for s in result.solutions:
            expected = DkpBranch.MINUS if s.pose.x < 0 else DkpBranch.PLUS
            assert s.x_branch is expected

    @pytest.mark.parametrize("mu", [(1.5, 0.0, 0.0), (3.0, 0.0, 0.0), (0.0, 0.0, 1.5)])
    def test_outside_joint_space_is_empty(self, mu):
        result = direct_kinematics(ReducedJoints.model_validate(mu))
        assert len(result) == 0

    def test_derivation_is_kept_but_not_serialized(self, origin_mu):
        result = direct_kinematics(origin_mu)
        assert result.derivation is not None
        assert len(result.derivation.branches) == 2
        assert "derivation" not in result.model_dump()
        assert result.model_dump()["root_count"] == 8

    def test_interior_sample_counts(self, joint_images):
        for mu in joint_images(100):
            assert direct_kinematics(ReducedJoints.model_validate(mu)).root_count == 8

    @pytest.mark.slow
    def test_interior_sample_counts_at_scale(self, joint_images):
        for mu in joint_images(500):
            assert direct_kinematics(ReducedJoints.model_validate(mu)).root_count == 8


def _root_count(mu) -> int:
    return direct_kinematics(ReducedJoints.model_validate(mu)).root_count


class TestRootCountAcrossCells:
    def test_outside_the_cells(self, joint_images):
        assert all(_root_count(mu) < 8 for mu in joint_images(300, inside=False))

    def test_outside_the_mu2z_range(self, rng):
        for _ in range(300):
            mu2z = rng.choice([-1.0, 1.0]) * rng.uniform(1.001, 1.2)
            mu = (mu2z, *rng.uniform(-1.2, 1.2, size=2))
            assert classify_point(CellSpace.JOINT, mu).cell is None
            assert _root_count(mu) < 8

    def _check_membership_against_count(self, rng, n):
        counts = {}
        for point in rng.uniform(-1.2, 1.2, size=(n, 3)):
            membership = classify_point(CellSpace.JOINT, point, band=1e-3)
            if membership.boundary:
                continue
            inside = membership.cell is not None
            root_count = _root_count(point)
            assert (root_count == 8) == inside, (point, root_count)
            if abs(point[0]) > 1.0:
                assert root_count < 8
            counts[inside] = counts.get(inside, 0) + 1
        assert counts.get(True) and counts.get(False)

    def test_membership_matches_root_count(self, rng):
        self._check_membership_against_count(rng, 1500)

    @pytest.mark.slow
    def test_membership_matches_root_count_at_scale(self, rng):
        self._check_membership_against_count(rng, 10_000)


class TestRecovery:
    def test_pose_is_recovered_from_its_joints(self, rng, unit_quaternions):
        qs = unit_quaternions(200)
        f = np.column_stack(
            [qs[:, 1] ** 2 + qs[:, 2] ** 2 - 0.5, qs[:, 1] ** 2 + qs[:, 3] ** 2 - 0.5]
        )
        qs = qs[np.min(np.abs(f), axis=1) > 1e-3]
        for q in qs:
            x, y, z = rng.uniform(-1, 1, size=3)
            pose = Pose(x=x, y=y, z=z, q=q)
            joints = inverse_kinematics(pose)
            target = np.array([x + joints.rho2y, *pose.q.as_tuple()])
            result = direct_kinematics(reduce_joints(joints))
            errors = [np.max(np.abs(p.as_array() - target)) for p in result.poses()]
            assert min(errors) < 1e-9

    def test_from_joints_lifts_poses(self):
        pose = Pose(x=0.1, y=-0.2, z=0.3, q=[0.9, 0.1, 0.2, 0.3])
        poses = direct_kinematics_from_joints(inverse_kinematics(pose))
        assert len(poses) == 4
        errors = [
            max(
                np.max(np.abs(p.position() - pose.position())),
                np.max(np.abs(p.q.as_array() - pose.q.as_array())),
            )
            for p in poses
        ]
        assert min(errors) < 1e-9
        assert all(p.y == pytest.approx(-0.2) and p.z == pytest.approx(0.3) for p in poses)
