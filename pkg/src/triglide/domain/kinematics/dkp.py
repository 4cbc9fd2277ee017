"""Closed-form direct kinematics in reduced coordinates.

The chain is: a quadratic in x', then for each x' a biquadratic shared by q1
and q2 and another shared by q3 and q4. Every signed combination of their
roots is checked against the coupling equations, polished by Newton on the
five reduced equations and kept when the full residual is below tolerance.
"""

import itertools
import logging
import math

import numpy as np

from triglide.domain.errors import SingularLocusError
from triglide.domain.kinematics.constraints import (
    coupling_residual,
    lift_reduced_pose,
    reduce_joints,
    reduced_jacobian,
    reduced_residual,
)
from triglide.domain.kinematics.orientation import SQRT3, UNIT_NORM_TOL, canonical_batch
from triglide.domain.kinematics.singularity import classify_aspect
from triglide.domain.models.dkp import (
    DkpBranchDetail,
    DkpDerivation,
    DkpSolution,
    DkpSolutionSet,
    XRoots,
)
from triglide.domain.models.kinematics import JointState, Pose, ReducedJoints, ReducedPose
from triglide.domain.models.orientation import Quaternion

_logger = logging.getLogger(__name__)

ROOT_MERGE_TOL = 1e-10
LEAD_TOL = 1e-12
COUPLING_TOL = 1e-6
RESIDUAL_TOL = 1e-9
DEDUP_TOL = 1e-6
SNAP_TOL = 1e-12
# relative slack on radicands that should be zero
RADICAND_TOL = 1e-12
POLISH_ITERATIONS = 8


def _mu(mu: ReducedJoints) -> tuple[float, float, float]:
    return mu.mu2z, mu.mu3z, mu.mu3y


def x_quadratic(mu: ReducedJoints) -> tuple[float, float, float]:
    """Coefficients (a, b, c) of a x'^2 + b x' + c = 0."""
    m2, m3, my = _mu(mu)
    a = 4 * (m2 - m3) ** 2 - 4
    b = -8 * my * m2**2 + 8 * m2 * my * m3 + 4 * my
    c = 4 * (my**2 * m2**2 - m2**2 + m3 * m2 - my**2 - m3**2) + 3
    return a, b, c


def joint_space_factors(mu: ReducedJoints) -> tuple[float, float]:
    """F1 = 4(mu2z^2 - mu2z mu3z + mu3z^2) - 3 and F2 = (mu2z-mu3z)^2 + mu3y^2 - 1.

    The discriminant of the x-quadratic is 16 F1 F2.
    """
    m2, m3, my = _mu(mu)
    return 4 * (m2**2 - m2 * m3 + m3**2) - 3, (m2 - m3) ** 2 + my**2 - 1


def solve_x(
    mu: ReducedJoints,
    merge_tol: float = ROOT_MERGE_TOL,
    boundary_band: float = 1e-10,
) -> XRoots:
    """Real roots of the x-quadratic, ascending.

    Raises:
        SingularLocusError: both the quadratic and linear coefficients vanish.
    """
    a, b, c = x_quadratic(mu)
    f1, f2 = joint_space_factors(mu)
    disc = 16 * f1 * f2
    on_boundary = (
        abs(f1) <= boundary_band
        or abs(f2) <= boundary_band
        or abs(abs(mu.mu2z - mu.mu3z) - 1) <= boundary_band
    )
    common = dict(coefficients=(a, b, c), discriminant=disc, on_boundary=on_boundary)

    if abs(a) <= LEAD_TOL:
        if abs(b) <= LEAD_TOL:
            raise SingularLocusError()
        _logger.debug("x-quadratic degenerates to linear at mu=%s", _mu(mu))
        return XRoots(roots=(-c / b,), linear=True, **common)

    half_gap = math.sqrt(abs(disc)) / (2 * abs(a))
    if disc < 0 and half_gap > merge_tol:
        return XRoots(roots=(), **common)
    if half_gap <= merge_tol:
        return XRoots(roots=(-b / (2 * a),), double=True, **common)

    # cancellation-free pair
    q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
    roots = sorted((q / a, c / q))
    return XRoots(roots=tuple(roots), **common)


def delta1(mu: ReducedJoints, x: float) -> float:
    """Discriminant term of the q1/q2 biquadratic (its discriminant over 64)."""
    m2, m3, my = _mu(mu)
    s = SQRT3
    return (
        -9 * my**2
        - 12 * s * m2**2 * my
        + 12 * s * m2**2 * x
        + 12 * s * m2 * my * m3
        - 24 * s * m2 * m3 * x
        + 12 * s * m3**2 * x
        + 6 * s * my
        - 12 * s * x
        - 21 * m2**2
        + 30 * m3 * m2
        - 21 * m3**2
        + 18
    )


def delta3(mu: ReducedJoints, x: float) -> float:
    """Discriminant of the q3/q4 biquadratic."""
    m2, m3, my = _mu(mu)
    s = SQRT3
    return (
        5184
        * s
        * (
            (12 * my - 12 * x - 7 * s) * m2**2
            + (10 * s - 12 * my + 24 * x) * m3 * m2
            - (7 * s + 12 * x) * m3**2
            - 3 * my**2 * s
            + 6 * s
            - 6 * my
            + 12 * x
        )
    )


def q12_biquadratic(mu: ReducedJoints, x: float) -> tuple[float, float, float]:
    """(48, b, c) of 48 t^2 + b t + c = 0 with t = q1^2 (or q2^2)."""
    m2, m3, my = _mu(mu)
    s = SQRT3
    b = 16 * s * x - 24 - 8 * s * my
    c = (
        (4 * s * my - 4 * s * x + 7) * m2**2
        + (7 - 4 * s * x) * m3**2
        - 3
        + ((8 * s * x - 10) * m3 - 4 * s * my * m3) * m2
        + 4 * (my**2 - my * x + x**2)
    )
    return 48.0, b, c


def q34_biquadratic(mu: ReducedJoints, x: float) -> tuple[float, float, float]:
    """(432, b, c) of 432 t^2 + b t + c = 0 with t = q3^2 (or q4^2)."""
    m2, m3, my = _mu(mu)
    s = SQRT3
    b = 72 * s * (my - 2 * x) - 216
    c = (
        (-36 * s * my + 36 * s * x + 63) * m2**2
        + (36 * s * my * m3 + (-72 * s * x - 90) * m3) * m2
        + (36 * s * x + 63) * m3**2
        + 36 * my**2
        - 36 * my * x
        + 36 * x**2
        - 27
    )
    return 432.0, b, c


def _magnitudes(
    base: float, spread: float, delta: float, denom: float, merge_tol: float
) -> tuple[float, ...]:
    """Nonnegative roots of sqrt(base +- spread*sqrt(delta)) / denom."""
    scale = max(abs(base), 1.0)
    if delta < -RADICAND_TOL * scale**2:
        return ()
    root = math.sqrt(max(delta, 0.0))
    out: list[float] = []
    for sign in (1.0, -1.0):
        radicand = base + sign * spread * root
        if radicand < -RADICAND_TOL * scale:
            continue
        q = math.sqrt(max(radicand, 0.0)) / denom
        if q <= SNAP_TOL:
            q = 0.0
        if not any(abs(q - seen) <= merge_tol for seen in out):
            out.append(q)
    return tuple(sorted(out))


def solve_q12(
    mu: ReducedJoints, x: float, merge_tol: float = ROOT_MERGE_TOL
) -> tuple[float, ...]:
    """Nonnegative roots shared by q1 and q2 for a given x'.

    q = sqrt(144 + 48 sqrt3 mu3y - 96 sqrt3 x' +- 48 sqrt(delta1)) / 24.
    q1 takes these values; q2 takes them with either sign.
    """
    base = 144 + 48 * SQRT3 * mu.mu3y - 96 * SQRT3 * x
    return _magnitudes(base, 48.0, delta1(mu, x), 24.0, merge_tol)


def solve_q34(
    mu: ReducedJoints, x: float, merge_tol: float = ROOT_MERGE_TOL
) -> tuple[float, ...]:
    """Nonnegative roots shared by q3 and q4 for a given x'.

    q = sqrt(1296 - 432 sqrt3 mu3y + 864 sqrt3 x' +- 6 sqrt(delta3)) / 72.
    """
    base = 1296 - 432 * SQRT3 * mu.mu3y + 864 * SQRT3 * x
    return _magnitudes(base, 6.0, delta3(mu, x), 72.0, merge_tol)


def _signed(values: tuple[float, ...]) -> list[float]:
    out = set()
    for v in values:
        out.add(v)
        out.add(-v if v else 0.0)
    return sorted(out)


def newton_polish(
    points: np.ndarray, mu: np.ndarray, iterations: int = POLISH_ITERATIONS
) -> np.ndarray:
    """A few undamped Newton steps on the reduced system, batched."""
    pts = np.array(points, dtype=float, copy=True)
    for _ in range(iterations):
        res = reduced_residual(pts, mu)
        if np.max(np.abs(res), initial=0.0) < 1e-15:
            break
        step = np.linalg.pinv(reduced_jacobian(pts)) @ res[..., None]
        pts -= step[..., 0]
    return pts


def _signs(q: np.ndarray) -> tuple[int, int, int, int]:
    return tuple(0 if abs(v) <= SNAP_TOL else (1 if v > 0 else -1) for v in q)


def _dedupe(points: np.ndarray, tol: float) -> list[int]:
    kept: list[int] = []
    for i, p in enumerate(points):
        if all(np.max(np.abs(p - points[k])) > tol for k in kept):
            kept.append(i)
    return kept


def direct_kinematics(
    mu: ReducedJoints,
    *,
    coupling_tol: float = COUPLING_TOL,
    residual_tol: float = RESIDUAL_TOL,
    dedup_tol: float = DEDUP_TOL,
    singular_band: float = 1e-10,
    boundary_band: float = 1e-10,
    merge_tol: float = ROOT_MERGE_TOL,
    unit_norm_tol: float = UNIT_NORM_TOL,
) -> DkpSolutionSet:
    """Every canonical reduced pose (q1 >= 0) consistent with ``mu``.

    A joint image outside the joint space gives an empty set. Each real root
    in (x', q) appears once; its partner with -q is implied, so
    ``root_count`` is twice the number of solutions.
    """
    mu_arr = np.array(_mu(mu))
    try:
        x_roots = solve_x(mu, merge_tol=merge_tol, boundary_band=boundary_band)
    except SingularLocusError:
        _logger.warning("singular locus at mu=%s; no DKP solutions", _mu(mu))
        return DkpSolutionSet(mu=mu, degenerate=True)

    details: list[DkpBranchDetail] = []
    candidates: list[np.ndarray] = []
    branch_of_row: list[int] = []
    for i, x in enumerate(x_roots.roots):
        m12 = solve_q12(mu, x, merge_tol)
        m34 = solve_q34(mu, x, merge_tol)
        details.append(
            DkpBranchDetail(
                x=x,
                branch=x_roots.branch_of(i),
                delta1=delta1(mu, x),
                delta3=delta3(mu, x),
                q12_candidates=m12,
                q34_candidates=m34,
            )
        )
        if not m12 or not m34:
            continue
        combos = np.array(
            list(itertools.product(m12, _signed(m12), _signed(m34), _signed(m34)))
        )
        rows = np.column_stack([np.full(len(combos), x), combos])
        candidates.append(rows)
        branch_of_row.extend([i] * len(rows))

    derivation = DkpDerivation(mu=mu, x_roots=x_roots, branches=tuple(details))
    if not candidates:
        return DkpSolutionSet(mu=mu, degenerate=x_roots.on_boundary, derivation=derivation)

    pts = np.vstack(candidates)
    branches = np.array(branch_of_row)
    loose = np.maximum(
        np.max(np.abs(coupling_residual(pts)), axis=1),
        np.max(np.abs(reduced_residual(pts, mu_arr)), axis=1),
    )
    keep = loose <= coupling_tol
    _logger.debug(
        "mu=%s: %d candidates, %d pass coupling", _mu(mu), len(pts), int(keep.sum())
    )
    pts, branches = newton_polish(pts[keep], mu_arr), branches[keep]
    res = np.max(np.abs(reduced_residual(pts, mu_arr)), axis=1, initial=0.0)
    coup = np.max(np.abs(coupling_residual(pts)), axis=1, initial=0.0)
    ok = (res <= residual_tol) & (coup <= residual_tol)
    pts, branches, res, coup = pts[ok], branches[ok], res[ok], coup[ok]
    if len(pts):
        pts[:, 1:] = canonical_batch(pts[:, 1:], tol=unit_norm_tol)
        order = np.lexsort(pts.T[::-1])
        kept = order[_dedupe(pts[order], dedup_tol)]
        pts, branches, res, coup = pts[kept], branches[kept], res[kept], coup[kept]

    solutions = []
    for row, b, r, cp in zip(pts, branches, res, coup):
        q = Quaternion.model_validate(row[1:])
        solutions.append(
            DkpSolution(
                pose=ReducedPose(x=float(row[0]), q=q),
                x_branch=x_roots.branch_of(int(b)),
                signs=_signs(row[1:]),
                coupling_residual=float(cp),
                residual=float(r),
                aspect=classify_aspect(q, singular_band),
            )
        )
    if len(solutions) > 8:
        _logger.warning("mu=%s produced %d solutions", _mu(mu), len(solutions))
    degenerate = x_roots.on_boundary or x_roots.double
    return DkpSolutionSet(
        mu=mu, solutions=tuple(solutions), degenerate=degenerate, derivation=derivation
    )


def direct_kinematics_from_joints(joints: JointState, **options) -> list[Pose]:
    """All platform poses reachable with the actuated values of ``joints``."""
    solutions = direct_kinematics(reduce_joints(joints), **options)
    return [lift_reduced_pose(s.pose, joints) for s in solutions.solutions]
