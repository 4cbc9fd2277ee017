import math

import numpy as np
import pytest
from numpy.polynomial import polynomial as P

from triglide.domain.cells.polynomials import (
    UniPoly,
    isolate_real_roots,
    real_roots,
    sturm_sequence,
)
from triglide.domain.errors import DegeneratePolynomialError
from triglide.domain.kinematics.dkp import (
    q12_biquadratic,
    q34_biquadratic,
    solve_q12,
    solve_q34,
    solve_x,
    x_quadratic,
)
from triglide.domain.models import ReducedJoints


def _from_roots(*roots: float) -> UniPoly:
    return UniPoly.of(P.polyfromroots(roots))


class TestUniPoly:
    def test_trailing_zeros_trimmed(self):
        p = UniPoly.of([1.0, 2.0, 0.0, 0.0])
        assert p.coefficients == (1.0, 2.0)
        assert p.degree == 1

    def test_zero_polynomial_rejected(self):
        with pytest.raises(DegeneratePolynomialError):
            UniPoly.of([0.0, 0.0])

    def test_evaluation(self):
        assert UniPoly.of([2.0, -3.0, 0.0, 1.0])(2.0) == 4.0

    def test_cauchy_bound_encloses_roots(self):
        p = _from_roots(-7.5, 0.1, 3.0)
        bound = p.cauchy_bound()
        assert all(abs(r) <= bound for r in (-7.5, 0.1, 3.0))


class TestRealRoots:
    def test_quadratic(self):
        roots = real_roots(UniPoly.of([-2.0, 0.0, 1.0]))
        assert roots == pytest.approx([-math.sqrt(2.0), math.sqrt(2.0)], abs=1e-12)

    def test_constant_has_no_roots(self):
        assert real_roots(UniPoly.of([3.0])) == []

    def test_no_real_roots(self):
        assert real_roots(UniPoly.of([1.0, 0.0, 1.0])) == []

    def test_distinct_roots_ascending(self):
        roots = real_roots(_from_roots(6, 1, 4, 2, 5, 3))
        assert roots == pytest.approx([1, 2, 3, 4, 5, 6], abs=1e-8)

    def test_enclosures_are_disjoint_and_hold_the_root(self):
        encs = isolate_real_roots(_from_roots(-1.0, -0.999, 2.0))
        assert len(encs) == 3
        for a, b in zip(encs, encs[1:]):
            assert a.hi < b.lo
        for enc in encs:
            assert enc.lo <= enc.root <= enc.hi
            assert enc.width <= 1.01e-12

    def test_double_root(self):
        # (x - 1)^2 (x + 2)
        encs = isolate_real_roots(UniPoly.of([2.0, -3.0, 0.0, 1.0]))
        assert [e.root for e in encs] == pytest.approx([-2.0, 1.0], abs=1e-6)
        assert encs[0].multiplicity_odd
        assert not encs[1].multiplicity_odd

    def test_sturm_chain_ends_in_gcd(self):
        seq = sturm_sequence(UniPoly.of([2.0, -3.0, 0.0, 1.0]))
        # gcd with the derivative is linear in (x - 1)
        assert seq[-1].size == 2
        assert P.polyval(1.0, seq[-1]) == pytest.approx(0.0, abs=1e-12)

    def test_interval_restricts_search(self):
        p = _from_roots(-1.0, 1.0, 2.0)
        roots = [e.root for e in isolate_real_roots(p, interval=(0.0, 3.0))]
        assert roots == pytest.approx([1.0, 2.0], abs=1e-12)

    def test_endpoint_root_included(self):
        p = _from_roots(-1.0, 1.0, 2.0)
        roots = [e.root for e in isolate_real_roots(p, interval=(1.0, 3.0))]
        assert roots == pytest.approx([1.0, 2.0], abs=1e-9)

    def test_matches_numpy_on_random_polynomials(self, rng):
        for _ in range(20):
            roots = np.sort(rng.uniform(-3, 3, size=4))
            if np.min(np.diff(roots)) < 1e-3:
                continue
            found = real_roots(UniPoly.of(P.polyfromroots(roots)))
            assert found == pytest.approx(list(roots), abs=1e-9)


def _signed(magnitudes) -> list[float]:
    return sorted({s * m for m in magnitudes for s in (1.0, -1.0)})


def _well_separated(values, gap=1e-6) -> bool:
    return len(values) < 2 or float(np.min(np.diff(values))) > gap


class TestKinematicPolynomials:
    """Root isolation against the closed-form roots of the DKP chain."""

    def _check(self, mu):
        a, b, c = x_quadratic(mu)
        xs = list(solve_x(mu).roots)
        assert real_roots(UniPoly.of([c, b, a])) == pytest.approx(xs, abs=1e-10)
        for x in xs:
            for biquadratic, magnitudes in (
                (q12_biquadratic, solve_q12),
                (q34_biquadratic, solve_q34),
            ):
                lead, mid, const = biquadratic(mu, x)
                expected = _signed(magnitudes(mu, x))
                if not _well_separated(expected):
                    continue
                quartic = UniPoly.of([const, 0.0, mid, 0.0, lead])
                assert real_roots(quartic) == pytest.approx(expected, abs=1e-9)

    def test_interior_images(self, joint_images):
        for mu in joint_images(200):
            self._check(ReducedJoints.model_validate(mu))

    @pytest.mark.slow
    def test_interior_images_at_scale(self, joint_images):
        for mu in joint_images(1000):
            self._check(ReducedJoints.model_validate(mu))
