"""Univariate polynomials and real-root isolation by Sturm sequences."""

import logging
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.optimize import brentq

from triglide.domain.errors import DegeneratePolynomialError
from triglide.domain.models.cells import RootEnclosure

_logger = logging.getLogger(__name__)

REFINE_TOL = 1e-12
# remainders below this (relative to the dividend) end the Sturm chain
CHAIN_EPS = 1e-13


@dataclass(frozen=True)
class UniPoly:
    """Real polynomial with ascending coefficients; trailing zeros trimmed."""

    coefficients: tuple[float, ...]

    @classmethod
    def of(cls, coefficients: Iterable[float]) -> "UniPoly":
        c = np.trim_zeros(np.asarray(list(coefficients), dtype=float), trim="b")
        if c.size == 0:
            raise DegeneratePolynomialError()
        return cls(tuple(float(v) for v in c))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def array(self) -> np.ndarray:
        return np.asarray(self.coefficients)

    def __call__(self, x):
        return P.polyval(x, self.array())

    def cauchy_bound(self) -> float:
        """Every real root lies in [-bound, bound]."""
        c = self.array()
        if c.size == 1:
            return 1.0
        return 1.0 + float(np.max(np.abs(c[:-1])) / abs(c[-1]))


def sturm_sequence(p: UniPoly) -> list[np.ndarray]:
    """p, p', then negated remainders until one vanishes.

    The last element is the gcd of p and p' up to scale, so sign variations
    count distinct roots even with multiplicities.
    """
    c = p.array()
    seq = [c]
    if c.size > 1:
        seq.append(P.polyder(c))
    while seq[-1].size > 1:
        _, rem = P.polydiv(seq[-2], seq[-1])
        scale = max(np.max(np.abs(seq[-2])), 1.0)
        rem = np.where(np.abs(rem) <= CHAIN_EPS * scale, 0.0, rem)
        rem = np.trim_zeros(rem, trim="b")
        if rem.size == 0:
            break
        seq.append(-rem)
    return seq


def sign_variations(seq: list[np.ndarray], x: float) -> int:
    values = [P.polyval(x, c) for c in seq]
    signs = [np.sign(v) for v in values if v != 0.0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _nudge(p: UniPoly, x: float, lo: float, hi: float) -> float:
    """Move ``x`` off an exact root while staying inside (lo, hi)."""
    step = (hi - lo) * 1e-3
    k = 1
    while p(x) == 0.0 and k < 64:
        x = x + step * (k if k % 2 else -k)
        k += 1
    return x


def _refine(
    p: UniPoly, seq: list[np.ndarray], lo: float, hi: float, tol: float
) -> RootEnclosure:
    flo, fhi = p(lo), p(hi)
    if flo == 0.0:
        return RootEnclosure(lo=lo, hi=lo, root=lo)
    if fhi == 0.0:
        return RootEnclosure(lo=hi, hi=hi, root=hi)
    if np.sign(flo) != np.sign(fhi):
        root = brentq(p, lo, hi, xtol=tol / 10)
        half = tol / 2
        return RootEnclosure(lo=max(lo, root - half), hi=min(hi, root + half), root=root)
    # even multiplicity: shrink by counting
    v_lo = sign_variations(seq, lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if p(mid) == 0.0:
            return RootEnclosure(lo=mid, hi=mid, root=mid, multiplicity_odd=False)
        if v_lo - sign_variations(seq, mid) >= 1:
            hi = mid
        else:
            lo, v_lo = mid, sign_variations(seq, mid)
    return RootEnclosure(lo=lo, hi=hi, root=0.5 * (lo + hi), multiplicity_odd=False)


def isolate_real_roots(
    p: UniPoly,
    interval: Optional[tuple[float, float]] = None,
    tol: float = REFINE_TOL,
) -> list[RootEnclosure]:
    """Disjoint enclosures of the distinct real roots of ``p``, ascending.

    Args:
        p: Polynomial; a nonzero constant has no roots.
        interval: Search range ``(lo, hi)``; defaults to the Cauchy bound.
        tol: Target enclosure width.

    Raises:
        DegeneratePolynomialError: ``p`` is identically zero.
    """
    if not np.any(p.array()):
        raise DegeneratePolynomialError()
    if p.degree == 0:
        return []
    bound = p.cauchy_bound()
    lo, hi = interval if interval is not None else (-bound, bound)
    lo, hi = float(lo), float(hi)
    seq = sturm_sequence(p)

    # closed search range: push endpoints that are roots outward
    while p(lo) == 0.0:
        lo -= 1e-9 * max(1.0, abs(lo))
    while p(hi) == 0.0:
        hi += 1e-9 * max(1.0, abs(hi))
    pending = [(lo, hi, sign_variations(seq, lo), sign_variations(seq, hi))]
    isolated: list[tuple[float, float]] = []
    while pending:
        a, b, va, vb = pending.pop()
        count = va - vb
        if count <= 0:
            continue
        if count == 1:
            isolated.append((a, b))
            continue
        if b - a < tol:
            _logger.debug("unresolved root cluster of size %d near %.6g", count, a)
            isolated.append((a, b))
            continue
        mid = _nudge(p, 0.5 * (a + b), a, b)
        vm = sign_variations(seq, mid)
        pending.append((a, mid, va, vm))
        pending.append((mid, b, vm, vb))

    isolated.sort()
    return [_refine(p, seq, a, b, tol) for a, b in isolated]


def real_roots(p: UniPoly, tol: float = REFINE_TOL) -> list[float]:
    return [enc.root for enc in isolate_real_roots(p, tol=tol)]
