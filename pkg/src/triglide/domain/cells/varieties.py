"""Discriminant varieties of the joint space and of the workspace."""

from functools import lru_cache
from typing import Sequence

import numpy as np
import sympy as sp

from triglide.domain.cells.tables import mu2z, mu3y, mu3z, q2, q3, q4
from triglide.domain.errors import InputValidationError
from triglide.domain.models.cells import DiscriminantVariety, VarietySpace

_COMPONENTS: dict[VarietySpace, tuple[tuple[sp.Symbol, ...], tuple[sp.Expr, ...]]] = {
    VarietySpace.JOINTSPACE: (
        (mu2z, mu3z, mu3y),
        (
            mu2z - mu3z - 1,
            mu2z - mu3z + 1,
            4 * (mu2z**2 - mu2z * mu3z + mu3z**2) - 3,
            (mu2z - mu3z) ** 2 + mu3y**2 - 1,
        ),
    ),
    VarietySpace.WORKSPACE: (
        (q2, q3, q4),
        (
            2 * q2**2 + 2 * q3**2 - 1,
            2 * q2**2 + 2 * q4**2 - 1,
            q2**2 + q3**2 + q4**2 - 1,
        ),
    ),
}


def discriminant_variety(which: VarietySpace | str) -> DiscriminantVariety:
    which = VarietySpace(which)
    symbols, exprs = _COMPONENTS[which]
    return DiscriminantVariety(
        space=which.value,
        coordinates=tuple(s.name for s in symbols),
        components=tuple(str(e) for e in exprs),
    )


@lru_cache(maxsize=None)
def _evaluator(which: VarietySpace):
    symbols, exprs = _COMPONENTS[which]
    return sp.lambdify(symbols, list(exprs), modules="numpy")


def discriminant_variety_residual(
    which: VarietySpace | str, point: Sequence[float]
) -> np.ndarray:
    """Every variety polynomial evaluated at ``point``."""
    which = VarietySpace(which)
    if len(point) != 3:
        raise InputValidationError("point", f"expected 3 coordinates, got {len(point)}")
    return np.array(_evaluator(which)(*(float(v) for v in point)), dtype=float)
