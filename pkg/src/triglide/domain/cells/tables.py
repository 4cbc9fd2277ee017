"""Cell tables of the joint space and of the NN aspect.

Bound polynomials are kept as sympy expressions in all coordinates; for a
given coordinate they are turned into a univariate polynomial whose
coefficients are functions of the coordinates fixed before it.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

import numpy as np
import sympy as sp

from triglide.domain.cells.polynomials import REFINE_TOL, UniPoly, isolate_real_roots
from triglide.domain.models.cells import BoundRoot, CadCell, CellBound, CellSpace

_logger = logging.getLogger(__name__)

mu2z, mu3z, mu3y = sp.symbols("mu2z mu3z mu3y", real=True)
q2, q3, q4 = sp.symbols("q2 q3 q4", real=True)

JOINT_POLYNOMIALS: dict[str, sp.Expr] = {
    "P1_R2Z": mu2z + 1,
    "P2_R2Z": 2 * mu2z + 1,
    "P3_R2Z": 2 * mu2z - 1,
    "P4_R2Z": mu2z - 1,
    "P1_R3Z": mu2z - mu3z - 1,
    "P2_R3Z": mu2z - mu3z + 1,
    "P3_R3Z": 4 * (mu2z**2 - mu2z * mu3z + mu3z**2) - 3,
    "P1_R3Y": (mu2z - mu3z) ** 2 + mu3y**2 - 1,
}

NN_POLYNOMIALS: dict[str, sp.Expr] = {
    "2q2^2-1": 2 * q2**2 - 1,
    "q2": q2,
    "2q2^2+2q3^2-1": 2 * q2**2 + 2 * q3**2 - 1,
    "2q2^2+2q4^2-1": 2 * q2**2 + 2 * q4**2 - 1,
}

JOINT_PROJECTIONS: dict[str, tuple[str, ...]] = {
    "mu2z": ("P1_R2Z", "P2_R2Z", "P3_R2Z", "P4_R2Z"),
    "mu3z": ("P1_R3Z", "P2_R3Z", "P3_R3Z"),
    "mu3y": ("P1_R3Y",),
}

WORKSPACE_PROJECTIONS: dict[str, tuple[sp.Expr, ...]] = {
    "q2": (q2, q2 - 1, q2 + 1, 2 * q2**2 - 1),
    "q3": (2 * q3**2 - 1, 2 * q2**2 + 2 * q3**2 - 1, q2**2 + q3**2 - 1),
    "q4": (2 * q2**2 + 2 * q4**2 - 1, q2**2 + q3**2 + q4**2 - 1),
}

# (lower label, n, upper label, m) per coordinate, one row per cell
_JOINT_ROWS = (
    (("P1_R2Z", 1, "P2_R2Z", 1), ("P3_R3Z", 1, "P3_R3Z", 2), ("P1_R3Y", 1, "P1_R3Y", 2)),
    (("P2_R2Z", 1, "P3_R2Z", 1), ("P3_R3Z", 1, "P3_R3Z", 2), ("P1_R3Y", 1, "P1_R3Y", 2)),
    (("P3_R2Z", 1, "P4_R2Z", 1), ("P3_R3Z", 1, "P3_R3Z", 2), ("P1_R3Y", 1, "P1_R3Y", 2)),
)
_JOINT_SAMPLES = ((-0.75, -0.375, 0.0), (0.0, 0.0, 0.0), (0.75, 0.375, 0.0))

_Q3 = ("2q2^2+2q3^2-1", 1, "2q2^2+2q3^2-1", 2)
_Q4 = ("2q2^2+2q4^2-1", 1, "2q2^2+2q4^2-1", 2)
_NN_ROWS = (
    (("2q2^2-1", 1, "q2", 1), _Q3, _Q4),
    (("q2", 1, "2q2^2-1", 2), _Q3, _Q4),
)
_NN_SAMPLES = ((-0.3, 0.0, 0.0), (0.3, 0.0, 0.0))


@dataclass(frozen=True)
class CellTable:
    """A fixed decomposition together with its bound polynomials."""

    space: CellSpace
    symbols: tuple[sp.Symbol, ...]
    polynomials: dict[str, sp.Expr] = field(hash=False)
    cells: tuple[CadCell, ...] = field(hash=False)

    @property
    def coordinates(self) -> tuple[str, ...]:
        return tuple(s.name for s in self.symbols)

    def polynomial(self, label: str, axis: int, context) -> UniPoly:
        """Bound polynomial ``label`` as univariate in coordinate ``axis``."""
        coeffs = _coefficient_functions(self.space, label, axis)
        args = tuple(float(v) for v in context[:axis])
        return UniPoly.of(np.array([f(*args) for f in coeffs], dtype=float))

    def root(
        self, bound: BoundRoot, axis: int, context, tol: float = REFINE_TOL
    ) -> Optional[float]:
        """Value of a root-indexed bound, or ``None`` if it has too few roots."""
        roots = isolate_real_roots(self.polynomial(bound.label, axis, context), tol=tol)
        if bound.root_index > len(roots):
            return None
        return roots[bound.root_index - 1].root

    def interval(
        self, cell: CadCell, axis: int, context, tol: float = REFINE_TOL
    ) -> Optional[tuple[float, float]]:
        b = cell.bounds[axis]
        lo = self.root(b.lower, axis, context, tol)
        hi = self.root(b.upper, axis, context, tol)
        if lo is None or hi is None:
            return None
        return lo, hi


def _build_cells(
    symbols: tuple[sp.Symbol, ...],
    polynomials: dict[str, sp.Expr],
    rows,
    samples,
) -> tuple[CadCell, ...]:
    cells = []
    for index, (row, sample) in enumerate(zip(rows, samples), start=1):
        bounds = tuple(
            CellBound(
                coordinate=sym.name,
                lower=BoundRoot(label=lo, polynomial=str(polynomials[lo]), root_index=n),
                upper=BoundRoot(label=hi, polynomial=str(polynomials[hi]), root_index=m),
            )
            for sym, (lo, n, hi, m) in zip(symbols, row)
        )
        cells.append(
            CadCell(
                index=index,
                coordinates=tuple(s.name for s in symbols),
                bounds=bounds,
                sample_point=sample,
            )
        )
    return tuple(cells)


@lru_cache(maxsize=None)
def cell_table(space: CellSpace) -> CellTable:
    space = CellSpace(space)
    if space is CellSpace.JOINT:
        symbols = (mu2z, mu3z, mu3y)
        polys, rows, samples = JOINT_POLYNOMIALS, _JOINT_ROWS, _JOINT_SAMPLES
    else:
        symbols = (q2, q3, q4)
        polys, rows, samples = NN_POLYNOMIALS, _NN_ROWS, _NN_SAMPLES
    return CellTable(
        space=space,
        symbols=symbols,
        polynomials=polys,
        cells=_build_cells(symbols, polys, rows, samples),
    )


@lru_cache(maxsize=None)
def _coefficient_functions(
    space: CellSpace, label: str, axis: int
) -> tuple[Callable[..., float], ...]:
    table = cell_table(space)
    var = table.symbols[axis]
    earlier = table.symbols[:axis]
    coeffs = sp.Poly(table.polynomials[label], var).all_coeffs()[::-1]
    _logger.debug("specialized %s in %s: %s", label, var, coeffs)
    return tuple(sp.lambdify(earlier, c, modules="math") for c in coeffs)


def joint_space_cells() -> list[CadCell]:
    """The three cells of the joint space in (mu2z, mu3z, mu3y)."""
    return list(cell_table(CellSpace.JOINT).cells)


def nn_aspect_cells() -> list[CadCell]:
    """The two cells of the NN aspect in (q2, q3, q4)."""
    return list(cell_table(CellSpace.NN).cells)
