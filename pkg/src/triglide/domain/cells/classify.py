"""Locate points in a cell table."""

import logging
from typing import Sequence

from triglide.domain.cells.polynomials import REFINE_TOL
from triglide.domain.cells.tables import CellTable, cell_table
from triglide.domain.errors import InputValidationError
from triglide.domain.models.cells import CadCell, CellMembership, CellSpace

_logger = logging.getLogger(__name__)

BOUNDARY_BAND = 1e-10

_INSIDE, _BOUNDARY, _OUTSIDE = "inside", "boundary", "outside"


def _locate(
    table: CellTable, cell: CadCell, point: Sequence[float], band: float, refine_tol: float
) -> str:
    state = _INSIDE
    for axis, value in enumerate(point):
        interval = table.interval(cell, axis, point, refine_tol)
        if interval is None:
            # bound roots merged or left the reals: only a closure point can get here
            return _BOUNDARY if state == _BOUNDARY else _OUTSIDE
        lo, hi = interval
        if value < lo - band or value > hi + band:
            return _OUTSIDE
        if abs(value - lo) <= band or abs(value - hi) <= band:
            state = _BOUNDARY
    return state


def classify_point(
    cells: CellSpace | str,
    point: Sequence[float],
    band: float = BOUNDARY_BAND,
    refine_tol: float = REFINE_TOL,
) -> CellMembership:
    """Which cell of ``cells`` holds ``point``.

    A point within ``band`` of any bound of a cell whose closure holds it is
    reported as boundary and assigned to no cell. Bound roots are refined to
    ``refine_tol``.
    """
    table = cell_table(CellSpace(cells))
    point = tuple(float(v) for v in point)
    if len(point) != len(table.coordinates):
        raise InputValidationError(
            "point", f"expected {len(table.coordinates)} coordinates, got {len(point)}"
        )
    interior: list[int] = []
    adjacent: list[int] = []
    for cell in table.cells:
        state = _locate(table, cell, point, band, refine_tol)
        if state == _INSIDE:
            interior.append(cell.index)
        elif state == _BOUNDARY:
            adjacent.append(cell.index)
    if len(interior) > 1:
        _logger.error("point %s is interior to cells %s", point, interior)
    if interior and not adjacent:
        return CellMembership(point=point, cell=interior[0])
    if adjacent or interior:
        return CellMembership(
            point=point, boundary=True, adjacent=tuple(sorted(adjacent + interior))
        )
    return CellMembership(point=point)
