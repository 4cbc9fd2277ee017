"""Cell Model Routes"""

from typing import Annotated

from fastapi import APIRouter, Depends, HTTPException, status

from triglide.api.dependencies.services_dep import get_cell_service
from triglide.application.services import CellService
from triglide.domain.models import CellMembership, CellSpace
from triglide.shared.schemas import CellListResponse, ClassifyRequest

router = APIRouter(prefix="/cells", tags=["Cells"])


@router.get("/{space}", response_model=CellListResponse)
async def list_cells(
    space: CellSpace,
    service: Annotated[CellService, Depends(get_cell_service)],
):
    """Cells of the joint space or of the NN aspect"""

    return CellListResponse(
        space=space,
        coordinates=service.coordinates(space),
        cells=service.cells(space),
    )


@router.post("/classify", response_model=CellMembership)
async def classify(
    request: ClassifyRequest,
    service: Annotated[CellService, Depends(get_cell_service)],
):
    """Cell holding a point"""

    try:
        return service.classify(request.space, request.point)
    except ValueError as e:
        raise HTTPException(
            status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
            detail=str(e),
        ) from e
