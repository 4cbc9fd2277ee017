"""Oracle Routes"""

import logging
from typing import Annotated

from fastapi import APIRouter, Depends

from triglide.api.dependencies.services_dep import get_oracle_service
from triglide.application.services import OracleService
from triglide.domain.models import MatchReport, SolveReport
from triglide.shared.schemas import OracleRequest

router = APIRouter(prefix="/oracle", tags=["Oracle"])

_logger = logging.getLogger(__name__)


@router.post("", response_model=SolveReport)
async def solve(
    request: OracleRequest,
    service: Annotated[OracleService, Depends(get_oracle_service)],
):
    """Multistart Newton roots of the reduced system"""

    return service.solve(request.mu, request.starts, request.seed)


@router.post("/compare", response_model=MatchReport)
async def compare(
    request: OracleRequest,
    service: Annotated[OracleService, Depends(get_oracle_service)],
):
    """Set comparison of the oracle against the closed-form chain"""

    report = service.compare(request.mu, request.starts, request.seed)
    if not report.matched:
        _logger.warning("closed form and oracle disagree at %s", request.mu.as_tuple())
    return report
