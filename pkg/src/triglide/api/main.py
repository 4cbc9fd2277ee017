"""Main application entry point for API routes."""

import logging

from fastapi import FastAPI, Request, status
from fastapi.responses import JSONResponse

from triglide.api.routes.cells_route import router as cells_router
from triglide.api.routes.kinematics_route import router as kinematics_router
from triglide.api.routes.oracle_route import router as oracle_router
from triglide.domain.errors import TriglideError
from triglide.infrastructure.config.config import get_settings
from triglide.shared.schemas import HealthResponse

settings = get_settings()

_logger = logging.getLogger(__name__)


async def triglide_error_handler(request: Request, exc: TriglideError) -> JSONResponse:
    """Domain errors are client errors"""
    _logger.error("%s %s failed: %s", request.method, request.url.path, exc, exc_info=True)
    return JSONResponse(
        status_code=status.HTTP_400_BAD_REQUEST,
        content={"detail": str(exc)},
    )


def create_app() -> FastAPI:
    """Create and configure FastAPI application."""
    app = FastAPI(
        title=settings.app_name,
        description=settings.app_description,
        version=settings.app_version,
    )
    app.add_exception_handler(TriglideError, triglide_error_handler)

    app.include_router(kinematics_router, prefix=settings.api_prefix)
    app.include_router(cells_router, prefix=settings.api_prefix)
    app.include_router(oracle_router, prefix=settings.api_prefix)

    @app.get(f"{settings.api_prefix}/health", response_model=HealthResponse, tags=["Health"])
    async def health():
        """Liveness probe"""
        return HealthResponse(version=settings.app_version)

    return app


main_app = create_app()
