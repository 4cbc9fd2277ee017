"""Configuration module for the application settings."""

from functools import lru_cache
from typing import Optional

from pydantic import Field, field_validator, model_validator
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """This class uses Pydantic to load settings from environment variables."""

    app_name: str = Field("triglide", alias="APP_NAME")
    app_description: str = Field(
        "Kinematics and cell analysis of the 3-PPPS parallel robot",
        alias="APP_DESCRIPTION",
    )
    app_version: str = Field("0.1.0", alias="APP_VERSION")
    api_prefix: str = Field("", alias="API_PREFIX")
    log_level: str = Field("WARNING", alias="LOG_LEVEL")

    unit_norm_tol: float = Field(1e-12, gt=0, alias="TRIGLIDE_UNIT_NORM_TOL")
    consistency_tol: float = Field(1e-8, gt=0, alias="TRIGLIDE_CONSISTENCY_TOL")
    dkp_residual_tol: float = Field(1e-9, gt=0, alias="TRIGLIDE_DKP_RESIDUAL_TOL")
    coupling_tol: float = Field(1e-6, gt=0, alias="TRIGLIDE_COUPLING_TOL")
    root_merge_tol: float = Field(1e-10, gt=0, alias="TRIGLIDE_ROOT_MERGE_TOL")
    singular_band: float = Field(1e-10, ge=0, alias="TRIGLIDE_SINGULAR_BAND")
    near_singular_band: float = Field(1e-3, ge=0, alias="TRIGLIDE_NEAR_SINGULAR_BAND")
    boundary_band: float = Field(1e-10, ge=0, alias="TRIGLIDE_BOUNDARY_BAND")
    root_refine_tol: float = Field(1e-12, gt=0, alias="TRIGLIDE_ROOT_REFINE_TOL")
    dedup_tol: float = Field(1e-6, gt=0, alias="TRIGLIDE_DEDUP_TOL")
    tol: Optional[float] = Field(default=None, ge=0, alias="TRIGLIDE_TOL")

    newton_max_iter: int = Field(100, ge=1, alias="TRIGLIDE_NEWTON_MAX_ITER")
    newton_max_halvings: int = Field(30, ge=0, alias="TRIGLIDE_NEWTON_MAX_HALVINGS")
    newton_tol: float = Field(1e-12, gt=0, alias="TRIGLIDE_NEWTON_TOL")
    oracle_residual_tol: float = Field(1e-10, gt=0, alias="TRIGLIDE_ORACLE_RESIDUAL_TOL")
    oracle_starts: int = Field(2000, ge=1, alias="TRIGLIDE_ORACLE_STARTS")
    oracle_seed: int = Field(0, alias="TRIGLIDE_ORACLE_SEED")

    geometry_file: Optional[str] = Field(default=None, alias="TRIGLIDE_GEOMETRY_FILE")

    @field_validator("tol", "geometry_file", mode="before")
    @classmethod
    def empty_string_to_none(cls, v):
        """Convert empty string to None for optional values."""
        if v == "" or v is None:
            return None
        return v

    @model_validator(mode="after")
    def apply_tol_override(self) -> "Settings":
        """``TRIGLIDE_TOL`` replaces both classification bands."""
        if self.tol is not None:
            self.singular_band = self.tol
            self.boundary_band = self.tol
        return self

    model_config = {
        "case_sensitive": True,
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "extra": "ignore",
        "populate_by_name": True,
    }


@lru_cache
def get_settings() -> Settings:
    """
    Get application settings from environment variables.
    Uses LRU cache to avoid loading settings multiple times.
    """
    return Settings()
