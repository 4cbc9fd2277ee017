"""Geometry configuration loading."""

import json
import logging
import tomllib
from pathlib import Path
from typing import Optional

from pydantic import ValidationError

from triglide.domain.errors import InputValidationError
from triglide.domain.models.geometry import GeometryConfig

_logger = logging.getLogger(__name__)


def load_geometry(path: Optional[str | Path] = None) -> GeometryConfig:
    """Read ``{base_offset, platform_edge}`` from a JSON or TOML file.

    A TOML file may hold the values at top level or under ``[geometry]``.
    Without a path the defaults apply.
    """
    if path is None:
        return GeometryConfig()
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputValidationError("geometry", f"cannot read {path}: {e}") from e

    try:
        if path.suffix.lower() == ".toml":
            data = tomllib.loads(text)
        else:
            data = json.loads(text)
    except (tomllib.TOMLDecodeError, json.JSONDecodeError) as e:
        raise InputValidationError("geometry", f"cannot parse {path}: {e}") from e

    if isinstance(data, dict) and isinstance(data.get("geometry"), dict):
        data = data["geometry"]
    try:
        geometry = GeometryConfig.model_validate(data)
    except ValidationError as e:
        raise InputValidationError("geometry", str(e)) from e
    _logger.info("Loaded geometry from %s: %s", path, geometry.model_dump())
    return geometry
