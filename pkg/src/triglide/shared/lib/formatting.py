"""Number formatting and input parsing shared by the CLI, the API and exports."""

import json
import math
from enum import Enum
from typing import Any, Sequence

import numpy as np
from pydantic import BaseModel

from triglide.domain.errors import InputValidationError

SIGNIFICANT_DIGITS = 12


def round_sig(value: float, digits: int = SIGNIFICANT_DIGITS) -> float:
    if not math.isfinite(value):
        return value
    return float(f"{value:.{digits}g}") + 0.0


def format_number(value: float, digits: int = SIGNIFICANT_DIGITS) -> str:
    """``value`` with ``digits`` significant digits, '.' as decimal point."""
    return f"{round_sig(float(value), digits):.{digits}g}"


def to_jsonable(obj: Any) -> Any:
    """Plain JSON structure with every float rounded to 12 significant digits."""
    if isinstance(obj, BaseModel):
        return to_jsonable(obj.model_dump(mode="json"))
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return round_sig(float(obj))
    return obj


def dump_json(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=False)


def parse_vector(text: str, size: int, field: str) -> tuple[float, ...]:
    """Parse ``"a,b,c"`` or a JSON array into ``size`` floats.

    Raises:
        InputValidationError: Wrong count or a non-numeric component.
    """
    text = text.strip()
    try:
        if text.startswith("["):
            values = json.loads(text)
            if not isinstance(values, list):
                raise ValueError("not an array")
        else:
            values = text.split(",")
        parsed = tuple(float(v) for v in values)
    except (ValueError, TypeError) as e:
        raise InputValidationError(field, f"cannot parse {text!r}: {e}") from e
    if len(parsed) != size:
        raise InputValidationError(field, f"expected {size} values, got {len(parsed)}")
    if not all(math.isfinite(v) for v in parsed):
        raise InputValidationError(field, "values must be finite")
    return parsed


def parse_json_object(text: str, field: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputValidationError(field, f"malformed JSON: {e.msg}") from e
    if not isinstance(data, dict):
        raise InputValidationError(field, "expected a JSON object")
    return data


def format_row(values: Sequence[Any]) -> list[str]:
    """CSV cells: floats with 12 significant digits, everything else as text."""
    out = []
    for v in values:
        if isinstance(v, (bool, np.bool_)):
            out.append(str(bool(v)).lower())
        elif isinstance(v, (int, np.integer)):
            out.append(str(int(v)))
        elif isinstance(v, (float, np.floating)):
            out.append(format_number(v))
        elif v is None:
            out.append("")
        else:
            out.append(str(v.value if isinstance(v, Enum) else v))
    return out
