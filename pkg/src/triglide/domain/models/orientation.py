"""Orientation value types."""

import math
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, model_serializer, model_validator

_COMPONENTS = ("q1", "q2", "q3", "q4")


class Quaternion(BaseModel):
    """Orientation quaternion, ``q1`` being the scalar part.

    Serializes as the JSON array ``[q1, q2, q3, q4]`` and accepts the same
    array (or a mapping with the four component names) on input.
    """

    model_config = ConfigDict(frozen=True)

    q1: float
    q2: float
    q3: float
    q4: float

    @model_validator(mode="before")
    @classmethod
    def from_sequence(cls, data: Any) -> Any:
        """Accept ``[q1, q2, q3, q4]`` in place of a mapping."""
        if isinstance(data, (list, tuple)):
            if len(data) != 4:
                raise ValueError("a quaternion has exactly four components")
            return dict(zip(_COMPONENTS, data))
        if isinstance(data, np.ndarray):
            return cls.from_sequence(data.tolist())
        return data

    @model_serializer
    def to_list(self) -> list[float]:
        return [self.q1, self.q2, self.q3, self.q4]

    @classmethod
    def of(cls, q1: float, q2: float, q3: float, q4: float) -> "Quaternion":
        """Positional constructor."""
        return cls(q1=q1, q2=q2, q3=q3, q4=q4)

    @classmethod
    def identity(cls) -> "Quaternion":
        return cls(q1=1.0, q2=0.0, q3=0.0, q4=0.0)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.q1, self.q2, self.q3, self.q4)

    def as_array(self) -> np.ndarray:
        return np.array(self.as_tuple(), dtype=float)

    def norm(self) -> float:
        return math.sqrt(self.q1**2 + self.q2**2 + self.q3**2 + self.q4**2)

    def __neg__(self) -> "Quaternion":
        return Quaternion(q1=-self.q1, q2=-self.q2, q3=-self.q3, q4=-self.q4)


class RotationMatrix(BaseModel):
    """3x3 direction-cosine matrix; columns are the moving-frame axes u, v, w."""

    model_config = ConfigDict(frozen=True)

    rows: tuple[
        tuple[float, float, float],
        tuple[float, float, float],
        tuple[float, float, float],
    ]

    @classmethod
    def from_array(cls, matrix: np.ndarray) -> "RotationMatrix":
        return cls(rows=tuple(tuple(float(v) for v in row) for row in matrix))

    def as_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=float)

    def entry(self, row: int, col: int) -> float:
        """1-based access, matching the usual matrix notation."""
        return self.rows[row - 1][col - 1]

    @property
    def u(self) -> np.ndarray:
        return self.as_array()[:, 0]

    @property
    def v(self) -> np.ndarray:
        return self.as_array()[:, 1]

    @property
    def w(self) -> np.ndarray:
        return self.as_array()[:, 2]
