"""Aspect classification types."""

from enum import Enum

from pydantic import BaseModel, ConfigDict


class AspectLabel(str, Enum):
    """Signs of the two determinant factors (f1, f2)."""

    PP = "PP"
    PN = "PN"
    NP = "NP"
    NN = "NN"
    SINGULAR = "Singular"


class AspectReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: AspectLabel
    f1: float
    f2: float
    det: float
    near_singular: bool = False
