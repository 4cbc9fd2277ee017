"""Numerical solver adapters."""

from .newton_oracle import MultistartNewtonSolver

__all__ = ["MultistartNewtonSolver"]
