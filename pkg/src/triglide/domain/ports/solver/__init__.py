"""Constraint Solver Ports Package"""

from .solver_port import ConstraintSolverPort

__all__ = ["ConstraintSolverPort"]
