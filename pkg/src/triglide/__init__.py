"""Kinematics and workspace analysis of the 3-PPPS parallel robot."""

__version__ = "0.1.0"
