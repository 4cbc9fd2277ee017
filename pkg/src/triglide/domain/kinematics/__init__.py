"""Closed-form kinematics of the 3-PPPS robot (moving frame at the corner median)."""
