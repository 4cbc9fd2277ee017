"""Domain errors.

All errors derive from ``ValueError`` so callers that already guard numeric
input with ``except ValueError`` keep working.
"""


class TriglideError(ValueError):
    """Base class for every error raised by the kinematics engine."""


class DegenerateOrientationError(TriglideError):
    """The zero quaternion carries no orientation."""

    def __init__(self, message: str = "degenerate orientation"):
        super().__init__(message)


class PoseJointMismatchError(TriglideError):
    """A pose and a joint vector do not satisfy the constraint equations."""

    def __init__(self, residual: float, tolerance: float):
        self.residual = residual
        self.tolerance = tolerance
        super().__init__(
            f"pose/joint mismatch: residual {residual:.3e} exceeds {tolerance:.1e}"
        )


class DegeneratePolynomialError(TriglideError):
    """Root isolation was asked for the zero polynomial."""

    def __init__(self, message: str = "degenerate polynomial"):
        super().__init__(message)


class SingularLocusError(TriglideError):
    """The x-quadratic collapsed to a constant equation."""

    def __init__(self, message: str = "singular locus"):
        super().__init__(message)


class InputValidationError(TriglideError):
    """Malformed user input; ``field`` names the offending value."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"invalid {field}: {message}")
