"""Shared exception types."""


class CapacityError(RuntimeError):
    """Requested size exceeds a documented table or brute-force limit."""


class PoleError(ArithmeticError):
    """A weight denominator vanished for the given deformation parameter."""
