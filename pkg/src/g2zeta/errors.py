"""Exception types shared across the package."""

from __future__ import annotations


class EvalError(ArithmeticError):
    """Numeric evaluation failure at a specific point of the complex plane."""

    kind = "EvalError"

    def __init__(self, location: complex, detail: str = ""):
        self.location = complex(location)
        self.detail = detail
        super().__init__(f"{self.kind} at {self.location}: {detail}" if detail else f"{self.kind} at {self.location}")


class AtPole(EvalError):
    kind = "AtPole"


class PrecisionLoss(EvalError):
    kind = "PrecisionLoss"


class OutOfValidatedRange(EvalError):
    kind = "OutOfValidatedRange"


class ContourNearZero(RuntimeError):
    """A zero sits on (or too close to) a counting contour even after dilation."""


class NonIntegerWinding(RuntimeError):
    """Accumulated phase is too far from a multiple of 2*pi to trust the count."""


class NoConvergence(RuntimeError):
    """Root refinement exhausted its iteration budget."""
