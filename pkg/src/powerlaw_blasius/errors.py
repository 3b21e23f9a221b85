"""Exception types raised by the boundary-layer solvers."""


class BoundaryLayerError(Exception):
    """Base class for every error this package raises deliberately."""


class DomainError(BoundaryLayerError, ValueError):
    """Power-law index outside the range the model accepts."""


class CurvatureError(BoundaryLayerError, ValueError):
    """Curvature f'' went genuinely negative where the model needs it >= 0.

    The fractional power (f'')^(2-P) is real only for non-negative
    curvature; tiny negative values are rounding noise and get clamped,
    anything beyond the clamp window raises this.
    """


class RhsBlowUpError(BoundaryLayerError, ArithmeticError):
    """A stage evaluation of the ODE right-hand side was non-finite."""

    def __init__(self, t: float, stage: int):
        self.t = t
        self.stage = stage
        super().__init__(f"rhs blow-up at t={t:.6g} (stage {stage})")


class StateBlowUpError(BoundaryLayerError, ArithmeticError):
    """An integration state component left the trust region (divergence)."""

    def __init__(self, t: float, limit: float):
        self.t = t
        self.limit = limit
        super().__init__(f"state blow-up at t={t:.6g}: component exceeds {limit:.1e}")


class NoPlateauError(BoundaryLayerError, RuntimeError):
    """The truncated-boundary search found no plateau at the requested tolerance."""


class BracketError(BoundaryLayerError, ValueError):
    """Shooting bracket does not straddle a sign change of the residual."""


class ShotDivergedError(BoundaryLayerError, RuntimeError):
    """A shooting trajectory blew up before reaching the truncated boundary."""

    def __init__(self, guess: float, cause: Exception):
        self.guess = guess
        super().__init__(f"shot diverged for initial curvature guess {guess:.6g}: {cause}")


class ConvergenceError(BoundaryLayerError, RuntimeError):
    """Iteration budget exhausted before the residual tolerance was met."""
