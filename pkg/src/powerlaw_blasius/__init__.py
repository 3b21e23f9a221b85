"""Power-law boundary-layer similarity solutions via a non-iterative scaling transformation.

One initial-value integration in rescaled variables, one algebraic
rescaling, no iteration on the missing wall curvature -- plus an
independent shooting oracle to prove it.
"""

from .errors import (
    BoundaryLayerError,
    BracketError,
    ConvergenceError,
    CurvatureError,
    DomainError,
    NoPlateauError,
    RhsBlowUpError,
    ShotDivergedError,
    StateBlowUpError,
)
from .model import (
    ModelParameter,
    ReferenceRow,
    make_parameter,
    pohlhausen_skin_friction,
    reference_table,
    rhs,
)
from .runge_kutta import (
    CLASSIC_RK4,
    COOPER_VERNER_8,
    ButcherTableau,
    GridSpec,
    integrate,
    single_step,
)
from .shooting import ShootingConfig, matched_grid, shoot, solve_by_shooting
from .transform import (
    SolutionProfile,
    TransformResult,
    default_step,
    find_truncated_boundary,
    integrate_starred,
    recover_lambda,
    rescale_profile,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryLayerError",
    "BracketError",
    "ButcherTableau",
    "CLASSIC_RK4",
    "COOPER_VERNER_8",
    "ConvergenceError",
    "CurvatureError",
    "DomainError",
    "GridSpec",
    "ModelParameter",
    "NoPlateauError",
    "ReferenceRow",
    "RhsBlowUpError",
    "ShootingConfig",
    "ShotDivergedError",
    "SolutionProfile",
    "StateBlowUpError",
    "TransformResult",
    "default_step",
    "find_truncated_boundary",
    "integrate",
    "integrate_starred",
    "make_parameter",
    "matched_grid",
    "pohlhausen_skin_friction",
    "recover_lambda",
    "reference_table",
    "rescale_profile",
    "rhs",
    "shoot",
    "single_step",
    "solve",
    "solve_by_shooting",
]
