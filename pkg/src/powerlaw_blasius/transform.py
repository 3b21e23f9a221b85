"""Non-iterative solution of the power-law Blasius problem.

The boundary-value problem is solved without any iteration on the
missing wall curvature:

1. integrate the same ODE as an initial-value problem in *starred*
   variables with f*(0) = f*'(0) = 0 and f*''(0) = 1 up to a truncated
   boundary eta*_inf;
2. read off the asymptotic slope s = f*'(eta*_inf) and recover the
   group parameter lam = s**(1/(1 - delta)), chosen so that the
   rescaled far-field slope is exactly one;
3. the missing wall curvature is f''(0) = lam**(2*delta - 1), and the
   full physical profile follows from the pointwise group action

       eta = lam**(-delta) eta*,   f   = lam**(-1)     f*,
       f'  = lam**(delta-1) f*',   f'' = lam**(2*delta-1) f*''.

Eliminating lam gives the cross-check f''(0) = s**(-3/(P+1)), which at
P = 1 is Topfer's classical rule f''(0) = s**(-3/2).

Note the exponent in step 2: deriving it from the group action (the
slope transforms with lam**(1-delta) and must land on 1) forces
1/(1 - delta).  The sign matters -- at P = 1 the alternative 1/(delta-1)
would yield f''(0) ~ 3.01 instead of 0.332057336215.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import model
from .errors import NoPlateauError
from .model import ModelParameter
from .runge_kutta import COOPER_VERNER_8, ButcherTableau, GridSpec, integrate

__all__ = [
    "SolutionProfile",
    "TransformResult",
    "default_step",
    "integrate_starred",
    "find_truncated_boundary",
    "recover_lambda",
    "rescale_profile",
    "solve",
]


@dataclass(frozen=True)
class SolutionProfile:
    """Uniform-grid samples of (f, f', f'') in one frame.

    ``frame`` is ``"starred"`` for the unit-curvature initial-value run
    and ``"physical"`` for the rescaled solution of the original
    problem.  ``values`` has one row (f, f', f'') per abscissa.
    """

    frame: str
    abscissae: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        if self.frame not in ("starred", "physical"):
            raise ValueError(f"unknown frame {self.frame!r}")
        eta = np.asarray(self.abscissae, dtype=float)
        vals = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "abscissae", eta)
        object.__setattr__(self, "values", vals)
        if eta.ndim != 1 or vals.shape != (eta.size, 3):
            raise ValueError("profile needs n abscissae and (n, 3) values")
        if eta[0] != 0.0:
            raise ValueError("profile must start at the wall (eta = 0)")
        spacing = np.diff(eta)
        h = spacing[0]
        # the final node is pinned to the grid endpoint, so spacing may
        # deviate by up to ~1e-12 of the domain length there
        if not (spacing > 0).all() or abs(spacing - h).max() > 1e-12 * max(eta[-1], h):
            raise ValueError("abscissae must increase with uniform spacing")
        if (vals[:, 2] < 0.0).any():
            raise ValueError("profile curvature must be non-negative everywhere")

    @property
    def spacing(self) -> float:
        return float(self.abscissae[1] - self.abscissae[0])

    @property
    def f(self) -> np.ndarray:
        return self.values[:, 0]

    @property
    def df(self) -> np.ndarray:
        return self.values[:, 1]

    @property
    def d2f(self) -> np.ndarray:
        return self.values[:, 2]


@dataclass(frozen=True)
class TransformResult:
    """Everything one non-iterative solve produces.

    ``lam`` is the scaling-group parameter, ``skin_friction`` the
    recovered missing initial condition f''(0), and the two profiles are
    the starred run and its physical rescaling.  ``truncated_boundary``
    is the starred endpoint actually used.
    """

    param: ModelParameter
    truncated_boundary: float
    starred_slope_at_infinity: float
    lam: float
    skin_friction: float
    starred: SolutionProfile
    physical: SolutionProfile


def default_step(p: float) -> float:
    """Grid step used when the caller does not pick one.

    The published benchmark settings use 1e-3; below p = 0.1 the
    coefficient 1/(P(P+1)) makes the wall region stiff enough that the
    default shrinks to 1e-4.
    """
    return 1e-4 if p <= 0.1 else 1e-3


def integrate_starred(
    param: ModelParameter,
    grid: GridSpec,
    tableau: ButcherTableau = COOPER_VERNER_8,
) -> SolutionProfile:
    """Integrate the model in starred variables from (0, 0, 1).

    The returned profile has f*''(0) = 1 exactly, non-negative
    curvature everywhere (the post-step guard projects touchdown
    overshoot to zero) and, for a converged boundary, a slope plateau
    near the endpoint.
    """
    eta, values = integrate(
        model.ivp_rhs(param),
        tableau,
        grid,
        (0.0, 0.0, 1.0),
        adjust_state=model.curvature_guard(param),
    )
    return SolutionProfile(frame="starred", abscissae=eta, values=values)


#: Hard cap on the truncated-boundary doubling search: start * 2**10.
_DOUBLING_CAP = 10

#: No curvature plateau measured in double precision can be certified
#: below this; requesting less raises NoPlateauError immediately.
_PLATEAU_FLOOR = 64.0 * math.ulp(1.0)


def find_truncated_boundary(
    param: ModelParameter,
    step: float,
    tol: float = 1e-8,
    start: float = 5.0,
    tableau: ButcherTableau = COOPER_VERNER_8,
) -> float:
    """Smallest endpoint in start, 2*start, 4*start, ... with |f*''| < tol.

    Operationalizes truncation "found by trial": the wall-shear decay
    |f*''(E)| < tol certifies that the slope has stopped changing, and
    hands back the first doubling candidate that satisfies it (for the
    Newtonian case with the defaults this lands on the benchmark
    boundary 10).  The integration continues across candidates instead
    of restarting, which is bit-identical for a fixed-step scheme.

    Raises :class:`NoPlateauError` when the tolerance lies below the
    double-precision floor or the doubling cap (2**10 * start) is
    exhausted.
    """
    if not tol > 0.0:
        raise ValueError("tolerance must be positive")
    if not start >= 10.0 * step:
        raise ValueError("start must be at least 10 steps")
    if tol < _PLATEAU_FLOOR:
        raise NoPlateauError(
            f"no plateau: tolerance {tol:g} is below the attainable rounding floor {_PLATEAU_FLOOR:.3g}"
        )
    rhs = model.ivp_rhs(param)
    guard = model.curvature_guard(param)
    state = (0.0, 0.0, 1.0)
    reached = 0.0
    endpoint = float(start)
    for _ in range(_DOUBLING_CAP + 1):
        # grid validity is enforced by the caller-facing GridSpec below;
        # the continuation segments only need the step count
        n_more = round((endpoint - reached) / step)
        _, seg = integrate(rhs, tableau, GridSpec(step, n_more * step), state, adjust_state=guard)
        state = tuple(seg[-1])
        reached = endpoint
        if abs(state[2]) < tol:
            GridSpec(step, endpoint)
            return endpoint
        endpoint *= 2.0
    raise NoPlateauError(
        f"no plateau: |f*''| stayed above {tol:g} up to {reached:g} (P={param.p:g})"
    )


def recover_lambda(param: ModelParameter, starred_slope: float) -> float:
    """Group parameter from the starred asymptotic slope.

    lam = slope**(1/(1-delta)) = slope**((2P-1)/(P+1)); this is the
    unique scaling that maps the starred far-field slope onto the
    physical boundary condition f'(inf) = 1.
    """
    if not starred_slope > 0.0:
        raise ValueError(f"starred slope must be positive, got {starred_slope!r}")
    return starred_slope ** (1.0 / (1.0 - param.delta))


def rescale_profile(starred: SolutionProfile, param: ModelParameter, lam: float) -> SolutionProfile:
    """Map a starred profile through the group action into physical variables.

    Abscissae scale with lam**(-delta) and the columns (f, f', f'') with
    lam**(-1), lam**(delta-1), lam**(2*delta-1); lam = 1 is the identity
    apart from the frame tag.  Uniform spacing is preserved.
    """
    if starred.frame != "starred":
        raise ValueError("rescale_profile expects a starred-frame profile")
    if not lam > 0.0:
        raise ValueError(f"lam must be positive, got {lam!r}")
    d = param.delta
    eta = starred.abscissae * lam**-d
    values = starred.values * np.array([lam**-1.0, lam ** (d - 1.0), lam ** (2.0 * d - 1.0)])
    return SolutionProfile(frame="physical", abscissae=eta, values=values)


def solve(
    param: ModelParameter,
    grid: GridSpec | None = None,
    *,
    step: float | None = None,
    eta_inf: float | str | None = None,
    boundary_tol: float = 1e-8,
    boundary_start: float = 5.0,
    tableau: ButcherTableau = COOPER_VERNER_8,
) -> TransformResult:
    """Run the full non-iterative pipeline for one parameter value.

    Either pass an explicit ``grid``, or let ``step``/``eta_inf`` build
    one (defaults: step from :func:`default_step`, endpoint 10.0, the
    published benchmark settings).  ``eta_inf="auto"`` invokes
    :func:`find_truncated_boundary` with ``boundary_tol`` and
    ``boundary_start``.
    """
    if grid is None:
        h = default_step(param.p) if step is None else float(step)
        if eta_inf == "auto":
            endpoint = find_truncated_boundary(
                param, h, tol=boundary_tol, start=boundary_start, tableau=tableau
            )
        else:
            endpoint = 10.0 if eta_inf is None else float(eta_inf)
        grid = GridSpec(h, endpoint)
    elif step is not None or eta_inf is not None:
        raise ValueError("pass either grid or step/eta_inf, not both")

    starred = integrate_starred(param, grid, tableau=tableau)
    slope = float(starred.df[-1])
    lam = recover_lambda(param, slope)
    skin = lam ** (2.0 * param.delta - 1.0)
    physical = rescale_profile(starred, param, lam)
    return TransformResult(
        param=param,
        truncated_boundary=grid.endpoint,
        starred_slope_at_infinity=slope,
        lam=lam,
        skin_friction=skin,
        starred=starred,
        physical=physical,
    )
