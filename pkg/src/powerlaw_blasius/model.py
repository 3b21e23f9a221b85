"""The extended Blasius model for power-law boundary layers.

Flow of a power-law fluid past a flat plate reduces, in similarity
variables, to the third-order problem

    P (P + 1) f''' + f (f'')^(2 - P) = 0,
    f(0) = f'(0) = 0,   f'(eta) -> 1  as  eta -> infinity,

with P the power-law index; P = 1 recovers the classical Blasius
equation f''' + f f'' / 2 = 0.  The equation and its wall conditions are
invariant under the one-parameter scaling group

    f* = lam * f,   eta* = lam**delta * eta,
    delta = (P - 2) / (2 P - 1),

which is what the non-iterative transformation in
:mod:`powerlaw_blasius.transform` exploits.

This module owns the parameter domain, the ODE right-hand side, the
closed-form Pohlhausen estimate of the wall shear, and the embedded
table of published skin-friction values used for regression.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import CurvatureError, DomainError

__all__ = [
    "ModelParameter",
    "ReferenceRow",
    "make_parameter",
    "rhs",
    "pohlhausen_skin_friction",
    "reference_table",
    "CURVATURE_NOISE",
]

#: Curvature more negative than this is an error; within [-noise, 0) it is
#: rounding debris near the asymptote and is treated as exactly zero.
CURVATURE_NOISE = 1e-12

#: For P > 1 the curvature reaches zero at a finite station (the profile
#: has compact support) and a fixed-step integrator overshoots the
#: touchdown by O(step**(1/(P-1))); observed ~2e-7 at P = 1.5 with step
#: 1e-3.  Undershoot within this window is projected back to zero, beyond
#: it integration aborts.
TOUCHDOWN_WINDOW = 1e-2


@dataclass(frozen=True)
class ModelParameter:
    """Validated power-law index with its derived scaling exponent."""

    p: float
    delta: float


@dataclass(frozen=True)
class ReferenceRow:
    """One row of published skin-friction values f''(0) for the index p.

    ``acrivos`` is the value reported by Acrivos, Shah & Petersen for the
    same problem, ``pohlhausen`` the momentum-integral estimate as
    published, and ``nonitm`` the published result of the non-iterative
    transformation method itself -- the regression target for this
    package.  Blank cells in the source table are ``None``.
    """

    p: float
    acrivos: float | None
    pohlhausen: float | None
    nonitm: float | None


_REFERENCE_TABLE = (
    ReferenceRow(0.05, 1.400938, 0.214892, 1.540752),
    ReferenceRow(0.1, 0.729857, 0.221302, 0.826478),
    ReferenceRow(0.2, 0.505623, 0.237305, 0.490342),
    ReferenceRow(0.3, 0.354290, 0.244046, 0.391515),
    ReferenceRow(0.4, None, None, 0.350396),
    ReferenceRow(0.5, 0.331200, 0.268324, None),
    ReferenceRow(0.6, None, None, 0.3239457),
    ReferenceRow(0.7, None, None, 0.3220337),
    ReferenceRow(0.8, None, None, 0.323544),
    ReferenceRow(0.9, None, None, 0.327139),
    ReferenceRow(1.0, 0.33206, 0.323, 0.332057),
    ReferenceRow(1.5, 0.363215, 0.384047, 0.398432),
)


def reference_table() -> tuple[ReferenceRow, ...]:
    """The embedded table of published reference values, verbatim."""
    return _REFERENCE_TABLE


def _validate_index(p: float) -> float:
    p = float(p)
    if not (p > 0.0) or not math.isfinite(p):
        raise DomainError(f"nonpositive index at P={p:g}")
    if p >= 2.0:
        raise DomainError(f"outside laminar range at P={p:g}")
    return p


def make_parameter(p: float) -> ModelParameter:
    """Validate the power-law index and attach its scaling exponent.

    Accepted domain: 0 < p < 2 with p != 0.5.  The exponent
    delta = (p - 2)/(2p - 1) is singular at p = 0.5 (no scaling group
    exists there), p = 0 kills the third-derivative term, and the flow
    is no longer an asymptotic laminar state for p >= 2; each exclusion
    raises :class:`DomainError` with its own message.
    """
    p = _validate_index(p)
    if p == 0.5:
        raise DomainError(f"singular scaling exponent at P={p:g}")
    return ModelParameter(p=p, delta=(p - 2.0) / (2.0 * p - 1.0))


def rhs(param: ModelParameter, y) -> tuple[float, float, float]:
    """Right-hand side of the model as a first-order system.

    For y = (f, f', f'') returns (f', f'', -f (f'')^(2-P) / (P (P+1))).
    Curvature in [-1e-12, 0) is clamped to zero; genuinely negative
    curvature raises :class:`CurvatureError` because the fractional
    power is not real there.
    """
    f, df, d2f = (float(v) for v in y)
    if d2f < 0.0:
        if d2f < -CURVATURE_NOISE:
            raise CurvatureError(f"negative curvature f''={d2f:.6g} at P={param.p:g}")
        d2f = 0.0
    return (df, d2f, -f * d2f ** (2.0 - param.p) / (param.p * (param.p + 1.0)))


@lru_cache(maxsize=None)
def ivp_rhs(param: ModelParameter):
    """Time-independent closure of :func:`rhs` for the integrators.

    Stage states inside a Runge-Kutta step may transiently undershoot
    zero curvature while crossing the P > 1 touchdown, so this closure
    clamps within ``TOUCHDOWN_WINDOW`` instead of the strict rounding
    window the public :func:`rhs` enforces.
    """
    coef = param.p * (param.p + 1.0)
    ex = 2.0 - param.p
    window = -TOUCHDOWN_WINDOW if param.p > 1.0 else -CURVATURE_NOISE

    def f(t: float, y: tuple) -> tuple[float, float, float]:
        fval, df, d2f = y
        if d2f < 0.0:
            if d2f < window:
                raise CurvatureError(f"negative curvature f''={d2f:.6g} at P={param.p:g}")
            d2f = 0.0
        return (df, d2f, -fval * d2f**ex / coef)

    return f


@lru_cache(maxsize=None)
def curvature_guard(param: ModelParameter):
    """Post-step projection keeping the stored curvature non-negative.

    Rounding-scale undershoot (and, for P > 1, the finite touchdown
    overshoot) is set to exactly zero, which also freezes the profile
    there since the curvature equation has f''' = 0 once f'' = 0.
    Anything more negative raises a curvature sign-loss error.
    """
    window = -TOUCHDOWN_WINDOW if param.p > 1.0 else -CURVATURE_NOISE

    def guard(t: float, y: tuple) -> tuple:
        d2f = y[2]
        if d2f < 0.0:
            if d2f < window:
                raise CurvatureError(
                    f"curvature sign loss at eta={t:.6g}: f''={d2f:.6g} (P={param.p:g})"
                )
            return (y[0], y[1], 0.0)
        return y

    return guard


def pohlhausen_skin_friction(p: float) -> float:
    """Momentum-integral estimate of f''(0), exactly as published:

        [ (39/280) * 1.5/(p+1) ] ** (p**2 / (p+1))

    Matches the published table at p = 1 (0.32321 vs 0.323) but disagrees
    strongly with it elsewhere (e.g. 0.99616 vs 0.214892 at p = 0.05).
    The formula is reproduced verbatim on purpose; the ``pohlhausen``
    CLI command reports the discrepancies instead of hiding them.
    """
    p = _validate_index(p)
    base = (39.0 / 280.0) * 1.5 / (p + 1.0)
    return base ** (p * p / (p + 1.0))
