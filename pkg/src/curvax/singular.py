"""Singularities of curves and of the developable surfaces they generate.

Curve singularities are parameter values where |alpha'| vanishes; they are
located by scanning |alpha'|^2 on a grid and refining each local minimum by
bisection on its derivative (2 alpha'.alpha'', available exactly from jets).

Tangent-developable singularity type at a regular point:
  tau != 0            -> cuspidal edge along the curve
  tau = 0, tau' != 0  -> cuspidal cross-cap
  otherwise           -> degenerate (no criterion applies)

The singular locus of a curvature-axis surface is its edge of regression,
lambda* = -kappa'/(kappa^2 tau); where tau ~ 0 the degenerate direction
escapes to infinity and no finite lambda* exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import GeometryError, TooFewSamples
from .expr import CurveDef
from .frenet import _frame_jets, _scale
from .jets import eval_jet
from .ruled import regression_edge

TOL_SING = 1e-8  # absolute band on |alpha'| and |tau| for desk-scale curves


class SingularityKind(Enum):
    CUSPIDAL_EDGE = "CuspidalEdge"
    CUSPIDAL_CROSS_CAP = "CuspidalCrossCap"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class SingularityReport:
    curve_singular_params: list[float]
    surface_singular_samples: list[tuple[float, float, np.ndarray]]
    tangent_dev_class: list[tuple[float, SingularityKind]] = field(default_factory=list)


def _speed_sq_jet(c: CurveDef, t: float):
    d1 = eval_jet(c, t).shift(1)
    return d1.dot(d1)


def find_curve_singularities(
    c: CurveDef, t_range: tuple[float, float], n_grid: int = 64
) -> list[float]:
    """Parameter values in t_range where |alpha'| < 1e-8, refined to 1e-12."""
    if n_grid < 16:
        raise TooFewSamples(f"need at least 16 grid points, got {n_grid}")
    ts = np.linspace(t_range[0], t_range[1], n_grid)
    g = np.empty(n_grid)
    dg = np.empty(n_grid)
    for i, t in enumerate(ts):
        j = _speed_sq_jet(c, t)
        g[i], dg[i] = j.c[0], j.c[1]

    roots: list[float] = []
    # interior minima: derivative sign change - to +
    for i in range(n_grid - 1):
        if dg[i] < 0.0 <= dg[i + 1]:
            roots.append(_bisect_dg(c, ts[i], ts[i + 1]))
    # endpoints can be minima without a bracketing sign change
    if dg[0] >= 0.0:
        roots.append(float(ts[0]))
    if dg[-1] <= 0.0:
        roots.append(float(ts[-1]))

    out: list[float] = []
    for r in sorted(roots):
        j = _speed_sq_jet(c, r)
        if math.sqrt(max(j.c[0], 0.0)) < TOL_SING and not any(abs(r - o) < 1e-9 for o in out):
            out.append(float(r))
    return out


def _bisect_dg(c: CurveDef, lo: float, hi: float) -> float:
    """Bisection on d(|alpha'|^2)/dt to 1e-12 parameter accuracy."""
    flo = _speed_sq_jet(c, lo).c[1]
    for _ in range(200):
        if hi - lo <= 1e-12:
            break
        mid = 0.5 * (lo + hi)
        fm = _speed_sq_jet(c, mid).c[1]
        if (flo < 0.0) == (fm < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def classify_tangent_dev_singularity(c: CurveDef, t0: float) -> SingularityKind:
    """Type of the tangent-developable singularity along c at the regular point t0."""
    fj = _frame_jets(c, t0)  # raises SingularPoint/CurvatureVanishes if degenerate
    tau0 = fj.tau.value
    tau_s = fj.tau.c[1] / fj.speed.value
    if abs(tau0) > TOL_SING:
        return SingularityKind.CUSPIDAL_EDGE
    if abs(tau_s) > TOL_SING:
        return SingularityKind.CUSPIDAL_CROSS_CAP
    return SingularityKind.DEGENERATE


def surface_singular_locus(
    c: CurveDef, t_range: tuple[float, float], n_grid: int = 64
) -> list[tuple[float, float, np.ndarray]]:
    """(u, lambda*, point) samples of the regression edge of the axis surface.

    Grid points where the curve is singular, the frame is undefined, or tau is
    (numerically) zero contribute nothing: there the ruling carries no finite
    singular point.
    """
    if n_grid < 16:
        raise TooFewSamples(f"need at least 16 grid points, got {n_grid}")
    out = []
    for u in np.linspace(t_range[0], t_range[1], n_grid):
        try:
            fj = _frame_jets(c, u)
        except GeometryError:
            continue
        if abs(fj.tau.value) <= max(TOL_SING, 1e-9 * _scale(fj.speed.value)):
            continue
        lam_star, point = regression_edge(c, u)
        out.append((float(u), float(lam_star), point))
    return out


def singularity_report(
    c: CurveDef, t_range: tuple[float, float], n_grid: int = 64
) -> SingularityReport:
    """Full report: curve singularities, surface singular locus, and the
    tangent-developable classification at each regular grid point."""
    classes: list[tuple[float, SingularityKind]] = []
    for t in np.linspace(t_range[0], t_range[1], n_grid):
        try:
            classes.append((float(t), classify_tangent_dev_singularity(c, t)))
        except GeometryError:
            continue
    return SingularityReport(
        curve_singular_params=find_curve_singularities(c, t_range, n_grid),
        surface_singular_samples=surface_singular_locus(c, t_range, n_grid),
        tangent_dev_class=classes,
    )
