"""Ruled surfaces R(u, lambda) = x(u) + lambda*y(u) and their analysis.

Directors are stored normalized (||y|| = 1), so the lambda of any external
closed form may differ from ours by a sign and an affine shift; comparisons
against closed forms are therefore made per ruling as point sets.

The developability residual det(x', y, y') is the certifying quantity: it
vanishes identically on cylinders, cones, tangent developables, and on every
curvature-axis surface.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from .errors import CylindricalRuling, SurfaceSingularPoint, TorsionVanishes, ZeroVector
from .expr import CurveDef
from .frenet import (
    EPS_REG,
    EPS_TAU,
    DerivedCurve,
    _center_jets,
    _frame_jets,
    _scale,
    _tangent_jets,
)
from .jets import JetVec3, eval_jet


class SurfaceKind(Enum):
    CURVATURE_AXIS = "curvature-axis"
    TANGENT_DEV = "tangent-developable"
    CYLINDER = "cylinder"
    CONE = "cone"
    CUSTOM = "custom"


@dataclass(frozen=True)
class RuledSurface:
    base: DerivedCurve
    director: DerivedCurve  # unit length for all u
    kind: SurfaceKind
    u_domain: tuple[float, float]


_DEFAULT_DOMAIN = (0.0, 2.0 * math.pi)


# --- constructors -----------------------------------------------------------


def curvature_axis_surface(
    c: CurveDef, u_domain: tuple[float, float] = _DEFAULT_DOMAIN
) -> RuledSurface:
    """Surface swept by the curvature axis: base = osculating center, director = binormal."""

    def base_rows(u: float) -> np.ndarray:
        return _center_jets(_frame_jets(c, u)).rows(2)

    def director_rows(u: float) -> np.ndarray:
        return _frame_jets(c, u).B.rows(2)

    return RuledSurface(
        DerivedCurve(base_rows), DerivedCurve(director_rows), SurfaceKind.CURVATURE_AXIS, u_domain
    )


def tangent_developable(
    c: CurveDef, u_domain: tuple[float, float] = _DEFAULT_DOMAIN
) -> RuledSurface:
    """Surface swept by the tangent lines of c."""

    def base_rows(u: float) -> np.ndarray:
        return eval_jet(c, u).rows(2)

    def director_rows(u: float) -> np.ndarray:
        tj = _tangent_jets(c, u)
        return tj.T.rows(2)

    return RuledSurface(
        DerivedCurve(base_rows), DerivedCurve(director_rows), SurfaceKind.TANGENT_DEV, u_domain
    )


def generalized_cylinder(
    c: CurveDef, e, u_domain: tuple[float, float] = _DEFAULT_DOMAIN
) -> RuledSurface:
    """Rulings through c(u), all parallel to the fixed vector e."""
    e = np.asarray(e, dtype=float)
    n = float(np.linalg.norm(e))
    if n <= 1e-300:
        raise ZeroVector("cylinder direction has zero length")
    unit = e / n
    zero = np.zeros(3)
    director_rows = np.array([unit, zero, zero])

    def base_rows(u: float) -> np.ndarray:
        return eval_jet(c, u).rows(2)

    return RuledSurface(
        DerivedCurve(base_rows),
        DerivedCurve(lambda u: director_rows),
        SurfaceKind.CYLINDER,
        u_domain,
    )


def cone_surface(
    apex, dir_curve: CurveDef, u_domain: tuple[float, float] = _DEFAULT_DOMAIN
) -> RuledSurface:
    """Rulings through a fixed apex with directions dir_curve(u) (normalized)."""
    apex = np.asarray(apex, dtype=float)
    zero = np.zeros(3)
    apex_rows = np.array([apex, zero, zero])

    def director_rows(u: float) -> np.ndarray:
        jv = eval_jet(dir_curve, u)
        if math.sqrt(jv.dot(jv).value) <= 1e-300:
            raise ZeroVector(f"cone direction curve vanishes at u={u}")
        return jv.normalized().rows(2)

    return RuledSurface(
        DerivedCurve(lambda u: apex_rows),
        DerivedCurve(director_rows),
        SurfaceKind.CONE,
        u_domain,
    )


def ruled_surface_from_curves(
    base: CurveDef,
    director: CurveDef,
    u_domain: tuple[float, float] = _DEFAULT_DOMAIN,
    kind: SurfaceKind = SurfaceKind.CUSTOM,
) -> RuledSurface:
    """General ruled surface from two parsed curves; the director is normalized."""

    def director_rows(u: float) -> np.ndarray:
        jv = eval_jet(director, u)
        if math.sqrt(jv.dot(jv).value) <= 1e-300:
            raise ZeroVector(f"director curve vanishes at u={u}")
        return jv.normalized().rows(2)

    return RuledSurface(
        DerivedCurve.from_curve_def(base), DerivedCurve(director_rows), kind, u_domain
    )


def custom_surface(
    base_fn: Callable[[float], np.ndarray],
    director_fn: Callable[[float], np.ndarray],
    u_domain: tuple[float, float] = _DEFAULT_DOMAIN,
) -> RuledSurface:
    """Ruled surface from plain point callables; derivatives via finite differences,
    director normalized (with consistently transformed derivatives)."""
    raw = DerivedCurve.from_point_fn(director_fn)

    def director_rows(u: float) -> np.ndarray:
        p, d1, d2 = raw.rows(u)
        r = float(np.linalg.norm(p))
        if r <= 1e-300:
            raise ZeroVector(f"director vanishes at u={u}")
        r1 = float(p @ d1) / r
        r2 = (float(d1 @ d1) + float(p @ d2) - r1 * r1) / r
        y = p / r
        y1 = d1 / r - p * (r1 / r**2)
        y2 = d2 / r - 2.0 * d1 * (r1 / r**2) + p * (2.0 * r1 * r1 / r**3 - r2 / r**2)
        return np.array([y, y1, y2])

    return RuledSurface(
        DerivedCurve.from_point_fn(base_fn), DerivedCurve(director_rows), SurfaceKind.CUSTOM, u_domain
    )


def transformed(S: RuledSurface, rotation, translation) -> RuledSurface:
    """Apply a rigid motion; derivative rows map exactly under the rotation."""
    R = np.asarray(rotation, dtype=float)
    tr = np.asarray(translation, dtype=float)

    def base_rows(u: float) -> np.ndarray:
        rows = S.base.rows(u) @ R.T
        rows[0] += tr
        return rows

    def director_rows(u: float) -> np.ndarray:
        return S.director.rows(u) @ R.T

    return RuledSurface(DerivedCurve(base_rows), DerivedCurve(director_rows), S.kind, S.u_domain)


# --- analysis ---------------------------------------------------------------


def eval_surface(S: RuledSurface, u: float, lam: float) -> np.ndarray:
    """R(u, lambda) = x(u) + lambda*y(u)."""
    return S.base.point(u) + lam * S.director.point(u)


def developability_residual(S: RuledSurface, u: float) -> float:
    """Signed det(x'(u), y(u), y'(u)); (numerically) zero iff locally developable."""
    x1 = S.base.derivative(u, 1)
    y = S.director.point(u)
    y1 = S.director.derivative(u, 1)
    return float(np.linalg.det(np.array([x1, y, y1])))


def gaussian_curvature(S: RuledSurface, u: float, lam: float) -> float:
    """K from the fundamental forms; derivatives exact in lambda, jets in u.

    For a ruled surface R_{lambda,lambda} = 0, so K = -M^2/(EG - F^2) <= 0.
    """
    xp, x1, x2 = S.base.rows(u)
    y, y1, y2 = S.director.rows(u)
    r_u = x1 + lam * y1
    r_l = y
    r_uu = x2 + lam * y2
    r_ul = y1
    cr = np.cross(r_u, r_l)
    n2 = float(np.linalg.norm(cr))
    scale = max(1.0, float(np.linalg.norm(r_u)) * float(np.linalg.norm(r_l)))
    if n2 <= EPS_REG * scale:
        raise SurfaceSingularPoint(f"surface singular at (u, lambda) = ({u}, {lam})")
    m = cr / n2
    E = float(r_u @ r_u)
    F = float(r_u @ r_l)
    G = float(r_l @ r_l)
    L = float(r_uu @ m)
    M = float(r_ul @ m)
    N = 0.0
    return (L * N - M * M) / (E * G - F * F)


def gaussian_curvature_numeric(
    point_fn: Callable[[float, float], np.ndarray], u: float, v: float, h: float = 2.5e-4
) -> float:
    """Brute-force K of an arbitrary parametric surface via central differences.

    Independent of the ruled-surface structure; used to validate the jet-based
    path (sphere patch sanity check) and as an oracle for non-developable cases.
    """
    f = lambda a, b: np.asarray(point_fn(a, b), dtype=float)
    r_u = (f(u + h, v) - f(u - h, v)) / (2.0 * h)
    r_v = (f(u, v + h) - f(u, v - h)) / (2.0 * h)
    r_uu = (f(u + h, v) - 2.0 * f(u, v) + f(u - h, v)) / (h * h)
    r_vv = (f(u, v + h) - 2.0 * f(u, v) + f(u, v - h)) / (h * h)
    r_uv = (f(u + h, v + h) - f(u + h, v - h) - f(u - h, v + h) + f(u - h, v - h)) / (4.0 * h * h)
    cr = np.cross(r_u, r_v)
    n2 = float(np.linalg.norm(cr))
    if n2 <= 1e-12:
        raise SurfaceSingularPoint(f"surface singular at ({u}, {v})")
    m = cr / n2
    E, F, G = float(r_u @ r_u), float(r_u @ r_v), float(r_v @ r_v)
    L, M, N = float(r_uu @ m), float(r_uv @ m), float(r_vv @ m)
    return (L * N - M * M) / (E * G - F * F)


def striction_curve(S: RuledSurface, u: float) -> np.ndarray:
    """Striction point on ruling u: x - (<x', y'>/<y', y'>) y."""
    x, x1, _ = S.base.rows(u)
    y, y1, _ = S.director.rows(u)
    yy = float(y1 @ y1)
    if math.sqrt(yy) <= 1e-9:
        raise CylindricalRuling(f"director derivative vanishes at u={u}")
    return x - (float(x1 @ y1) / yy) * y


def regression_edge(c: CurveDef, u: float) -> tuple[float, np.ndarray]:
    """Edge of regression of the curvature-axis surface of c.

    lambda* = -kappa'/(kappa^2 tau) places the osculating-sphere center on the
    ruling; there |R_u x R_lambda| vanishes.
    """
    fj = _frame_jets(c, u)
    kappa0 = fj.kappa.value
    tau0 = fj.tau.value
    if abs(tau0) <= EPS_TAU * _scale(fj.speed.value):
        raise TorsionVanishes(f"tau({u}) vanishes; regression edge escapes to infinity")
    kappa_s = fj.kappa.c[1] / fj.speed.value
    lam_star = -kappa_s / (kappa0 * kappa0 * tau0)
    point = _center_jets(fj).values() + lam_star * fj.B.values()
    return lam_star, point
