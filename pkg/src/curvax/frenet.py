"""Frenet-Serret apparatus and the loci derived from it.

All formulas are general-parameter: with a = alpha(t),

    T = a'/|a'|          B = (a' x a'')/|a' x a''|       N = B x T
    kappa = |a' x a''| / |a'|^3
    tau   = det(a', a'', a''') / |a' x a''|^2

kappa' and tau' are reported as arc-length derivatives (parameter derivative
divided by speed), which is what every downstream formula expects; callers
never need to know the parameterization. Everything is computed through
order-4 jets, so the derivative of kappa and tau come out of the same
arithmetic rather than finite differences.

Regularity thresholds are relative to max(1, |a'|^3) so that tiny and huge
curves behave alike.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import CurvatureVanishes, DomainError, SingularPoint, TorsionVanishes
from .expr import CurveDef
from .jets import Jet, JetVec3, eval_jet, jet_cos, jet_sin, jet_sqrt
from .quadrature import CumulativeIntegral

EPS_REG = 1e-9
EPS_TAU = 1e-9


@dataclass(frozen=True)
class FrenetData:
    """Frame and scalar invariants at a single parameter value.

    kappa_s and tau_s are d(kappa)/ds and d(tau)/ds with s = arc length.
    """

    tangent: np.ndarray
    normal: np.ndarray
    binormal: np.ndarray
    kappa: float
    tau: float
    kappa_s: float
    tau_s: float
    speed: float


@dataclass(frozen=True)
class Line3:
    origin: np.ndarray
    direction: np.ndarray  # unit


class DerivedCurve:
    """A point-valued function of one real parameter with derivatives to order 2.

    Wraps a callable returning a (3, 3) array whose rows are the point and its
    first and second parameter derivatives.
    """

    def __init__(self, rows_fn: Callable[[float], np.ndarray]):
        self._rows_fn = rows_fn

    def rows(self, t: float) -> np.ndarray:
        return self._rows_fn(t)

    def point(self, t: float) -> np.ndarray:
        return self.rows(t)[0]

    def derivative(self, t: float, order: int = 1) -> np.ndarray:
        return self.rows(t)[order]

    def __call__(self, t: float) -> np.ndarray:
        return self.rows(t)[0]

    @staticmethod
    def from_curve_def(c: CurveDef) -> "DerivedCurve":
        return DerivedCurve(lambda t: eval_jet(c, t).rows(2))

    @staticmethod
    def from_point_fn(fn: Callable[[float], np.ndarray]) -> "DerivedCurve":
        """Central finite differences for point functions without jet access.

        First derivative uses h = 1e-6*max(1,|t|); the second uses a coarser
        1.2e-4*max(1,|t|) because 1e-6 under an h^2 denominator would amplify
        roundoff to ~1e-4.
        """

        def rows(t: float) -> np.ndarray:
            h1 = 1e-6 * max(1.0, abs(t))
            h2 = 1.2e-4 * max(1.0, abs(t))
            p = np.asarray(fn(t), dtype=float)
            d1 = (np.asarray(fn(t + h1)) - np.asarray(fn(t - h1))) / (2.0 * h1)
            d2 = (np.asarray(fn(t + h2)) - 2.0 * p + np.asarray(fn(t - h2))) / (h2 * h2)
            return np.array([p, d1, d2])

        return DerivedCurve(rows)


# --- jet-level machinery ----------------------------------------------------


@dataclass(frozen=True)
class _TangentJets:
    alpha: JetVec3  # orders 0..4
    d1: JetVec3  # alpha', valid to order 3
    speed: Jet  # valid to order 3
    T: JetVec3  # valid to order 3


@dataclass(frozen=True)
class _FrameJets(_TangentJets):
    d2: JetVec3  # valid to order 2
    cross: JetVec3  # a' x a'', valid to order 2
    cross_norm: Jet  # valid to order 2
    kappa: Jet  # valid to order 2
    tau: Jet  # valid to order 1
    B: JetVec3  # valid to order 2
    N: JetVec3  # valid to order 2


def _scale(speed0: float) -> float:
    return max(1.0, speed0**3)


def _tangent_jets(c: CurveDef, t: float) -> _TangentJets:
    alpha = eval_jet(c, t)
    d1 = alpha.shift(1)
    v2 = d1.dot(d1)
    speed0 = math.sqrt(max(v2.value, 0.0))
    if speed0 <= EPS_REG * _scale(speed0):
        raise SingularPoint(f"|alpha'({t})| vanishes (curve singular point)")
    speed = jet_sqrt(v2)
    return _TangentJets(alpha, d1, speed, d1.over(speed))


def _frame_jets(c: CurveDef, t: float) -> _FrameJets:
    tj = _tangent_jets(c, t)
    d2 = tj.alpha.shift(2)
    cross = tj.d1.cross(d2)
    c2 = cross.dot(cross)
    crn0 = math.sqrt(max(c2.value, 0.0))
    if crn0 <= EPS_REG * _scale(tj.speed.value):
        raise CurvatureVanishes(f"|alpha' x alpha''|({t}) vanishes (frame undefined)")
    cross_norm = jet_sqrt(c2)
    kappa = cross_norm / (tj.speed * tj.speed * tj.speed)
    d3 = tj.alpha.shift(3)
    tau = cross.dot(d3) / c2
    B = cross.over(cross_norm)
    N = B.cross(tj.T)
    return _FrameJets(tj.alpha, tj.d1, tj.speed, tj.T, d2, cross, cross_norm, kappa, tau, B, N)


# --- operations -------------------------------------------------------------


def frenet_apparatus(c: CurveDef, t: float) -> FrenetData:
    """Frame vectors, kappa, tau and their arc-length derivatives at t."""
    fj = _frame_jets(c, t)
    speed0 = fj.speed.value
    t_vec = fj.T.values()
    n_vec = fj.N.values()
    b_vec = np.cross(t_vec, n_vec)
    return FrenetData(
        tangent=t_vec,
        normal=n_vec,
        binormal=b_vec,
        kappa=fj.kappa.value,
        tau=fj.tau.value,
        kappa_s=fj.kappa.c[1] / speed0,
        tau_s=fj.tau.c[1] / speed0,
        speed=speed0,
    )


def _center_jets(fj: _FrameJets) -> JetVec3:
    """Osculating-circle center alpha + (1/kappa) N as jets (valid to order 2)."""
    inv_kappa = Jet.constant(1.0) / fj.kappa
    return fj.alpha + fj.N.scale(inv_kappa)


def osculating_center(c: CurveDef, t: float) -> np.ndarray:
    """Center of the osculating circle: alpha + (1/kappa) n."""
    return _center_jets(_frame_jets(c, t)).values()


def osculating_sphere_center(c: CurveDef, t: float) -> np.ndarray:
    """Center of the osculating sphere: alpha + (1/kappa) n - (kappa'/(kappa^2 tau)) b."""
    fj = _frame_jets(c, t)
    kappa0 = fj.kappa.value
    tau0 = fj.tau.value
    if abs(tau0) <= EPS_TAU * _scale(fj.speed.value):
        raise TorsionVanishes(f"tau({t}) vanishes; osculating sphere center undefined")
    kappa_s = fj.kappa.c[1] / fj.speed.value
    lam = -kappa_s / (kappa0 * kappa0 * tau0)
    return _center_jets(fj).values() + lam * fj.B.values()


def curvature_axis(c: CurveDef, t: float) -> Line3:
    """The line alpha + (1/kappa) n + lambda b through the osculating center."""
    fj = _frame_jets(c, t)
    return Line3(origin=_center_jets(fj).values(), direction=fj.B.values())


# --- cumulative integrals along the curve -----------------------------------


@lru_cache(maxsize=64)
def _arc_length_table(c: CurveDef, t0: float, t1: float, n: int = 1024) -> CumulativeIntegral:
    def speed(t: float) -> float:
        d1 = eval_jet(c, t).shift(1)
        return math.sqrt(d1.dot(d1).value)

    return CumulativeIntegral(speed, t0, t1, n)


@lru_cache(maxsize=64)
def _torsion_integral_table(c: CurveDef, t0: float, t1: float, n: int = 1024) -> CumulativeIntegral:
    def tau_ds(t: float) -> float:
        fj = _frame_jets(c, t)
        return fj.tau.value * fj.speed.value

    return CumulativeIntegral(tau_ds, t0, t1, n)


def arc_length(c: CurveDef, t: float, t_range: tuple[float, float] = (0.0, 2.0 * math.pi)) -> float:
    """Cumulative arc length from the start of t_range."""
    return _arc_length_table(c, t_range[0], t_range[1]).value(t)


def involute(
    c: CurveDef,
    const: float,
    t_range: tuple[float, float] = (0.0, 2.0 * math.pi),
) -> DerivedCurve:
    """Involute beta(t) = alpha(t) + (const - s(t)) T(t).

    The constant is in arc-length units measured from the start of t_range
    (the arc-length origin is a convention, not part of the construction).
    """
    table = _arc_length_table(c, t_range[0], t_range[1])

    def rows(t: float) -> np.ndarray:
        tj = _tangent_jets(c, t)
        sp = tj.speed
        # s(t) jet: value from the cache, derivatives from speed itself
        s_jet = Jet((table.value(t), sp.c[0], sp.c[1], sp.c[2], sp.c[3]))
        beta = tj.alpha + tj.T.scale(Jet.constant(const) - s_jet)
        return beta.rows(2)

    return DerivedCurve(rows)


def evolute(
    c: CurveDef,
    const: float,
    t_range: tuple[float, float] = (0.0, 2.0 * math.pi),
) -> DerivedCurve:
    """Evolute of c: c + (1/kappa) n + (1/kappa) cot(integral of tau ds + const) b.

    The torsion integral accumulates from the start of t_range; const shifts
    its phase. Points where the cot argument hits a multiple of pi are poles
    and raise DomainError.
    """
    table = _torsion_integral_table(c, t_range[0], t_range[1])

    def rows(t: float) -> np.ndarray:
        fj = _frame_jets(c, t)
        tau_ds = fj.tau * fj.speed  # valid to order 1
        arg = Jet((table.value(t) + const, tau_ds.c[0], tau_ds.c[1], 0.0, 0.0))
        sin_arg = jet_sin(arg)
        if abs(sin_arg.value) < 1e-12:
            raise DomainError(
                f"evolute pole: cot argument {arg.value!r} is a multiple of pi", value=t
            )
        cot = jet_cos(arg) / sin_arg
        inv_kappa = Jet.constant(1.0) / fj.kappa
        point = fj.alpha + fj.N.scale(inv_kappa) + fj.B.scale(inv_kappa * cot)
        return point.rows(2)

    return DerivedCurve(rows)
