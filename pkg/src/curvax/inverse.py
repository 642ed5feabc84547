"""Recover a generating curve from developable data.

For the conical case the generator solves g'' + g = 0 componentwise. For the
tangent case, given the regression curve x and a constant kappa, each
coordinate of the generator solves

    g'' + kappa^2 g = kappa^2 x

whose variation-of-parameters solution is

    g_i(s) = sin(ks) C_i1 + cos(ks) C_i2
           + k ( sin(ks) * I[cos(ks) x_i] - cos(ks) * I[sin(ks) x_i] )

with I[.] the cumulative integral from the start of the working range. The
integration origin only shifts the homogeneous constants, so comparisons
against externally printed solutions are made modulo A sin(ks) + B cos(ks).

Derivatives of the recovered curve differentiate the formula analytically;
the integral terms differentiate in closed form by the fundamental theorem
of calculus, never by differencing cached values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .expr import CurveDef, eval_curve, eval_expr
from .frenet import DerivedCurve, _frame_jets
from .quadrature import CumulativeIntegral


@dataclass(frozen=True)
class RecoveredGenerator:
    curve: DerivedCurve
    kappa: float
    constants: tuple[float, float, float, float, float, float]
    source: CurveDef
    s_range: tuple[float, float]


def conical_generator(
    constants: tuple[float, float, float, float, float, float],
) -> DerivedCurve:
    """Generator for the conical case: g_i(s) = c_i1 sin(s) + c_i2 cos(s)."""
    cs = np.asarray(constants, dtype=float).reshape(3, 2)

    def rows(s: float) -> np.ndarray:
        sin, cos = math.sin(s), math.cos(s)
        p = cs[:, 0] * sin + cs[:, 1] * cos
        d1 = cs[:, 0] * cos - cs[:, 1] * sin
        return np.array([p, d1, -p])

    return DerivedCurve(rows)


def recover_generator(
    x: CurveDef,
    kappa: float,
    constants: tuple[float, float, float, float, float, float],
    s_range: tuple[float, float],
    n_quad: int = 2048,
) -> RecoveredGenerator:
    """Solve g'' + kappa^2 g = kappa^2 x by quadrature on s_range."""
    if not kappa > 0:
        raise ValueError(f"kappa must be positive, got {kappa!r}")
    k = float(kappa)
    cs = np.asarray(constants, dtype=float).reshape(3, 2)
    a, b = s_range

    tables_cos = []
    tables_sin = []
    for comp in x.components:
        tables_cos.append(
            CumulativeIntegral(lambda s, e=comp: math.cos(k * s) * eval_expr(e, s), a, b, n_quad)
        )
        tables_sin.append(
            CumulativeIntegral(lambda s, e=comp: math.sin(k * s) * eval_expr(e, s), a, b, n_quad)
        )

    def rows(s: float) -> np.ndarray:
        sin, cos = math.sin(k * s), math.cos(k * s)
        xi = eval_curve(x, s)
        ic = np.array([tc.value(s) for tc in tables_cos])
        isn = np.array([ts.value(s) for ts in tables_sin])
        p = cs[:, 0] * sin + cs[:, 1] * cos + k * (sin * ic - cos * isn)
        # d/ds: the two fundamental-theorem terms  k(sin cos x - cos sin x)  cancel
        d1 = k * (cs[:, 0] * cos - cs[:, 1] * sin) + k * k * (cos * ic + sin * isn)
        # second derivative, again by the fundamental theorem
        d2 = (
            -k * k * (cs[:, 0] * sin + cs[:, 1] * cos)
            + k**3 * (-sin * ic + cos * isn)
            + k * k * xi
        )
        return np.array([p, d1, d2])

    return RecoveredGenerator(DerivedCurve(rows), k, tuple(np.asarray(constants, float)), x, s_range)


def ode_residual(curve: DerivedCurve, x: CurveDef, kappa: float, s: float) -> np.ndarray:
    """g''(s) + kappa^2 g(s) - kappa^2 x(s), componentwise."""
    k2 = kappa * kappa
    r = curve.rows(s)
    return r[2] + k2 * r[0] - k2 * eval_curve(x, s)


def rms_ode_residual(
    curve: DerivedCurve, x: CurveDef, kappa: float, s_range: tuple[float, float], n: int = 257
) -> float:
    ss = np.linspace(s_range[0], s_range[1], n)
    res = np.array([ode_residual(curve, x, kappa, s) for s in ss])
    return float(np.sqrt(np.mean(np.sum(res * res, axis=1))))


def fit_homogeneous_difference(
    a: DerivedCurve,
    b: DerivedCurve,
    kappa: float,
    s_fit: tuple[float, float],
) -> np.ndarray:
    """Per-coordinate (A, B) with a(s) - b(s) = A sin(ks) + B cos(ks) at the two fit points.

    Returns shape (3, 2). If the two solutions really differ by a homogeneous
    solution, the same A, B reproduce the difference everywhere.
    """
    s0, s1 = s_fit
    M = np.array(
        [
            [math.sin(kappa * s0), math.cos(kappa * s0)],
            [math.sin(kappa * s1), math.cos(kappa * s1)],
        ]
    )
    d0 = a.point(s0) - b.point(s0)
    d1 = a.point(s1) - b.point(s1)
    return np.linalg.solve(M, np.array([d0, d1])).T


def is_planar_curve(
    c: CurveDef,
    t_range: tuple[float, float] = (0.0, 2.0 * math.pi),
    n_samples: int = 64,
    tol: float = 1e-6,
) -> bool:
    """True iff max |tau| over the sampled range stays below tol.

    Planar generators are exactly the ones whose curvature-axis surface is a
    generalized cylinder (constant binormal).
    """
    for t in np.linspace(t_range[0], t_range[1], n_samples):
        if abs(_frame_jets(c, t).tau.value) >= tol:
            return False
    return True


def ruling_alignment_report(
    rec: RecoveredGenerator, n_samples: int = 33
) -> dict[str, float]:
    """Diagnostics comparing the recovered generator's curvature axes with the
    tangent rulings of the source curve. Reported, never asserted: the
    derivation assumes a unit-speed source with x' equal to the generator's
    binormal, which concrete inputs need not satisfy."""
    ss = np.linspace(rec.s_range[0], rec.s_range[1], n_samples)
    angles = []
    dists = []
    kappas = []
    taus = []
    for s in ss:
        rows = rec.curve.rows(s)
        d1, d2 = rows[1], rows[2]
        cr = np.cross(d1, d2)
        sp = np.linalg.norm(d1)
        if sp < 1e-9 or np.linalg.norm(cr) < 1e-9:
            continue
        kappas.append(float(np.linalg.norm(cr) / sp**3))
        # tau needs a third derivative: use the defining ODE, g''' = k^2 (x' - g')
        x1 = _source_derivative(rec.source, s)
        d3 = rec.kappa**2 * (x1 - d1)
        taus.append(float(np.dot(cr, d3) / np.dot(cr, cr)))
        b_hat = cr / np.linalg.norm(cr)
        x1n = np.linalg.norm(x1)
        if x1n < 1e-14:
            continue
        angles.append(float(np.linalg.norm(np.cross(b_hat, x1 / x1n))))
        # distance from the recovered osculating center to the source tangent line
        kap = kappas[-1]
        n_vec = np.cross(b_hat, d1 / sp)
        center = rows[0] + n_vec / kap
        x0 = eval_curve(rec.source, s)
        dists.append(float(np.linalg.norm(np.cross(center - x0, x1 / x1n))))
    return {
        "ruling_angle_rms": _rms(angles),
        "center_to_ruling_rms": _rms(dists),
        "kappa_mean": _mean(kappas),
        "kappa_std": _std(kappas),
        "tau_mean": _mean(taus),
        "tau_std": _std(taus),
    }


def _source_derivative(x: CurveDef, s: float) -> np.ndarray:
    from .jets import eval_jet

    return eval_jet(x, s).row(1)


def _rms(vals) -> float:
    return float(np.sqrt(np.mean(np.square(vals)))) if len(vals) else float("nan")


def _mean(vals) -> float:
    return float(np.mean(vals)) if len(vals) else float("nan")


def _std(vals) -> float:
    return float(np.std(vals)) if len(vals) else float("nan")
