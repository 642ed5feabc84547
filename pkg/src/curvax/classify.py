"""Classify a developable ruled surface as cylinder, cone, or tangent type.

The tests run in a fixed order (developability, then cylinder, then cone,
then tangent) because the earlier kinds trivially pass the later tests under
numerical noise; the order is the tie-breaking rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import TooFewSamples
from .ruled import RuledSurface, developability_residual, striction_curve


class SurfaceClass(Enum):
    CYLINDER = "Cylinder"
    CONE = "Cone"
    TANGENT = "Tangent"
    NON_DEVELOPABLE = "NonDevelopable"


@dataclass(frozen=True)
class Classification:
    kind: SurfaceClass
    samples_used: int
    tolerance: float
    apex: np.ndarray | None = None  # Cone only
    apex_residual: float | None = None  # Cone only: RMS apex-to-ruling distance
    regression_rms: float | None = None  # Tangent only: striction-tangent misalignment
    max_residual: float | None = None  # NonDevelopable only


def classify_developable(
    S: RuledSurface, n_samples: int = 64, tol: float = 1e-6
) -> Classification:
    """Decide the developable type of S from n_samples uniform rulings.

    Decision order: not developable at tol -> NonDevelopable; constant
    director -> Cylinder; common point of all rulings -> Cone (with the
    least-squares apex); otherwise Tangent.
    """
    if n_samples < 8:
        raise TooFewSamples(f"need at least 8 samples, got {n_samples}")
    us = np.linspace(S.u_domain[0], S.u_domain[1], n_samples)
    bases = np.array([S.base.point(u) for u in us])
    dirs = np.array([S.director.point(u) for u in us])
    dir_derivs = np.array([S.director.derivative(u, 1) for u in us])
    scale = float(np.max(np.linalg.norm(bases, axis=1))) + 1.0

    residuals = np.array([developability_residual(S, u) for u in us])
    max_res = float(np.max(np.abs(residuals)))
    if max_res > tol * scale:
        return Classification(
            SurfaceClass.NON_DEVELOPABLE, n_samples, tol, max_residual=max_res
        )

    if float(np.max(np.linalg.norm(dir_derivs, axis=1))) <= tol:
        return Classification(SurfaceClass.CYLINDER, n_samples, tol)

    apex, rms = _common_point(bases, dirs)
    if apex is None:
        # all rulings parallel: degenerate normal system, already cylinder-like
        return Classification(SurfaceClass.CYLINDER, n_samples, tol)
    if rms <= tol * scale:
        return Classification(
            SurfaceClass.CONE, n_samples, tol, apex=apex, apex_residual=rms
        )

    reg_rms = _striction_alignment_rms(S, us, dirs)
    return Classification(SurfaceClass.TANGENT, n_samples, tol, regression_rms=reg_rms)


def _common_point(bases: np.ndarray, dirs: np.ndarray) -> tuple[np.ndarray | None, float]:
    """Least-squares point minimizing the sum of squared distances to all rulings."""
    eye = np.eye(3)
    A = np.zeros((3, 3))
    b = np.zeros(3)
    for x, y in zip(bases, dirs):
        P = eye - np.outer(y, y)  # projector orthogonal to the ruling
        A += P
        b += P @ x
    w = np.linalg.eigvalsh(A)
    if w[0] <= 1e-12 * max(w[-1], 1.0):
        return None, np.inf
    apex = np.linalg.solve(A, b)
    d2 = [float((apex - x) @ (np.eye(3) - np.outer(y, y)) @ (apex - x)) for x, y in zip(bases, dirs)]
    return apex, float(np.sqrt(np.mean(np.maximum(d2, 0.0))))


def _striction_alignment_rms(S: RuledSurface, us: np.ndarray, dirs: np.ndarray) -> float:
    """RMS sine of the angle between striction-curve secants and the directors."""
    pts = []
    for u in us:
        try:
            pts.append(striction_curve(S, u))
        except Exception:
            pts.append(None)
    sines = []
    for i in range(len(us)):
        lo = max(i - 1, 0)
        hi = min(i + 1, len(us) - 1)
        if pts[lo] is None or pts[hi] is None or hi == lo:
            continue
        secant = pts[hi] - pts[lo]
        n = np.linalg.norm(secant)
        if n < 1e-14:
            continue
        sines.append(float(np.linalg.norm(np.cross(secant / n, dirs[i]))))
    if not sines:
        return float("nan")
    return float(np.sqrt(np.mean(np.square(sines))))
