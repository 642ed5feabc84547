"""Built-in demonstration curves and their known closed forms.

These four curves exercise every regime the package handles: a regular curve
of constant kappa and tau (helix), a curve with a genuine singular point
(twisted), a curve with four cusps whose axis surface has a closed form
(asteroid), and a spherical curve whose curvature axes all pass through the
sphere center, giving a cone (nephroid).
"""

from __future__ import annotations

import math

import numpy as np

from .expr import CurveDef, parse_curve

CURVE_TEXT = {
    "helix": "(cos(t), sin(t), t)",
    "twisted": "(t^2, t^3, t^4)",
    "asteroid": "(cos(t)^3, sin(t)^3, cos(2*t))",
    "nephroid": "(3/4*cos(t) - 1/4*cos(3*t), 3/4*sin(t) - 1/4*sin(3*t), sqrt(3)/2*cos(t))",
}


def builtin_curve(name: str) -> CurveDef:
    return parse_curve(CURVE_TEXT[name])


def asteroid_axis_ruling(t: float) -> tuple[np.ndarray, np.ndarray]:
    """Closed form of the asteroid's curvature-axis ruling at parameter t.

    Returns (point_on_line, unit_direction). The line is
    ( -cos(t)(110 cos^2 t - 12 L - 125)/15,
       sin(t)(110 cos^2 t - 12 L + 15)/15,
       cos(2t) - 3L/5 )  as L varies; the direction (4cos t, -4sin t, -3)/5
    is already unit length.
    """
    c, s = math.cos(t), math.sin(t)
    point = np.array(
        [
            -c * (110.0 * c * c - 125.0) / 15.0,
            s * (110.0 * c * c + 15.0) / 15.0,
            math.cos(2.0 * t),
        ]
    )
    direction = np.array([4.0 * c / 5.0, -4.0 * s / 5.0, -3.0 / 5.0])
    return point, direction


# Closed-form solution of the axis-recovery ODE  g'' + (1/4) g = (1/4) x
# for x = the helix above, with coefficients (1, 1, 1, 0, 1, 0). Used as an
# independent cross-check of the quadrature-based recovery.
HELIX_RECOVERY_TEXT = (
    "(-2/3*cos(s/2)^2 + cos(s/2) + sin(s/2) + 1/3,"
    " -2/3*sin(s/2)*cos(s/2) + sin(s/2),"
    " s + sin(s/2))"
)

HELIX_RECOVERY_KAPPA = 0.5
HELIX_RECOVERY_CONSTANTS = (1.0, 1.0, 1.0, 0.0, 1.0, 0.0)


def helix_recovery_closed_form() -> CurveDef:
    return parse_curve(HELIX_RECOVERY_TEXT)
