"""Shared corpora and numerical helpers for the curvax test suite.

Random corpora are built once per session from fixed seeds so every run sees
the same cases; hypothesis runs derandomized for the same reason.
"""

from __future__ import annotations

import math
import random

import numpy as np
import pytest
from hypothesis import settings

from curvax.expr import CurveDef, format_expr, parse_curve

settings.register_profile("suite", derandomize=True, max_examples=40, deadline=None)
settings.load_profile("suite")


# --- finite differences (independent oracles) --------------------------------


def fd_derivative(f, t: float, order: int, h: float) -> float:
    """Central finite differences, orders 1..4."""
    if order == 1:
        return (f(t + h) - f(t - h)) / (2.0 * h)
    if order == 2:
        return (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h)
    if order == 3:
        return (f(t + 2 * h) - 2.0 * f(t + h) + 2.0 * f(t - h) - f(t - 2 * h)) / (2.0 * h**3)
    if order == 4:
        return (f(t + 2 * h) - 4.0 * f(t + h) + 6.0 * f(t) - 4.0 * f(t - h) + f(t - 2 * h)) / h**4
    raise ValueError(order)


def rel_close(got: float, want: float, tol: float) -> bool:
    """|got - want| <= tol * max(1, |got|, |want|): relative with a unit floor,
    which keeps near-zero derivatives from demanding impossible fd accuracy."""
    return abs(got - want) <= tol * max(1.0, abs(got), abs(want))


# --- random expression corpus -------------------------------------------------


def random_safe_expr(rng: random.Random, depth: int):
    """(text, fn): a grammar-valid expression plus an independently built
    implementation. fn(t, m=math) evaluates through any math-like module, so
    the same oracle can run in double precision or in mpmath for
    noise-free finite differencing. Arguments of tan/exp/sqrt/log/abs/'/'/'^'
    are range-restricted by construction so every real t is in-domain."""
    if depth == 0:
        if rng.random() < 0.4:
            v = round(rng.uniform(-3.0, 3.0), 6)
            return repr(v), (lambda t, m=math, v=v: v)
        return "t", (lambda t, m=math: t)
    kind = rng.choice(
        ["sin", "cos", "tanb", "expb", "sqrtb", "logb", "absb",
         "add", "sub", "mul", "divb", "pow2", "pow3", "powf"]
    )
    a_text, a_fn = random_safe_expr(rng, depth - 1)
    if kind == "sin":
        return f"sin({a_text})", (lambda t, m=math, f=a_fn: m.sin(f(t, m)))
    if kind == "cos":
        return f"cos({a_text})", (lambda t, m=math, f=a_fn: m.cos(f(t, m)))
    if kind == "tanb":
        return (
            f"tan(0.4*sin({a_text}))",
            (lambda t, m=math, f=a_fn: m.tan(0.4 * m.sin(f(t, m)))),
        )
    if kind == "expb":
        return (
            f"exp(0.6*cos({a_text}))",
            (lambda t, m=math, f=a_fn: m.exp(0.6 * m.cos(f(t, m)))),
        )
    if kind == "sqrtb":
        return (
            f"sqrt(1.5 + sin({a_text})^2)",
            (lambda t, m=math, f=a_fn: m.sqrt(1.5 + m.sin(f(t, m)) ** 2)),
        )
    if kind == "logb":
        return (
            f"log(2 + cos({a_text}))",
            (lambda t, m=math, f=a_fn: m.log(2.0 + m.cos(f(t, m)))),
        )
    if kind == "absb":
        return (
            f"abs(2 + sin({a_text}))",
            (lambda t, m=math, f=a_fn: abs(2.0 + m.sin(f(t, m)))),
        )
    b_text, b_fn = random_safe_expr(rng, depth - 1)
    if kind == "add":
        return f"({a_text} + {b_text})", (lambda t, m=math, f=a_fn, g=b_fn: f(t, m) + g(t, m))
    if kind == "sub":
        return f"({a_text} - {b_text})", (lambda t, m=math, f=a_fn, g=b_fn: f(t, m) - g(t, m))
    if kind == "mul":
        return f"({a_text})*({b_text})", (lambda t, m=math, f=a_fn, g=b_fn: f(t, m) * g(t, m))
    if kind == "divb":
        return (
            f"({a_text})/(2.5 + cos({b_text}))",
            (lambda t, m=math, f=a_fn, g=b_fn: f(t, m) / (2.5 + m.cos(g(t, m)))),
        )
    if kind == "pow2":
        return f"({a_text})^2", (lambda t, m=math, f=a_fn: f(t, m) ** 2)
    if kind == "pow3":
        return f"sin({a_text})^3", (lambda t, m=math, f=a_fn: m.sin(f(t, m)) ** 3)
    # powf: general power with a safely positive base
    return (
        f"(2 + sin({a_text}))^1.3",
        (lambda t, m=math, f=a_fn: (2.0 + m.sin(f(t, m))) ** 1.3),
    )


def fd_derivative_mp(fn, t: float, order: int, h: float, dps: int = 40) -> float:
    """Central finite differences with the oracle evaluated in mpmath, so the
    stencil sees only truncation error, not double-precision roundoff."""
    import mpmath

    old = mpmath.mp.dps
    mpmath.mp.dps = dps
    try:
        g = lambda x: fn(x, mpmath)
        return float(fd_derivative(g, mpmath.mpf(t), order, mpmath.mpf(h)))
    finally:
        mpmath.mp.dps = old


# --- random regular curve corpus ----------------------------------------------


def random_trig_curve_text(rng: random.Random) -> str:
    comps = []
    for _ in range(3):
        parts = [f"{rng.uniform(-0.5, 0.5):.6f}"]
        for k in (1, 2):
            parts.append(f"{rng.uniform(-1.0, 1.0):.6f}*cos({k}*t)")
            parts.append(f"{rng.uniform(-1.0, 1.0):.6f}*sin({k}*t)")
        comps.append(" + ".join(parts))
    return "(" + ", ".join(comps) + ")"


def _curve_is_regular(c: CurveDef, kappa_min: float, n: int = 100) -> bool:
    from curvax.frenet import frenet_apparatus
    from curvax.errors import GeometryError

    for t in np.linspace(0.0, 2.0 * math.pi, n):
        try:
            fd = frenet_apparatus(c, t)
        except GeometryError:
            return False
        if fd.kappa < kappa_min or not 0.2 < fd.speed < 10.0:
            return False
    return True


def make_regular_trig_curves(n_curves: int = 20, seed: int = 20250809) -> list[CurveDef]:
    """Random trigonometric-polynomial curves with kappa bounded below on [0, 2pi]."""
    rng = random.Random(seed)
    out: list[CurveDef] = []
    attempts = 0
    while len(out) < n_curves and attempts < 50 * n_curves:
        attempts += 1
        c = parse_curve(random_trig_curve_text(rng))
        if _curve_is_regular(c, kappa_min=0.05):
            out.append(c)
    if len(out) < n_curves:
        raise AssertionError(f"only built {len(out)} regular curves in {attempts} attempts")
    return out


@pytest.fixture(scope="session")
def trig_curves() -> list[CurveDef]:
    return make_regular_trig_curves()


# --- curve transforms (for invariance tests) ----------------------------------


def rotation_matrix(axis, angle: float) -> np.ndarray:
    a = np.asarray(axis, dtype=float)
    a = a / np.linalg.norm(a)
    K = np.array([[0, -a[2], a[1]], [a[2], 0, -a[0]], [-a[1], a[0], 0]])
    return np.eye(3) + math.sin(angle) * K + (1.0 - math.cos(angle)) * (K @ K)


def transform_curve(c: CurveDef, R: np.ndarray, shift) -> CurveDef:
    """Apply a rigid motion by rebuilding the component expressions as text."""
    comps = [format_expr(comp, c.parameter_name) for comp in c.components]
    new = []
    for i in range(3):
        terms = [f"({float(R[i][j])!r})*({comps[j]})" for j in range(3)]
        terms.append(repr(float(shift[i])))
        new.append(" + ".join(terms))
    return parse_curve("(" + ", ".join(new) + ")")


def scale_curve(c: CurveDef, a: float) -> CurveDef:
    comps = [format_expr(comp, c.parameter_name) for comp in c.components]
    return parse_curve("(" + ", ".join(f"({a!r})*({t})" for t in comps) + ")")
