"""Truncated-Taylor (jet) arithmetic up to derivative order 4.

A Jet stores (f, f', f'', f''', f'''') at one parameter value; arithmetic
propagates derivatives exactly (Leibniz products, triangular division,
Faa di Bruno composition for the elementary functions). Order 4 is the
deepest derivative any consumer needs (tau' requires four derivatives of the
curve), and keeping it a fixed constant keeps the arithmetic branch-free.

Integer powers are computed by repeated multiplication, never exp(n*log),
so monomial jets stay exact at t=0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .expr import BinOp, Call, Const, CurveDef, CONSTANTS, Expr, IntPow, Neg, Num, Var

N_COEFFS = 5  # value + derivatives 1..4


class JetDomainError(ArithmeticError):
    """Internal: a jet operation left its domain. eval_expr_jet converts this
    to DomainError with the offending AST node attached."""


@dataclass(frozen=True)
class Jet:
    """coeffs[k] = k-th derivative with respect to the curve parameter."""

    c: tuple[float, float, float, float, float]

    @staticmethod
    def constant(x: float) -> "Jet":
        return Jet((float(x), 0.0, 0.0, 0.0, 0.0))

    @staticmethod
    def variable(x: float) -> "Jet":
        return Jet((float(x), 1.0, 0.0, 0.0, 0.0))

    @property
    def value(self) -> float:
        return self.c[0]

    def shift(self, k: int = 1) -> "Jet":
        """Jet of the k-th derivative; top k coefficients are unknown (zero-filled),
        so results built from a shifted jet are valid only up to order 4-k."""
        return Jet(tuple(self.c[k:]) + (0.0,) * k)

    def __add__(self, o: "Jet") -> "Jet":
        a, b = self.c, o.c
        return Jet((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3], a[4] + b[4]))

    def __sub__(self, o: "Jet") -> "Jet":
        a, b = self.c, o.c
        return Jet((a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3], a[4] - b[4]))

    def __neg__(self) -> "Jet":
        a = self.c
        return Jet((-a[0], -a[1], -a[2], -a[3], -a[4]))

    def scale(self, s: float) -> "Jet":
        a = self.c
        return Jet((s * a[0], s * a[1], s * a[2], s * a[3], s * a[4]))

    def __mul__(self, o: "Jet") -> "Jet":
        f, g = self.c, o.c
        return Jet(
            (
                f[0] * g[0],
                f[1] * g[0] + f[0] * g[1],
                f[2] * g[0] + 2.0 * f[1] * g[1] + f[0] * g[2],
                f[3] * g[0] + 3.0 * f[2] * g[1] + 3.0 * f[1] * g[2] + f[0] * g[3],
                f[4] * g[0]
                + 4.0 * f[3] * g[1]
                + 6.0 * f[2] * g[2]
                + 4.0 * f[1] * g[3]
                + f[0] * g[4],
            )
        )

    def __truediv__(self, o: "Jet") -> "Jet":
        f, g = self.c, o.c
        g0 = g[0]
        if g0 == 0.0:
            raise JetDomainError("jet division by zero value")
        h0 = f[0] / g0
        h1 = (f[1] - h0 * g[1]) / g0
        h2 = (f[2] - 2.0 * h1 * g[1] - h0 * g[2]) / g0
        h3 = (f[3] - 3.0 * h2 * g[1] - 3.0 * h1 * g[2] - h0 * g[3]) / g0
        h4 = (f[4] - 4.0 * h3 * g[1] - 6.0 * h2 * g[2] - 4.0 * h1 * g[3] - h0 * g[4]) / g0
        return Jet((h0, h1, h2, h3, h4))


def _compose(g0: float, g1: float, g2: float, g3: float, g4: float, u: Jet) -> Jet:
    """Faa di Bruno to order 4: jet of g(u(t)) given outer derivatives at u(t)."""
    u1, u2, u3, u4 = u.c[1], u.c[2], u.c[3], u.c[4]
    h1 = g1 * u1
    h2 = g2 * u1 * u1 + g1 * u2
    h3 = g3 * u1**3 + 3.0 * g2 * u1 * u2 + g1 * u3
    h4 = (
        g4 * u1**4
        + 6.0 * g3 * u1 * u1 * u2
        + g2 * (3.0 * u2 * u2 + 4.0 * u1 * u3)
        + g1 * u4
    )
    return Jet((g0, h1, h2, h3, h4))


def jet_sin(u: Jet) -> Jet:
    s, c = math.sin(u.value), math.cos(u.value)
    return _compose(s, c, -s, -c, s, u)


def jet_cos(u: Jet) -> Jet:
    s, c = math.sin(u.value), math.cos(u.value)
    return _compose(c, -s, -c, s, c, u)


def jet_tan(u: Jet) -> Jet:
    cos = jet_cos(u)
    if cos.value == 0.0:
        raise JetDomainError("tan at a pole")
    return jet_sin(u) / cos


def jet_exp(u: Jet) -> Jet:
    try:
        e = math.exp(u.value)
    except OverflowError:
        raise JetDomainError("exp overflow") from None
    return _compose(e, e, e, e, e, u)


def jet_log(u: Jet) -> Jet:
    x = u.value
    if x <= 0.0:
        raise JetDomainError(f"log of non-positive value {x!r}")
    i = 1.0 / x
    return _compose(math.log(x), i, -i * i, 2.0 * i**3, -6.0 * i**4, u)


def jet_sqrt(u: Jet) -> Jet:
    x = u.value
    if x <= 0.0:
        # derivatives blow up at 0; no smooth extension below it
        raise JetDomainError(f"sqrt jet at non-positive value {x!r}")
    r = math.sqrt(x)
    g1 = 0.5 / r
    g2 = -0.5 * g1 / x
    g3 = -1.5 * g2 / x
    g4 = -2.5 * g3 / x
    return _compose(r, g1, g2, g3, g4, u)


def jet_abs(u: Jet) -> Jet:
    x = u.value
    if abs(x) < 1e-300:
        raise JetDomainError("abs jet at the non-smooth point 0")
    return u.scale(1.0) if x > 0 else -u


def jet_powi(u: Jet, n: int) -> Jet:
    if n == 0:
        return Jet.constant(1.0)
    out = u
    for _ in range(abs(n) - 1):
        out = out * u
    if n < 0:
        if out.value == 0.0:
            raise JetDomainError("zero raised to a negative power")
        return Jet.constant(1.0) / out
    return out


def jet_pow(base: Jet, exponent: Jet) -> Jet:
    if base.value <= 0.0:
        raise JetDomainError(f"power with non-positive base {base.value!r}")
    return jet_exp(exponent * jet_log(base))


_FUNC_JET = {
    "sin": jet_sin,
    "cos": jet_cos,
    "tan": jet_tan,
    "sqrt": jet_sqrt,
    "exp": jet_exp,
    "log": jet_log,
    "abs": jet_abs,
}


def eval_expr_jet(e: Expr, t: float) -> Jet:
    """Jet of one expression at t; raises DomainError outside function domains."""
    try:
        return _eval_jet(e, t)
    except JetDomainError as exc:
        raise DomainError(str(exc), node=e, value=t) from exc


def _eval_jet(e: Expr, t: float) -> Jet:
    if isinstance(e, Num):
        return Jet.constant(e.value)
    if isinstance(e, Var):
        return Jet.variable(t)
    if isinstance(e, Const):
        return Jet.constant(CONSTANTS[e.name])
    if isinstance(e, Neg):
        return -_eval_jet(e.child, t)
    if isinstance(e, IntPow):
        base = _eval_jet(e.base, t)
        try:
            return jet_powi(base, e.exponent)
        except JetDomainError as exc:
            raise DomainError(str(exc), node=e, value=base.value) from exc
    if isinstance(e, Call):
        arg = _eval_jet(e.arg, t)
        try:
            return _FUNC_JET[e.func](arg)
        except JetDomainError as exc:
            raise DomainError(str(exc), node=e, value=arg.value) from exc
    if isinstance(e, BinOp):
        a = _eval_jet(e.left, t)
        b = _eval_jet(e.right, t)
        if e.op == "+":
            return a + b
        if e.op == "-":
            return a - b
        if e.op == "*":
            return a * b
        try:
            if e.op == "/":
                return a / b
            return jet_pow(a, b)
        except JetDomainError as exc:
            raise DomainError(str(exc), node=e, value=b.value if e.op == "/" else a.value) from exc
    raise TypeError(f"not an Expr node: {e!r}")


# --- 3-vectors of jets -----------------------------------------------------


@dataclass(frozen=True)
class JetVec3:
    x: Jet
    y: Jet
    z: Jet

    @staticmethod
    def constant(v) -> "JetVec3":
        return JetVec3(Jet.constant(v[0]), Jet.constant(v[1]), Jet.constant(v[2]))

    def __add__(self, o: "JetVec3") -> "JetVec3":
        return JetVec3(self.x + o.x, self.y + o.y, self.z + o.z)

    def __sub__(self, o: "JetVec3") -> "JetVec3":
        return JetVec3(self.x - o.x, self.y - o.y, self.z - o.z)

    def __neg__(self) -> "JetVec3":
        return JetVec3(-self.x, -self.y, -self.z)

    def scale(self, s: Jet) -> "JetVec3":
        return JetVec3(self.x * s, self.y * s, self.z * s)

    def over(self, s: Jet) -> "JetVec3":
        return JetVec3(self.x / s, self.y / s, self.z / s)

    def dot(self, o: "JetVec3") -> Jet:
        return self.x * o.x + self.y * o.y + self.z * o.z

    def cross(self, o: "JetVec3") -> "JetVec3":
        return JetVec3(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )

    def norm(self) -> Jet:
        return jet_sqrt(self.dot(self))

    def normalized(self) -> "JetVec3":
        return self.over(self.norm())

    def shift(self, k: int = 1) -> "JetVec3":
        return JetVec3(self.x.shift(k), self.y.shift(k), self.z.shift(k))

    def values(self) -> np.ndarray:
        return np.array([self.x.c[0], self.y.c[0], self.z.c[0]])

    def row(self, k: int) -> np.ndarray:
        """k-th derivative of the vector, as a (3,) array."""
        return np.array([self.x.c[k], self.y.c[k], self.z.c[k]])

    def rows(self, upto: int = 2) -> np.ndarray:
        """Stack of derivative rows 0..upto, shape (upto+1, 3)."""
        return np.array([self.row(k) for k in range(upto + 1)])


def eval_jet(c: CurveDef, t: float) -> JetVec3:
    """Jets of all three curve components at t (derivatives 0..4)."""
    jx = eval_expr_jet(c.components[0], t)
    jy = eval_expr_jet(c.components[1], t)
    jz = eval_expr_jet(c.components[2], t)
    return JetVec3(jx, jy, jz)
