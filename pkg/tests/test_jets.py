"""Jet arithmetic: exactness against known Taylor towers, finite differences,
and polynomial algebra."""

import math
import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from curvax.errors import DomainError
from curvax.expr import parse_curve, parse_expr
from curvax.jets import Jet, eval_expr_jet, eval_jet
from conftest import fd_derivative, fd_derivative_mp, random_safe_expr, rel_close

SQ2 = math.sqrt(2.0)


def test_known_taylor_towers_at_zero():
    J = eval_jet(parse_curve("(cos(t), sin(t), t)"), 0.0)
    assert J.x.c == (1.0, 0.0, -1.0, 0.0, 1.0)
    assert J.y.c == (0.0, 1.0, 0.0, -1.0, 0.0)
    assert J.z.c == (0.0, 1.0, 0.0, 0.0, 0.0)


def test_monomial_jets_exact_at_zero():
    J = eval_jet(parse_curve("(t^2, t^3, t^4)"), 0.0)
    assert J.x.c == (0.0, 0.0, 2.0, 0.0, 0.0)
    assert J.y.c == (0.0, 0.0, 0.0, 6.0, 0.0)
    assert J.z.c == (0.0, 0.0, 0.0, 0.0, 24.0)


def test_asteroid_first_derivative_quarter_pi():
    J = eval_jet(parse_curve("(cos(t)^3, sin(t)^3, cos(2*t))"), math.pi / 4.0)
    d1 = J.row(1)
    expected = np.array([-3.0 * (SQ2 / 2.0) ** 3, 3.0 * (SQ2 / 2.0) ** 3, -2.0])
    assert np.allclose(d1, expected, rtol=0, atol=1e-14)
    # cross-check against central finite differences of an independent evaluator
    fns = [
        lambda t: math.cos(t) ** 3,
        lambda t: math.sin(t) ** 3,
        lambda t: math.cos(2.0 * t),
    ]
    for k, fn in enumerate(fns):
        fd = fd_derivative(fn, math.pi / 4.0, 1, 1e-5)
        assert rel_close(d1[k], fd, 1e-6)


def test_chain_rule_exact_for_sin_of_square():
    """Jets of sin(t^2) against hand-expanded derivatives at random points."""
    e = parse_expr("sin(t^2)")
    rng = random.Random(7)
    for _ in range(20):
        t = rng.uniform(-2.0, 2.0)
        j = eval_expr_jet(e, t)
        s, c = math.sin(t * t), math.cos(t * t)
        want = (
            s,
            2.0 * t * c,
            2.0 * c - 4.0 * t * t * s,
            -12.0 * t * s - 8.0 * t**3 * c,
            -12.0 * s - 48.0 * t * t * c + 16.0 * t**4 * s,
        )
        for k in range(5):
            assert rel_close(j.c[k], want[k], 1e-12)


def test_jets_match_finite_differences_random_corpus():
    """Orders 1-2 at step 1e-5 within 1e-6 relative; orders 3-4 at step 1e-3
    within 1e-3 relative (higher orders are noisier under finite differences).
    The fd oracle runs in mpmath so the comparison sees stencil truncation
    only, not double-precision cancellation in the oracle itself."""
    rng = random.Random(31415)
    for _ in range(100):
        text, fn = random_safe_expr(rng, rng.randint(1, 3))
        t = rng.uniform(-2.0, 2.0)
        j = eval_expr_jet(parse_expr(text), t)
        for order, h, tol in ((1, 1e-5, 1e-6), (2, 1e-5, 1e-6), (3, 1e-3, 1e-3), (4, 1e-3, 1e-3)):
            fd = fd_derivative_mp(fn, t, order, h)
            assert rel_close(j.c[order], fd, tol), (text, order, t)


@pytest.mark.parametrize(
    "text,t",
    [
        ("abs(t)", 0.0),
        ("abs(t)", 1e-301),
        ("sqrt(t)", 0.0),
        ("sqrt(t)", -1.0),
        ("log(t)", -1.0),
        ("1/t", 0.0),
        ("t^-1", 0.0),
        ("t^2.5", -1.0),
    ],
)
def test_jet_domain_errors(text, t):
    with pytest.raises(DomainError):
        eval_expr_jet(parse_expr(text), t)


def test_abs_jets_away_from_zero():
    e = parse_expr("abs(t^3 - t)")
    for t in (0.5, -0.5, 2.0, -2.0):
        j = eval_expr_jet(e, t)
        inner = eval_expr_jet(parse_expr("t^3 - t"), t)
        sign = 1.0 if inner.value > 0 else -1.0
        assert j.c == tuple(sign * v for v in inner.c)


def test_integer_power_via_leibniz_not_exp_log():
    # (-2)^3 must work: exp/log would need a positive base
    j = eval_expr_jet(parse_expr("t^3"), -2.0)
    assert j.c == (-8.0, 12.0, -12.0, 6.0, 0.0)


def test_negative_power_jets_match_quotient():
    a = eval_expr_jet(parse_expr("t^-2"), 1.7)
    b = eval_expr_jet(parse_expr("1/t^2"), 1.7)
    for k in range(5):
        assert rel_close(a.c[k], b.c[k], 1e-14)


# --- polynomial oracle: jet products against numpy polynomial algebra ----------

_coeffs = st.lists(
    st.floats(min_value=-3.0, max_value=3.0, allow_nan=False), min_size=1, max_size=5
)


def _poly_jet(coeffs, t: float) -> Jet:
    out = Jet.constant(0.0)
    x = Jet.variable(t)
    for k, a in enumerate(coeffs):
        term = Jet.constant(a)
        for _ in range(k):
            term = term * x
        out = out + term
    return out


@given(_coeffs, _coeffs, st.floats(min_value=-2.0, max_value=2.0, allow_nan=False))
def test_jet_product_matches_polynomial_derivatives(pa, pb, t):
    """d^k(p*q) from jet multiplication equals numpy's polynomial derivative."""
    jet = _poly_jet(pa, t) * _poly_jet(pb, t)
    prod = np.polynomial.polynomial.polymul(pa, pb)
    for k in range(5):
        want = float(np.polynomial.polynomial.polyval(t, np.polynomial.polynomial.polyder(prod, k))) if k else float(np.polynomial.polynomial.polyval(t, prod))
        assert rel_close(jet.c[k], want, 1e-9)


@given(_coeffs, st.floats(min_value=-2.0, max_value=2.0, allow_nan=False))
def test_jet_division_inverts_product(pa, t):
    denom = _poly_jet(pa, t) * _poly_jet(pa, t) + Jet.constant(1.0)  # strictly positive
    num = _poly_jet(pa, t)
    ratio = num / denom
    back = ratio * denom
    for k in range(5):
        assert rel_close(back.c[k], num.c[k], 1e-9)
