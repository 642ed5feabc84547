"""Parser, formatter, and evaluator tests for the curve DSL."""

import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from curvax.errors import ArityError, DomainError, ParseError
from curvax.expr import (
    BinOp,
    Call,
    Const,
    CurveDef,
    FUNCTIONS,
    IntPow,
    Neg,
    Num,
    Var,
    eval_expr,
    format_curve,
    format_expr,
    parse_curve,
    parse_expr,
)
from conftest import random_safe_expr


def test_parse_helix_smoke():
    c = parse_curve("(cos(t), sin(t), t)")
    assert isinstance(c, CurveDef)
    assert len(c.components) == 3
    assert c.parameter_name == "t"
    assert c.components[0] == Call("cos", Var())
    assert c.components[2] == Var()


def test_parse_integer_powers():
    c = parse_curve("(t^2, t^3, t^4)")
    assert [comp.exponent for comp in c.components] == [2, 3, 4]
    assert all(isinstance(comp, IntPow) for comp in c.components)


@pytest.mark.parametrize("text,count", [("(cos(t), sin(t))", 2), ("(t, t, t, t)", 4), ("(t)", 1)])
def test_wrong_component_count(text, count):
    with pytest.raises(ArityError) as err:
        parse_curve(text)
    assert err.value.count == count


def test_parameter_name_s_accepted():
    c = parse_curve("(cos(s), sin(s), s)")
    assert c.parameter_name == "s"


def test_mixed_parameter_names_rejected():
    with pytest.raises(ParseError):
        parse_curve("(cos(t), sin(s), t)")


def test_constant_only_curve_defaults_to_t():
    assert parse_curve("(1, 0, 2)").parameter_name == "t"


@pytest.mark.parametrize(
    "text",
    [
        "(2t, t, t)",  # implicit multiplication
        "(t², t, t)",  # unicode superscript
        "(t, t, )",
        "(t, t, t",
        "t, t, t)",
        "(sin, t, t)",  # function without call
        "(t(2), t, t)",  # parameter is not callable
        "(foo(t), t, t)",
        "(t + , t, t)",
        "(--t, t, t)",
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_curve(text)


def test_parse_error_carries_position_and_expectation():
    with pytest.raises(ParseError) as err:
        parse_curve("(cos(t), sin(t)")
    assert err.value.position == 15
    assert ")" in err.value.expected


def test_whitespace_insensitive():
    a = parse_curve("(cos(t),sin(t),t)")
    b = parse_curve("(  cos( t ) ,\tsin(t) ,   t )")
    assert a.components == b.components


def test_unary_minus_binds_looser_than_power():
    # -t^2 means -(t^2)
    assert eval_expr(parse_expr("-t^2"), 2.0) == -4.0
    assert parse_expr("-t^2") == Neg(IntPow(Var(), 2))


def test_power_right_associative():
    # 2^3^2 = 2^(3^2) = 512, not (2^3)^2 = 64; the exponent subtree 3^2 is
    # not a literal, so the outer power stays general (exp/log path)
    e = parse_expr("2^3^2")
    assert e == BinOp("^", Num(2.0), IntPow(Num(3.0), 2))
    assert eval_expr(e, 0.0) == pytest.approx(512.0, rel=1e-12)


def test_negative_integer_exponent_folds():
    e = parse_expr("t^-2")
    assert e == IntPow(Var(), -2)
    assert eval_expr(e, 2.0) == 0.25


def test_non_integer_exponent_stays_general():
    e = parse_expr("t^2.5")
    assert isinstance(e, BinOp) and e.op == "^"


@pytest.mark.parametrize(
    "text,t,expected",
    [
        ("sin(t)", 0.0, 0.0),
        ("cos(2*t)", math.pi / 2.0, -1.0),
        ("3/4*cos(t) - 1/4*cos(3*t)", 0.0, 0.5),
        ("pi", 0.0, math.pi),
        ("e", 0.0, math.e),
        ("abs(-t)", 3.0, 3.0),
        ("sqrt(t^2)", 3.0, 3.0),
        ("exp(log(t))", 2.5, 2.5),
    ],
)
def test_eval_values(text, t, expected):
    assert eval_expr(parse_expr(text), t) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize(
    "text,t",
    [
        ("sqrt(t)", -1.0),
        ("log(t)", 0.0),
        ("log(t)", -2.0),
        ("1/t", 0.0),
        ("t^0.5", -1.0),  # general power needs a positive base
        ("t^-1", 0.0),
    ],
)
def test_eval_domain_errors(text, t):
    with pytest.raises(DomainError):
        eval_expr(parse_expr(text), t)


def test_eval_matches_reference_on_random_corpus():
    """50 random expressions x 20 random t against an independently built
    Python implementation, 1e-14 relative."""
    rng = random.Random(101)
    for _ in range(50):
        text, fn = random_safe_expr(rng, rng.randint(1, 3))
        e = parse_expr(text)
        for _ in range(20):
            t = rng.uniform(-2.0, 2.0)
            got = eval_expr(e, t)
            want = fn(t)
            assert abs(got - want) <= 1e-14 * max(1.0, abs(got), abs(want)), text


def test_parse_format_parse_idempotent_on_corpus():
    rng = random.Random(202)
    for _ in range(120):
        text, _ = random_safe_expr(rng, rng.randint(1, 3))
        curve_text = f"({text}, {text}, {text})"
        first = parse_curve(curve_text)
        again = parse_curve(format_curve(first))
        assert first.components == again.components
        assert first.parameter_name == again.parameter_name


# --- hypothesis: round-trip on randomly built ASTs ---------------------------

_leaves = st.one_of(
    st.floats(min_value=0.0, max_value=1e6, allow_nan=False, allow_infinity=False).map(
        lambda v: Num(round(abs(v), 6))
    ),
    st.just(Var()),
    st.sampled_from([Const("pi"), Const("e")]),
)


def _non_integer_num():
    return st.floats(min_value=0.1, max_value=9.9, allow_nan=False).map(
        lambda v: Num(round(v, 3) + 0.0005)
    )


_ast = st.recursive(
    _leaves,
    lambda inner: st.one_of(
        st.builds(Neg, inner),
        st.builds(Call, st.sampled_from(FUNCTIONS), inner),
        st.builds(BinOp, st.sampled_from("+-*/"), inner, inner),
        st.builds(IntPow, inner, st.integers(min_value=-6, max_value=9)),
        st.builds(BinOp, st.just("^"), inner, _non_integer_num()),
    ),
    max_leaves=12,
)


@given(_ast)
def test_format_parse_roundtrip_structural(e):
    text = format_expr(e)
    assert parse_expr(text, "t") == e
