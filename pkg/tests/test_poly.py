from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tutteconv.poly import (
    L,
    VL,
    VX,
    VXI,
    VZ,
    X,
    XI,
    Z,
    MultiPoly,
    Variable,
    from_json,
    parse,
    render,
    substitute,
    to_json,
    truncate_series,
    xe,
    ye,
)

VARS = [X, L, XI, Z, xe(0), xe(1), ye(2)]


@st.composite
def polys(draw, max_terms=4):
    out = MultiPoly()
    for _ in range(draw(st.integers(0, max_terms))):
        coeff = draw(st.integers(-5, 5))
        term = MultiPoly.const(coeff)
        for v in draw(st.lists(st.sampled_from(VARS), max_size=3)):
            term = term * v
        out = out + term
    return out


def test_difference_of_squares():
    assert (L + X) * (L - X) == L**2 - X**2


def test_additive_identity():
    p = L**2 - 3 * L + 2
    assert p + 0 == p
    assert p + MultiPoly() == p


def test_product_of_linear_factors():
    assert (1 - Z) * (1 - 2 * Z) == 1 - 3 * Z + 2 * Z**2


def test_zero_coefficients_are_dropped():
    p = X + L - X
    assert p == L
    assert len(p) == 1
    assert (X - X).is_zero()


def test_substitute_into_size_corank():
    sc = L**2 + 3 * X * L + 3 * X**2 + X**3  # SC(U_2,3)
    assert substitute(sc, {VX: -1}) == L**2 - 3 * L + 2


def test_substitute_empty_bindings():
    p = L**2 - 3 * L + 2
    assert substitute(p, {}) == p


def test_substitute_lambda_xi():
    p = L**2 - 3 * L + 2
    assert substitute(p, {VL: L * XI}) == L**2 * XI**2 - 3 * L * XI + 2


def test_substitute_rational_point():
    p = X**2 + L
    assert p.substitute({VX: Fraction(1, 2)}) == L + Fraction(1, 4)
    assert p.evaluate({VX: Fraction(1, 2), VL: 3}) == Fraction(13, 4)
    with pytest.raises(ValueError):
        p.evaluate({VX: 1})


def test_truncate():
    p = 1 + Z + Z**2 + Z**3
    assert truncate_series(p, Variable("z"), 1) == 1 + Z
    assert truncate_series(p, Variable("z"), p.degree(VZ)) == p
    with pytest.raises(ValueError):
        truncate_series(p, Variable("z"), -1)


def test_truncation_commutes_with_product():
    a = sum((k + 1) * Z**k * (L + k) for k in range(7))
    b = sum((-1) ** k * Z**k * (X - k) for k in range(6))
    lhs = (truncate_series(a, VZ, 4) * truncate_series(b, VZ, 4)).truncate(VZ, 4)
    assert lhs == truncate_series(a * b, VZ, 4)


def test_render_canonical():
    assert render(L**2 * XI**2 - 3 * L * XI + 2) == "l^2*xi^2 - 3*l*xi + 2"
    assert render(MultiPoly()) == "0"
    assert render(-X + Fraction(1, 3)) == "-x + 1/3"
    assert render(xe(3) * ye(0)) == "x3*y0"


def test_parse_examples():
    assert parse("l^2*xi^2 - 3*l*xi + 2") == L**2 * XI**2 - 3 * L * XI + 2
    assert parse("-x + 1/3") == -X + Fraction(1, 3)
    assert parse("2*x0*x1 + x0 - 1") == 2 * xe(0) * xe(1) + xe(0) - 1
    with pytest.raises(ValueError):
        parse("2*q")


def test_variable_order_and_names():
    assert Variable("x", 2).name == "x2"
    assert Variable("xi").name == "xi"
    assert Variable("x") < Variable("x", 0) < Variable("y", 0) < Variable("l") < Variable("xi")
    with pytest.raises(ValueError):
        Variable("w")


def test_power_and_degree():
    p = (X + 1) ** 5
    assert p.degree() == 5
    assert p.coeff({VX: 2}) == 10
    assert MultiPoly().degree() == -1


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * 1 == a


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), st.integers(-3, 3), st.integers(-3, 3))
def test_substitute_is_homomorphism(a, b, u, v):
    bind = {VX: L + u, Variable("x", 0): Fraction(v, 2), VXI: X * v}
    assert substitute(a * b, bind) == substitute(a, bind) * substitute(b, bind)
    assert substitute(a + b, bind) == substitute(a, bind) + substitute(b, bind)


@settings(max_examples=60, deadline=None)
@given(polys(max_terms=6))
def test_text_and_json_round_trip(p):
    p = p * Fraction(1, 3) + Fraction(2, 7)
    assert parse(render(p)) == p
    assert from_json(to_json(p)) == p
