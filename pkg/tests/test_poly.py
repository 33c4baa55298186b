"""Exact arithmetic: canonical forms, field axioms, substitution, gcd."""

import random
from fractions import Fraction
from itertools import product

import pytest

from ybhecke.errors import (
    DivisionByZero,
    ExactDivisionError,
    SubstitutionSingular,
    ZeroPolynomial,
)
from ybhecke.poly import (
    LaurentPoly,
    RationalFunction,
    divide_by_difference,
    exact_div,
    lowest_homogeneous_component,
    poly_gcd,
    rename_rf,
    substitute,
)
from ybhecke.serialize import parse_poly, parse_scalar


def V(name):
    return LaurentPoly.variable(name)


def random_poly(rng, names, max_deg=3, max_terms=5):
    p = LaurentPoly.zero()
    for _ in range(rng.randint(1, max_terms)):
        exps = {}
        for v in names:
            e = rng.randint(0, max_deg)
            if e:
                exps[v] = e
        p = p + LaurentPoly.monomial(exps, rng.randint(-9, 9))
    return p


def random_rf(rng, names, max_deg=2):
    num = random_poly(rng, names, max_deg)
    den = LaurentPoly.zero()
    while den.is_zero:
        den = random_poly(rng, names, max_deg, max_terms=2)
    return RationalFunction(num, den)


# ----------------------------------------------------------------------
# polynomial arithmetic


def test_binomial_product():
    lhs = (V("x1") - V("y1")) * (V("x1") - V("y2"))
    rhs = parse_poly("x1^2 - x1*y1 - x1*y2 + y1*y2")
    assert lhs == rhs


def test_additive_identity():
    rng = random.Random(1)
    for _ in range(10):
        p = random_poly(rng, ["x1", "x2", "y1"])
        assert p + LaurentPoly.zero() == p


def test_staircase_expansion_against_bruteforce():
    # independent oracle: expand prod_{i+j<=4} (x_i - y_j) by nested loops
    # over raw exponent tuples, never touching LaurentPoly arithmetic
    factors = [(i, j) for i in range(1, 4) for j in range(1, 4) if i + j <= 4]
    assert len(factors) == 6
    oracle = {}
    for choice in product((0, 1), repeat=6):
        exps = [0] * 6  # x1 x2 x3 y1 y2 y3
        sign = 1
        for pick, (i, j) in zip(choice, factors):
            if pick == 0:
                exps[i - 1] += 1
            else:
                exps[3 + j - 1] += 1
                sign = -sign
        key = tuple(exps)
        oracle[key] = oracle.get(key, 0) + sign
    oracle = {k: c for k, c in oracle.items() if c}

    poly = LaurentPoly.one()
    for i, j in factors:
        poly = poly * (V(f"x{i}") - V(f"y{j}"))
    assert len(poly) == len(oracle) == 60
    for key, c in oracle.items():
        exps = {}
        for idx, e in enumerate(key):
            if e:
                exps[f"x{idx + 1}" if idx < 3 else f"y{idx - 2}"] = e
        assert poly.coefficient(exps) == c


def test_canonical_form_is_construction_order_independent():
    rng = random.Random(7)
    factors = [V("x1") - V("y1"), V("x1") - V("y2"), V("x2") - V("y1"), V("x1") + 2]
    ref = LaurentPoly.one()
    for f in factors:
        ref = ref * f
    for _ in range(5):
        order = factors[:]
        rng.shuffle(order)
        p = LaurentPoly.one()
        for f in order:
            p = p * f
        assert p.terms == ref.terms


def test_laurent_exponent_legality():
    assert V("x1") ** -1 == LaurentPoly.variable("x1", -1)
    with pytest.raises(ValueError):
        LaurentPoly.variable("y1", -1)
    with pytest.raises(ValueError):
        LaurentPoly.variable("q1", -2)


# ----------------------------------------------------------------------
# rational functions


def test_inverse_cancels():
    theta = parse_scalar("q1 + q2")
    assert (1 / theta) * theta == RationalFunction.one()


def test_q_ratio_identity():
    lhs = 1 / (parse_scalar("1 + q1/q2") * parse_scalar("1 + q2/q1"))
    rhs = parse_scalar("q1*q2/(q1+q2)^2")
    assert lhs == rhs


def test_antisymmetric_sum_vanishes_at_coincidence():
    f = parse_scalar("(u3/u2 - 1)/(q1+q2) + (u2/u3 - 1)/(q1+q2)")
    u3 = RationalFunction.variable("u3")
    assert substitute(f, {"u2": u3}).is_zero


def test_monomial_denominators_are_absorbed():
    f = parse_scalar("(x1 - y1)/(x1*x2)")
    assert f.is_polynomial
    assert f == parse_scalar("x2^-1 - x1^-1*x2^-1*y1")


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        parse_scalar("x1") / RationalFunction.zero()
    with pytest.raises(DivisionByZero):
        RationalFunction(LaurentPoly.one(), LaurentPoly.zero())


def test_field_axioms_on_random_functions():
    rng = random.Random(3)
    names = ["u1", "u2", "u3"]
    for _ in range(12):
        f, g, h = (random_rf(rng, names) for _ in range(3))
        assert (f + g) + h == f + (g + h)
        assert f * (g + h) == f * g + f * h
        if not f.is_zero:
            assert f * (1 / f) == RationalFunction.one()


# ----------------------------------------------------------------------
# substitution


def test_substitute_direct_image():
    f = parse_scalar("x1 - y1")
    img = substitute(f, {"x1": parse_scalar("u3"), "y1": parse_scalar("u1")})
    assert img == parse_scalar("u3 - u1")


def test_substitute_is_homomorphism():
    rng = random.Random(11)
    names = ["u1", "u2", "u3"]
    images = {
        "u1": parse_scalar("u2 + 1"),
        "u2": parse_scalar("u1*u3"),
    }
    for _ in range(8):
        f = random_rf(rng, names)
        g = random_rf(rng, names)
        assert substitute(f * g, images) == substitute(f, images) * substitute(g, images)


def test_reversal_substitution_is_involutive():
    rng = random.Random(5)
    names = ["u1", "u2", "u3"]
    rev = {"u1": "u3", "u3": "u1"}
    for _ in range(20):
        f = random_rf(rng, names)
        assert rename_rf(rename_rf(f, rev), rev) == f


def test_delta_under_window_reversal():
    n = 3
    theta = parse_scalar("q1+q2")
    delta = RationalFunction.one()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            delta = delta * (parse_scalar(f"u{j}/u{i}") - 1) / theta
    image = substitute(
        delta, {f"u{i}": RationalFunction.variable(f"u{4 - i}") for i in range(1, 4)}
    )
    expected = RationalFunction.one()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            expected = expected * (parse_scalar(f"u{4 - j}/u{4 - i}") - 1) / theta
    assert image == expected


def test_substitution_singular():
    f = parse_scalar("1/(q1+q2)")
    with pytest.raises(SubstitutionSingular):
        substitute(f, {"q1": -RationalFunction.variable("q2")})


# ----------------------------------------------------------------------
# lowest homogeneous component


def test_lowest_component_examples():
    p = parse_poly("1 + (u1-u2)*(u2-u3)")
    assert lowest_homogeneous_component(p, {"u1", "u2", "u3"}) == LaurentPoly.one()

    hom = parse_poly("(x1-y1)*(x2-y1)")
    assert lowest_homogeneous_component(hom, {"x1", "x2", "y1"}) == hom

    p = parse_poly("(x1+x2-x3-x5)*(1 + (x5-x4)*(x4-x2))")
    low = lowest_homogeneous_component(p, {f"x{i}" for i in range(1, 6)})
    assert low == parse_poly("x1+x2-x3-x5")


def test_lowest_component_errors():
    with pytest.raises(ZeroPolynomial):
        lowest_homogeneous_component(LaurentPoly.zero(), {"x1"})
    with pytest.raises(ValueError):
        lowest_homogeneous_component(V("x1") ** -1 + V("x2"), {"x1", "x2"})


# ----------------------------------------------------------------------
# gcd and exact division


def test_exact_division_roundtrip():
    rng = random.Random(13)
    names = ["x1", "x2", "y1"]
    for _ in range(12):
        p = random_poly(rng, names)
        d = LaurentPoly.zero()
        while d.is_zero:
            d = random_poly(rng, names, max_deg=2, max_terms=2)
        assert exact_div(p * d, d) == p


def test_exact_division_failure():
    with pytest.raises(ExactDivisionError):
        exact_div(parse_poly("x1^2 + y1"), parse_poly("x1 + y1"))


def test_gcd_divides_common_factor():
    rng = random.Random(17)
    names = ["u1", "u2", "q1"]
    for _ in range(8):
        r = LaurentPoly.zero()
        while r.is_zero or r.is_constant:
            r = random_poly(rng, names, max_deg=2, max_terms=2)
        p = random_poly(rng, names, max_deg=2, max_terms=2)
        q = random_poly(rng, names, max_deg=2, max_terms=2)
        g = poly_gcd(p * r, q * r)
        exact_div(g, r)  # must not raise: r divides the gcd
        exact_div(p * r, g)
        exact_div(q * r, g)


def test_divide_by_difference():
    p = parse_poly("x1^3*x2 - x1*x2^3")
    q = divide_by_difference(p, "x1", "x2")
    assert q * (V("x1") - V("x2")) == p
    f = parse_poly("x1^2*y1")
    anti = f - parse_poly("x2^2*y1")
    assert divide_by_difference(anti, "x1", "x2") == parse_poly("(x1+x2)*y1")


def test_simplify_reduces():
    f = RationalFunction(
        parse_poly("(x1-y1)*(x1+y1)"), parse_poly("(x1-y1)*(x2-y1)")
    )
    s = f.simplify()
    assert s == f
    assert s.den == parse_poly("x2 - y1")
