from fractions import Fraction

import pytest

from quiverhecke.algebra import gen_sigma, gen_unit, gen_var, identity_operator, zero_operator
from quiverhecke.exceptions import ParseError, UnknownIndex
from quiverhecke.opexpr import Product, Scalar, Sigma, Sum, Unit, Variable, evaluate_opexpr, parse_opexpr


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1(0)", Unit(0)),
        ("z(1, 2)", Variable(1, 2)),
        ("s(0,1)", Sigma(0, 1)),
        ("3/4", Scalar(Fraction(3, 4))),
    ],
)
def test_atoms(text, expected):
    node = parse_opexpr(text)
    assert type(node) is type(expected)
    assert str(node) == str(expected)


def test_structure():
    node = parse_opexpr("-z(0,1) + 2*s(0,1)*(1(0) - 1(1))")
    assert isinstance(node, Sum)
    assert [sign for sign, _ in node.terms] == [-1, 1]
    product = node.terms[1][1]
    assert isinstance(product, Product)
    assert len(product.factors) == 3
    assert str(node) == "-z(0,1) + 2*s(0,1)*(1(0) - 1(1))"


@pytest.mark.parametrize("text", ["", "s(0,", "z(0)", "1(0) +", "s(0,1) s(0,1)", "x(0)", "1(0))"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_opexpr(text)


def test_parse_error_location():
    with pytest.raises(ParseError) as info:
        parse_opexpr("1(0) + q")
    assert info.value.location is not None
    assert info.value.location >= 4


def test_evaluation(nilhecke_a2, skew_a2):
    ctx = nilhecke_a2
    assert evaluate_opexpr(ctx, "s(0,0)*s(0,0)") == zero_operator(ctx)
    assert evaluate_opexpr(ctx, "1(0)") == gen_unit(ctx, 0)
    assert evaluate_opexpr(ctx, "2") == identity_operator(ctx).scale(2)
    assert evaluate_opexpr(ctx, "z(0,2)*s(0,0) - s(0,0)*z(0,2)") == (
        gen_var(ctx, 0, 2) * gen_sigma(ctx, 0, 0) - gen_sigma(ctx, 0, 0) * gen_var(ctx, 0, 2)
    )
    assert evaluate_opexpr(skew_a2, "s(0,1)*s(0,1) + 2*s(0,1)") == zero_operator(skew_a2)


@pytest.mark.parametrize("text", ["1(3)", "z(0,0)", "z(0,3)", "s(0,2)", "s(4,0)"])
def test_unknown_indices(nilhecke_a2, text):
    with pytest.raises(UnknownIndex):
        evaluate_opexpr(nilhecke_a2, text)


def test_recipe_reuse(half_integral):
    recipe = parse_opexpr("s(0,0)*s(1,0)")
    value = recipe.evaluate(half_integral)
    assert value == gen_sigma(half_integral, 0, 0) * gen_sigma(half_integral, 1, 0)
