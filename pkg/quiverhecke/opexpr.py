"""
The operator-expression mini-language used by the ``act`` command.

::

    expr   :: ['-'] term [ ('+' | '-') term ]*
    term   :: factor [ '*' factor ]*
    factor :: '1(' i ')' | 'z(' i ',' t ')' | 's(' i ',' k ')' | rational | '(' expr ')'

``1(i)`` is the idempotent of index ``i``, ``z(i,t)`` multiplies component ``i`` by the coordinate
``e_t`` and ``s(i,k)`` is ``σ_i(s_k)``. Coset indices ``i`` and simple reflections ``k`` are 0-based;
lattice coordinates ``t`` run over ``1..N``. Parsing yields a recipe that can be
evaluated against any :py:class:`AlgebraData <quiverhecke.repdata.AlgebraData>`; index ranges are only
checked at evaluation time.

>>> str(parse_opexpr("s(0, 1) * s(0,1) - 1/2"))
's(0,1)*s(0,1) - 1/2'
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from pyparsing import Forward, Literal, Optional, ParseBaseException, Regex, Suppress, Word, ZeroOrMore, nums

from .algebra import TwistedOperator, gen_sigma, gen_unit, gen_var, identity_operator, op_add, op_mul, op_scale
from .exceptions import ParseError, UnknownIndex
from .repdata import AlgebraData


class Node:
    """ A parsed expression; ``location`` is the character offset it started at. """

    location = 0

    def evaluate(self, ctx: AlgebraData) -> TwistedOperator:
        raise NotImplementedError


def _check_index(ctx: AlgebraData, node: Node, i: int):
    if i not in ctx.table.indices:
        raise UnknownIndex("Index {} at char {} is not in 0..{}".format(i, node.location, len(ctx.table) - 1))


@dataclass
class Unit(Node):
    index: int
    location: int = 0

    def evaluate(self, ctx):
        _check_index(ctx, self, self.index)
        return gen_unit(ctx, self.index)

    def __str__(self):
        return "1({})".format(self.index)


@dataclass
class Variable(Node):
    index: int
    coordinate: int
    location: int = 0

    def evaluate(self, ctx):
        _check_index(ctx, self, self.index)
        if not 1 <= self.coordinate <= ctx.datum.ambient_rank:
            raise UnknownIndex(
                "Coordinate {} at char {} is not in 1..{}".format(self.coordinate, self.location, ctx.datum.ambient_rank)
            )
        return gen_var(ctx, self.index, self.coordinate)

    def __str__(self):
        return "z({},{})".format(self.index, self.coordinate)


@dataclass
class Sigma(Node):
    index: int
    simple: int
    location: int = 0

    def evaluate(self, ctx):
        _check_index(ctx, self, self.index)
        if not 0 <= self.simple < ctx.rank:
            raise UnknownIndex(
                "Simple reflection {} at char {} is not in 0..{}".format(self.simple, self.location, ctx.rank - 1)
            )
        return gen_sigma(ctx, self.index, self.simple)

    def __str__(self):
        return "s({},{})".format(self.index, self.simple)


@dataclass
class Scalar(Node):
    value: Fraction
    location: int = 0

    def evaluate(self, ctx):
        return op_scale(identity_operator(ctx), self.value)

    def __str__(self):
        return str(self.value)


@dataclass
class Product(Node):
    factors: List[Node]
    location: int = 0

    def evaluate(self, ctx):
        result = self.factors[0].evaluate(ctx)
        for factor in self.factors[1:]:
            result = op_mul(result, factor.evaluate(ctx))
        return result

    def __str__(self):
        return "*".join(_wrap(f) for f in self.factors)


@dataclass
class Sum(Node):
    terms: List[Tuple[int, Node]]
    location: int = 0

    def evaluate(self, ctx):
        result = TwistedOperator(ctx)
        for sign, term in self.terms:
            result = op_add(result, op_scale(term.evaluate(ctx), sign))
        return result

    def __str__(self):
        out = []
        for n, (sign, term) in enumerate(self.terms):
            if n == 0:
                out.append(("-" if sign < 0 else "") + str(term))
            else:
                out.append(("+ " if sign > 0 else "- ") + str(term))
        return " ".join(out)


def _wrap(node: Node) -> str:
    return "({})".format(node) if isinstance(node, Sum) else str(node)


def _build_sum(s, loc, tokens):
    tokens = list(tokens)
    terms = []
    sign = 1
    if isinstance(tokens[0], str):
        sign = -1
        tokens = tokens[1:]
    terms.append((sign, tokens[0]))
    for op, term in zip(tokens[1::2], tokens[2::2]):
        terms.append((1 if op == "+" else -1, term))
    if len(terms) == 1 and terms[0][0] > 0:
        return terms[0][1]
    return Sum(terms, location=loc)


def _build_product(s, loc, tokens):
    factors = list(tokens)
    if len(factors) == 1:
        return factors[0]
    return Product(factors, location=loc)


def _grammar():
    index = Word(nums).set_parse_action(lambda t: int(t[0]))
    lpar, rpar, comma = Suppress("("), Suppress(")"), Suppress(",")
    expr = Forward()
    unit = (Suppress(Literal("1") + "(") + index + rpar).set_parse_action(lambda s, loc, t: Unit(t[0], loc))
    variable = (Suppress(Literal("z") + "(") + index + comma + index + rpar).set_parse_action(
        lambda s, loc, t: Variable(t[0], t[1], loc)
    )
    sigma = (Suppress(Literal("s") + "(") + index + comma + index + rpar).set_parse_action(
        lambda s, loc, t: Sigma(t[0], t[1], loc)
    )
    rational = Regex(r"\d+(/\d+)?").set_parse_action(lambda s, loc, t: Scalar(Fraction(t[0]), loc))
    factor = unit | variable | sigma | rational | (lpar + expr + rpar)
    term = (factor + ZeroOrMore(Suppress("*") + factor)).set_parse_action(_build_product)
    expr <<= (Optional(Literal("-")) + term + ZeroOrMore((Literal("+") | Literal("-")) + term)).set_parse_action(
        _build_sum
    )
    return expr


GRAMMAR = _grammar()


def parse_opexpr(text: str) -> Node:
    """ Parse an operator expression into a recipe.

    :param str text: The expression.
    :raises: ParseError with the character offset of the problem
    """
    try:
        return GRAMMAR.parse_string(text, parse_all=True)[0]
    except ParseBaseException as err:
        raise ParseError("Cannot parse operator expression: {}".format(err.msg), err.loc)
    except ZeroDivisionError:
        raise ParseError("Zero denominator in a scalar")


def evaluate_opexpr(ctx: AlgebraData, text: str) -> TwistedOperator:
    """ Parse ``text`` and evaluate it against ``ctx``.

    :raises: ParseError, UnknownIndex
    """
    return parse_opexpr(text).evaluate(ctx)
