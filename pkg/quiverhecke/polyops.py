"""
Exact polynomials and rational functions over ``QQ`` with the Weyl action and Demazure operators.

Polynomials are sympy sparse ring elements (``PolyElement``) in the coordinate functions
``e1 … eN`` of the ambient lattice. Rational functions only ever need denominators that are products
of linear forms, so :py:class:`RatFun` keeps the denominator as a multiset of primitive integer
vectors and cancels eagerly.
"""

import logging
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import SympifyError, sympify
from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

from .exceptions import (
    DivisionByZeroDenominator,
    InternalDivisibilityFailure,
    NotLinearlyFactorable,
    ParseError,
)
from .rootcore import RootDatum, WeylElement, alternating_word, coxeter_order

logger = logging.getLogger(__name__)

Poly = PolyElement


@lru_cache(maxsize=None)
def poly_ring(n: int) -> PolyRing:
    """ The polynomial ring ``QQ[e1, …, en]`` with graded lexicographic order, shared per rank. """
    return PolyRing(",".join("e{}".format(k + 1) for k in range(n)), QQ, grlex)


def to_qq(value):
    """ Convert an int, :py:class:`~fractions.Fraction` or ``"p/q"`` string to a ``QQ`` element. """
    if isinstance(value, str):
        value = Fraction(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return QQ(value)


def qq_to_str(c) -> str:
    c = QQ.convert(c)
    if c.denominator == 1:
        return str(c.numerator)
    return "{}/{}".format(c.numerator, c.denominator)


def linear_form(ring: PolyRing, v: Sequence[int]) -> Poly:
    """ The linear form ``Σ v_k e_k`` of an integer (or rational) vector. """
    f = ring.zero
    for k, x in enumerate(v):
        if x:
            f += ring.gens[k] * to_qq(x)
    return f


def monomial(ring: PolyRing, exponents: Sequence[int]) -> Poly:
    return ring({tuple(int(x) for x in exponents): QQ.one})


def poly_degree(f: Poly) -> Optional[int]:
    """ Total polynomial degree, ``None`` for the zero polynomial. """
    if f.is_zero:
        return None
    return max(sum(m) for m in f.monoms())


def is_homogeneous(f: Poly) -> bool:
    return len({sum(m) for m in f.monoms()}) <= 1


def monomials_up_to(ring: PolyRing, degree: int) -> List[Poly]:
    """ Every monomial of total degree at most ``degree``, in increasing degree. """
    found = []
    for d in range(degree + 1):
        for exps in cartesian(range(d + 1), repeat=ring.ngens):
            if sum(exps) == d:
                found.append(monomial(ring, exps))
    return found


def substitute_linear(f: Poly, w) -> Poly:
    """ The Weyl action on polynomials: ``e_k ↦`` the linear form of column ``k`` of ``w``.

    :param f: Polynomial.
    :param w: :py:class:`WeylElement <quiverhecke.rootcore.WeylElement>` or integer matrix.
    """
    matrix = w.matrix if isinstance(w, WeylElement) else w
    ring = f.ring
    if isinstance(w, WeylElement) and w.is_identity:
        return f
    images = [(ring.gens[k], linear_form(ring, [int(x) for x in matrix[:, k]])) for k in range(ring.ngens)]
    return f.compose(images)


def primitive(v: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """ Split an integer vector as ``scalar * p`` with ``p`` primitive and its first nonzero entry positive. """
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        raise DivisionByZeroDenominator("The zero vector has no linear form to divide by")
    first = next(int(x) for x in v if x)
    if first < 0:
        g = -g
    return g, tuple(int(x) // g for x in v)


class RatFun:
    """ A rational function ``numerator / Π ℓ_v^{m_v}`` with ``ℓ_v`` the linear form of a primitive vector.

    Arithmetic is exact, common factors are cancelled as soon as they divide the numerator, and
    equality is decided by cross-multiplication.

    :param numerator: Polynomial.
    :param denominator: Mapping primitive vector → multiplicity.
    """

    __slots__ = ("numerator", "denominator")
    __hash__ = None

    def __init__(self, numerator: Poly, denominator: Optional[Dict[Tuple[int, ...], int]] = None):
        self.numerator = numerator
        self.denominator = Counter()
        if denominator:
            for v, m in denominator.items():
                if m:
                    self.denominator[tuple(v)] += m
        self._reduce()

    @property
    def ring(self) -> PolyRing:
        return self.numerator.ring

    def _reduce(self):
        if self.numerator.is_zero:
            self.denominator = Counter()
            return
        for v in list(self.denominator):
            ell = linear_form(self.ring, v)
            while self.denominator[v]:
                q, r = self.numerator.div(ell)
                if r:
                    break
                self.numerator = q
                self.denominator[v] -= 1
            if not self.denominator[v]:
                del self.denominator[v]

    @classmethod
    def coerce(cls, ring: PolyRing, value) -> "RatFun":
        if isinstance(value, RatFun):
            return value
        if isinstance(value, PolyElement):
            return cls(value)
        return cls(ring(to_qq(value)))

    @classmethod
    def inverse_linear(cls, ring: PolyRing, v: Sequence[int], power: int = 1) -> "RatFun":
        """ ``ℓ_v^{-power}`` """
        scalar, p = primitive(v)
        return cls(ring(QQ(1, scalar) ** power), {p: power})

    def denominator_poly(self) -> Poly:
        result = self.ring.one
        for v, m in sorted(self.denominator.items()):
            result *= linear_form(self.ring, v) ** m
        return result

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def is_polynomial(self) -> bool:
        return not self.denominator

    def to_poly(self) -> Optional[Poly]:
        """ The polynomial this equals, or ``None`` when it is not one. """
        return self.numerator if self.is_polynomial() else None

    def __add__(self, other):
        other = RatFun.coerce(self.ring, other)
        common = self.denominator | other.denominator
        left = self.numerator * _linear_product(self.ring, common - self.denominator)
        right = other.numerator * _linear_product(self.ring, common - other.denominator)
        return RatFun(left + right, common)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.numerator, self.denominator)

    def __sub__(self, other):
        return self + (-RatFun.coerce(self.ring, other))

    def __rsub__(self, other):
        return RatFun.coerce(self.ring, other) - self

    def __mul__(self, other):
        other = RatFun.coerce(self.ring, other)
        return RatFun(self.numerator * other.numerator, self.denominator + other.denominator)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        """ ``1 / self``; the numerator must split into linear forms without constant terms.

        :raises: DivisionByZeroDenominator, NotLinearlyFactorable
        """
        if self.is_zero:
            raise DivisionByZeroDenominator("Cannot invert the zero rational function")
        coeff, factors = self.numerator.factor_list()
        denominator = Counter()
        scalar = QQ.convert(coeff)
        for factor, exp in factors:
            v = linear_vector(factor)
            if v is None:
                raise NotLinearlyFactorable("Factor {} is not a linear form".format(factor))
            s, p = primitive(v[1])
            scalar *= (v[0] * s) ** exp
            denominator[p] += exp
        return RatFun(self.denominator_poly() * (QQ.one / scalar), denominator)

    def __truediv__(self, other):
        return self * RatFun.coerce(self.ring, other).inverse()

    def __rtruediv__(self, other):
        return RatFun.coerce(self.ring, other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = RatFun(self.ring.one)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, PolyElement)):
            other = RatFun.coerce(self.ring, other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.numerator * other.denominator_poly() == other.numerator * self.denominator_poly()

    def act(self, w: WeylElement) -> "RatFun":
        """ Apply a Weyl group element to numerator and denominator. """
        if w.is_identity:
            return self
        numerator = substitute_linear(self.numerator, w)
        denominator = Counter()
        for v, m in self.denominator.items():
            s, p = primitive(w.act(v))
            numerator = numerator * QQ(1, s) ** m
            denominator[p] += m
        return RatFun(numerator, denominator)

    def degree(self) -> Optional[int]:
        """ Polynomial degree of numerator minus that of the denominator, ``None`` for zero. """
        d = poly_degree(self.numerator)
        return None if d is None else d - sum(self.denominator.values())

    def is_homogeneous(self) -> bool:
        return is_homogeneous(self.numerator)

    def __repr__(self):
        return "RatFun({})".format(self)

    def __str__(self):
        if not self.denominator:
            return str(self.numerator)
        return "({}) / ({})".format(self.numerator, self.denominator_poly())

    def to_json(self):
        return {"numerator": poly_to_json(self.numerator), "denominator": poly_to_json(self.denominator_poly())}


def _linear_product(ring: PolyRing, factors: Counter) -> Poly:
    result = ring.one
    for v, m in factors.items():
        if m > 0:
            result *= linear_form(ring, v) ** m
    return result


def linear_vector(f: Poly):
    """ ``(1, v)`` with ``f`` the linear form of the rational vector ``v``, or ``None`` if ``f`` is not one.

    The vector is scaled to integers and the scaling returned as the first entry, so that
    ``f = scale * linear_form(v)``.
    """
    if f.is_zero or any(sum(m) != 1 for m in f.monoms()):
        return None
    coeffs = [QQ.zero] * f.ring.ngens
    for m, c in f.terms():
        coeffs[m.index(1)] = QQ.convert(c)
    denom = 1
    for c in coeffs:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    return QQ(1, denom), tuple(int(c * denom) for c in coeffs)


def root_form(datum: RootDatum, v: Sequence[int]) -> Poly:
    return linear_form(poly_ring(datum.ambient_rank), v)


def simple_form(datum: RootDatum, j: int) -> Poly:
    """ ``α_j`` as a linear form. """
    return root_form(datum, datum.simple_roots[j])


def demazure(datum: RootDatum, j: int, f: Poly) -> Poly:
    """ The divided difference ``δ_j(f) = (s_j(f) - f) / α_j``.

    :raises: InternalDivisibilityFailure
    """
    difference = substitute_linear(f, datum.simple_reflection(j)) - f
    q, r = difference.div(simple_form(datum, j))
    if r:
        raise InternalDivisibilityFailure("{} is not divisible by α_{}".format(difference, j))
    return q


def demazure_word(datum: RootDatum, word: Sequence[int], f: Poly) -> Poly:
    """ ``δ_{w_1} δ_{w_2} ⋯ (f)``, the rightmost operator applied first. """
    for j in reversed(tuple(word)):
        f = demazure(datum, j, f)
    return f


def demazure_product_rule_check(datum: RootDatum, j: int, x: Poly, f: Poly) -> bool:
    """ ``δ(xf) = δ(x) f + s(x) δ(f)`` """
    s = datum.simple_reflection(j)
    lhs = demazure(datum, j, x * f)
    rhs = demazure(datum, j, x) * f + substitute_linear(x, s) * demazure(datum, j, f)
    return lhs == rhs


def demazure_square_check(datum: RootDatum, j: int, f: Poly) -> bool:
    return demazure(datum, j, demazure(datum, j, f)).is_zero


def demazure_braid_check(datum: RootDatum, s: int, t: int, f: Poly) -> bool:
    """ ``δ_sδ_tδ_s⋯ = δ_tδ_sδ_t⋯`` with ``m_st`` factors on each side. """
    m = coxeter_order(datum, s, t)
    return demazure_word(datum, alternating_word(s, t, m), f) == demazure_word(datum, alternating_word(t, s, m), f)


def action_composition_check(w1: WeylElement, w2: WeylElement, f: Poly) -> bool:
    """ ``w1(w2(f)) = (w1 w2)(f)`` """
    return substitute_linear(substitute_linear(f, w2), w1) == substitute_linear(f, w1 * w2)


def poly_to_json(f: Poly):
    """ Terms in descending graded lexicographic order as ``[exponents, "p/q"]`` pairs. """
    return [[list(m), qq_to_str(c)] for m, c in f.terms()]


def poly_from_json(ring: PolyRing, data: Iterable) -> Poly:
    return ring({tuple(int(x) for x in m): to_qq(c) for m, c in data})


def ratfun_to_json(c: RatFun):
    return c.to_json()


def poly_from_text(ring: PolyRing, text: str) -> Poly:
    """ Parse ``"e1^2 - 1/2*e2"`` style input into ``ring``.

    :raises: ParseError
    """
    try:
        return ring.from_expr(sympify(text))
    except (SympifyError, ValueError, TypeError) as err:
        raise ParseError("Cannot read {!r} as a polynomial in {}: {}".format(text, ", ".join(map(str, ring.symbols)), err))
