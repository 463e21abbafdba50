"""
Fixed-point localization: Euler classes, the embedding ``Θ`` of ``⊕_i ℰ_i`` into vectors indexed by
``𝕎``, the fixed-point convolution algebra and the geometric localization of the ``σ`` generators.

Matrices multiply with the rescaled rule ``(A * B)_{x,y} = Σ_w A_{x,w} Λ_w B_{w,y}``. A
:py:class:`Localization` caches ``Λ_w`` for one :py:class:`AlgebraData <quiverhecke.repdata.AlgebraData>`.
"""

import logging
from collections import Counter
from typing import Dict, Iterable, Tuple

from sympy.polys.rings import PolyRing

from .algebra import ModuleElement, TwistedOperator, apply, gen_sigma, gen_unit, gen_var, identity_operator
from .exceptions import ZeroEulerClass, ZeroWeight
from .polyops import Poly, RatFun, linear_form, monomials_up_to, ratfun_to_json, substitute_linear
from .repdata import AlgebraData, fiber_pair_weights, fiber_weights, shortage_weights
from .report import CheckReport
from .rootcore import RootDatum, Vector, WeylElement, all_elements, length, reduced_word, word_to_str
from .subgroup import SubSystem

logger = logging.getLogger(__name__)

FixedPointVector = Dict[WeylElement, RatFun]
FixedPointMatrix = Dict[Tuple[WeylElement, WeylElement], RatFun]


def euler(ring: PolyRing, weights: Counter) -> Poly:
    """ ``eu(M) = Π α^{mult}`` over the weights of ``M``.

    :raises: ZeroWeight
    """
    result = ring.one
    for a, m in sorted(weights.items()):
        if m <= 0:
            continue
        if not any(a):
            raise ZeroWeight("Euler class of a multiset containing the zero weight")
        result *= linear_form(ring, a) ** m
    return result


def tangent_n(sub: SubSystem, w: WeylElement) -> Counter:
    """ ``𝔫_w = Φ ∩ w(Φ̲⁻)`` """
    inverse = w.inverse()
    return Counter(a for a in sub.roots if not sub.datum.is_positive(inverse.act(a)))


def tangent_m(sub: SubSystem, x: WeylElement, y: WeylElement) -> Counter:
    """ ``𝔪_{x,y} = 𝔫_y ∖ (𝔫_x ∩ 𝔫_y)`` """
    n_y = tangent_n(sub, y)
    return n_y - (tangent_n(sub, x) & n_y)


class Localization:
    """ Localization data of one configuration, with ``Λ_w`` cached per element.

    :param AlgebraData ctx: The assembled configuration.
    """

    def __init__(self, ctx: AlgebraData):
        self.ctx = ctx
        self.datum: RootDatum = ctx.datum
        self.sub: SubSystem = ctx.sub
        self.ring: PolyRing = ctx.ring
        self._lambda: Dict[WeylElement, Poly] = {}
        self._lambda_inverse: Dict[WeylElement, RatFun] = {}

    def lambda_(self, w: WeylElement) -> Poly:
        """ ``Λ_w = eu(F_w ⊔ 𝔫_w)`` """
        if w not in self._lambda:
            self._lambda[w] = euler(self.ring, fiber_weights(self.ctx.springer, w) + tangent_n(self.sub, w))
        return self._lambda[w]

    def lambda_inverse(self, w: WeylElement) -> RatFun:
        if w not in self._lambda_inverse:
            value = self.lambda_(w)
            if value.is_zero:
                raise ZeroEulerClass("Λ vanishes at {}".format(word_to_str(reduced_word(self.datum, w))))
            self._lambda_inverse[w] = RatFun(value).inverse()
        return self._lambda_inverse[w]

    def stabilizes(self, x: WeylElement, j: int) -> bool:
        """ Whether ``x s x^{-1} ∈ W``, i.e. ``xs`` lies in the coset of ``x``. """
        table = self.ctx.table
        return table.coset_of(x * self.datum.simple_reflection(j)) == table.coset_of(x)

    def shortage(self, x: WeylElement, j: int) -> Poly:
        """ ``Q_x(s) = eu(F_x - F_{x,xs})`` """
        return euler(self.ring, shortage_weights(self.ctx.springer, x, j))

    def eu_zbar_s(self, x: WeylElement, j: int) -> RatFun:
        """ The Euler class of ``Z̄^s`` at ``(x, xs)``; at ``(x, x)`` it is the negative of this when ``x`` stabilises. """
        value = RatFun(self.lambda_(x)) / RatFun(self.shortage(x, j))
        if self.stabilizes(x, j):
            value = value * RatFun(linear_form(self.ring, x.act(self.datum.simple_roots[j])))
        return value

    def eu_zbar_w(self, x: WeylElement, w: WeylElement) -> Poly:
        """ ``eu(F_{x,xw} ⊔ 𝔫_x ⊔ 𝔪_{x,xw})`` """
        y = x * w
        weights = fiber_pair_weights(self.ctx.springer, x, y) + tangent_n(self.sub, x) + tangent_m(self.sub, x, y)
        return euler(self.ring, weights)

    def theta(self, m: ModuleElement) -> FixedPointVector:
        """ ``Θ(c) = Σ_{w ∈ Wx_i} w(c) Λ_w^{-1} ψ_w`` summed over components. """
        result: FixedPointVector = {}
        for i, f in m.components.items():
            for w in self.ctx.table.orbit(i):
                value = RatFun(substitute_linear(f, w)) * self.lambda_inverse(w)
                result[w] = result[w] + value if w in result else value
        return _prune(result)

    def localize_op(self, a: TwistedOperator) -> FixedPointMatrix:
        """ A term ``(i, c, w)`` contributes ``v(c) / Λ_v`` at ``(v, vw)`` for ``v ∈ Wx_i``. """
        result: FixedPointMatrix = {}
        for (i, w), c in a.terms.items():
            for v in self.ctx.table.orbit(i):
                key = (v, v * w)
                value = c.act(v) * self.lambda_inverse(v)
                result[key] = result[key] + value if key in result else value
        return _prune(result)

    def localize_unit(self, i: int) -> FixedPointMatrix:
        return {(x, x): self.lambda_inverse(x) for x in self.ctx.table.orbit(i)}

    def localize_sigma(self, i: int, j: int) -> FixedPointMatrix:
        """ The multiplicity-formula expansion of ``[Z̄^s_{i,is}]``. """
        s = self.datum.simple_reflection(j)
        result: FixedPointMatrix = {}
        for x in self.ctx.table.orbit(i):
            entry = self.eu_zbar_s(x, j).inverse()
            result[(x, x * s)] = entry
            if self.ctx.stabilized(i, j):
                result[(x, x)] = -entry
        return result

    def fp_mul(self, a: FixedPointMatrix, b: FixedPointMatrix) -> FixedPointMatrix:
        """ ``(A * B)_{x,y} = Σ_w A_{x,w} Λ_w B_{w,y}`` """
        by_row: Dict[WeylElement, list] = {}
        for (w, y), c in b.items():
            by_row.setdefault(w, []).append((y, c))
        result: FixedPointMatrix = {}
        for (x, w), c in a.items():
            scaled = c * self.lambda_(w)
            for y, c2 in by_row.get(w, ()):
                value = scaled * c2
                result[(x, y)] = result[(x, y)] + value if (x, y) in result else value
        return _prune(result)

    def fp_apply(self, a: FixedPointMatrix, v: FixedPointVector) -> FixedPointVector:
        """ ``(A * v)_x = Σ_w A_{x,w} Λ_w v_w`` """
        result: FixedPointVector = {}
        for (x, w), c in a.items():
            if w in v:
                value = c * self.lambda_(w) * v[w]
                result[x] = result[x] + value if x in result else value
        return _prune(result)

    def fp_unit(self) -> FixedPointMatrix:
        return {(x, x): self.lambda_inverse(x) for x in all_elements(self.datum)}


def _prune(entries: dict) -> dict:
    return {k: v for k, v in entries.items() if not v.is_zero}


def fp_equal(a: dict, b: dict) -> bool:
    if a.keys() != b.keys():
        return False
    return all(a[k] == b[k] for k in a)


def lambda_(loc: Localization, w: WeylElement) -> Poly:
    return loc.lambda_(w)


def eu_Zbar_s(loc: Localization, x: WeylElement, j: int) -> RatFun:
    return loc.eu_zbar_s(x, j)


def eu_Zbar_w(loc: Localization, x: WeylElement, w: WeylElement) -> Poly:
    return loc.eu_zbar_w(x, w)


def theta(loc: Localization, m: ModuleElement) -> FixedPointVector:
    return loc.theta(m)


def fp_mul(loc: Localization, a: FixedPointMatrix, b: FixedPointMatrix) -> FixedPointMatrix:
    return loc.fp_mul(a, b)


def fp_apply(loc: Localization, a: FixedPointMatrix, v: FixedPointVector) -> FixedPointVector:
    return loc.fp_apply(a, v)


def localize_sigma(loc: Localization, i: int, j: int) -> FixedPointMatrix:
    return loc.localize_sigma(i, j)


def localize_op(loc: Localization, a: TwistedOperator) -> FixedPointMatrix:
    return loc.localize_op(a)


def _test_degree(ctx: AlgebraData) -> int:
    return min(3, ctx.degree_bound)


def theta_equivariance_check(loc: Localization) -> CheckReport:
    """ ``Λ_x Θ(w·c)_x = Λ_{xw} Θ(c)_{xw}`` for simple ``w`` and monomials ``c``, where ``w·c`` is ``w(c)``
    placed in component ``iw^{-1}``. """
    ctx = loc.ctx
    report = CheckReport("theta_equivariance")
    for j in range(ctx.rank):
        s = loc.datum.simple_reflection(j)
        for i in ctx.table.indices:
            moved = ctx.table.act(i, s.inverse())
            for f in monomials_up_to(ctx.ring, _test_degree(ctx)):
                before = loc.theta(ModuleElement.single(ctx, i, f))
                after = loc.theta(ModuleElement.single(ctx, moved, substitute_linear(f, s)))
                for x in all_elements(loc.datum):
                    lhs = after.get(x, RatFun(ctx.ring.zero)) * loc.lambda_(x)
                    rhs = before.get(x * s, RatFun(ctx.ring.zero)) * loc.lambda_(x * s)
                    if lhs != rhs:
                        report.fail({"simple": j, "index": i, "element": list(reduced_word(loc.datum, x)), "monomial": str(f)})
    return report


def theta_algebra_check(loc: Localization) -> CheckReport:
    """ ``Θ`` is multiplicative after removing the ``Λ`` normalisation, and injective on monomials. """
    ctx = loc.ctx
    report = CheckReport("theta_algebra")
    monomials = monomials_up_to(ctx.ring, min(2, ctx.degree_bound))
    for i in ctx.table.indices:
        normalised = {}
        for f in monomials:
            image = loc.theta(ModuleElement.single(ctx, i, f))
            normalised[f] = {w: c * loc.lambda_(w) for w, c in image.items()}
        for f in monomials:
            for g in monomials:
                product = loc.theta(ModuleElement.single(ctx, i, f * g))
                for w, c in product.items():
                    if c * loc.lambda_(w) != normalised[f][w] * normalised[g][w]:
                        report.fail({"index": i, "monomials": [str(f), str(g)]})
                        break
        images = [loc.theta(ModuleElement.single(ctx, i, f)) for f in monomials_up_to(ctx.ring, _test_degree(ctx))]
        for a in range(len(images)):
            for b in range(a + 1, len(images)):
                if fp_equal(images[a], images[b]):
                    report.fail({"index": i, "problem": "Θ not injective on monomials"})
    return report


def pathway_check(loc: Localization) -> CheckReport:
    """ The operator pathway and the multiplicity formula agree on every generator, and ``Θ`` intertwines. """
    ctx = loc.ctx
    report = CheckReport("pathway")
    for i in ctx.table.indices:
        if not fp_equal(loc.localize_op(gen_unit(ctx, i)), loc.localize_unit(i)):
            report.fail({"generator": "1", "index": i})
        for t in range(loc.datum.ambient_rank):
            expected = {
                (x, x): RatFun(substitute_linear(ctx.ring.gens[t], x)) * loc.lambda_inverse(x)
                for x in ctx.table.orbit(i)
            }
            if not fp_equal(loc.localize_op(gen_var(ctx, i, t + 1)), expected):
                report.fail({"generator": "z", "index": i, "variable": t + 1})
        for j in range(ctx.rank):
            geometric = loc.localize_sigma(i, j)
            if not fp_equal(loc.localize_op(gen_sigma(ctx, i, j)), geometric):
                report.fail({"generator": "sigma", "index": i, "simple": j})
            source = ctx.act(i, j)
            for f in monomials_up_to(ctx.ring, _test_degree(ctx)):
                m = ModuleElement.single(ctx, source, f)
                lhs = loc.fp_apply(geometric, loc.theta(m))
                rhs = loc.theta(apply(gen_sigma(ctx, i, j), m))
                if not fp_equal(lhs, rhs):
                    report.fail({"intertwining": True, "index": i, "simple": j, "monomial": str(f)})
    if not fp_equal(loc.localize_op(identity_operator(ctx)), loc.fp_unit()):
        report.fail({"generator": "identity"})
    return report


def euler_identities_check(loc: Localization) -> CheckReport:
    """ Tangent-space Euler classes, agreement of the two ``Z̄^s`` formulas and, for Borel data, the sign law
    ``Λ_x = (-1)^{1+h} Λ_{xs}`` and the power forms. """
    ctx, datum, ring = loc.ctx, loc.datum, loc.ring
    report = CheckReport("euler_identities")
    for x in all_elements(datum):
        i = ctx.table.coset_of(x)
        word = list(reduced_word(datum, x))
        for j in range(ctx.rank):
            s = datum.simple_reflection(j)
            image = linear_form(ring, x.act(datum.simple_roots[j]))
            stable = loc.stabilizes(x, j)
            forward = euler(ring, tangent_m(loc.sub, x, x * s))
            backward = euler(ring, tangent_m(loc.sub, x * s, x))
            if stable and (forward != image or backward != -image):
                report.fail({"element": word, "simple": j, "problem": "eu(𝔪) at a stabilised wall"})
            if not stable and (tangent_n(loc.sub, x) != tangent_n(loc.sub, x * s) or forward != ring.one):
                report.fail({"element": word, "simple": j, "problem": "𝔫 or 𝔪 at a moving wall"})
            if RatFun(loc.eu_zbar_w(x, s)) != loc.eu_zbar_s(x, j):
                report.fail({"element": word, "simple": j, "problem": "general and simple Z̄ formulas differ"})
            if ctx.springer.borel_flag:
                h = ctx.h[(i, j)]
                if stable:
                    if loc.lambda_(x) != (-1) ** (1 + h) * loc.lambda_(x * s):
                        report.fail({"element": word, "simple": j, "problem": "sign law"})
                    power = RatFun(image) ** (1 - h) * RatFun(loc.lambda_(x))
                else:
                    power = RatFun(image) ** (-h) * RatFun(loc.lambda_(x))
                if loc.eu_zbar_s(x, j) != power:
                    report.fail({"element": word, "simple": j, "problem": "power form"})
    return report


def leading_term_check(loc: Localization, j: int, w: WeylElement) -> CheckReport:
    """ Leading coefficients of ``[Z̄^s] * [Z̄^w]`` and ``[Z̄^{sw}]`` agree at every ``(u, u·sw)``.

    Only evaluated for Borel data; ``l(sw) = l(w) + 1`` is required.
    """
    datum = loc.datum
    report = CheckReport("leading_term")
    s = datum.simple_reflection(j)
    report.details.update(simple=j, element=list(reduced_word(datum, w)))
    if not loc.ctx.springer.borel_flag:
        report.details["skipped"] = "non-Borel data"
        return report
    if length(datum, s * w) != length(datum, w) + 1:
        report.details["skipped"] = "l(sw) != l(w) + 1"
        return report
    sw = s * w
    for u in all_elements(datum):
        us = u * s
        lhs = loc.eu_zbar_s(u, j).inverse() * loc.lambda_(us) * RatFun(loc.eu_zbar_w(us, w)).inverse()
        rhs = RatFun(loc.eu_zbar_w(u, sw)).inverse()
        if lhs != rhs:
            report.fail({"element": list(reduced_word(datum, u))})
    return report


def leading_term_report(loc: Localization) -> CheckReport:
    """ :py:func:`leading_term_check` over every length-additive pair ``(s, w)``. """
    datum = loc.datum
    report = CheckReport("leading_terms")
    pairs = 0
    for w in all_elements(datum):
        for j in range(datum.rank):
            single = leading_term_check(loc, j, w)
            if "skipped" in single.details:
                if single.details["skipped"] == "non-Borel data":
                    report.details["skipped"] = "non-Borel data"
                    return report
                continue
            pairs += 1
            report.violations.extend(single.violations)
    report.details["pairs"] = pairs
    return report


def inversion_set(datum: RootDatum, weights: Iterable[Vector], y: WeylElement) -> Counter:
    """ ``Φ_F(y) = F ∖ (F ∩ yF)`` """
    weights = frozenset(weights)
    return Counter(a for a in weights if y.inverse().act(a) not in weights)


def inversion_multiset_check(datum: RootDatum, weights: Iterable[Vector], x: WeylElement, w: WeylElement, j: int) -> bool:
    """ ``x(sΦ_F(w) ⊔ Φ_F(s)) = x(Φ_F(sw))`` for ``l(sw) = l(w) + 1``. """
    weights = frozenset(weights)
    s = datum.simple_reflection(j)
    left = Counter(x.act(s.act(a)) for a in inversion_set(datum, weights, w).elements())
    left.update(x.act(a) for a in inversion_set(datum, weights, s).elements())
    right = Counter(x.act(a) for a in inversion_set(datum, weights, s * w).elements())
    return left == right


def inversion_multiset_report(datum: RootDatum, weights: Iterable[Vector]) -> CheckReport:
    """ :py:func:`inversion_multiset_check` over every ``x`` and length-additive ``(s, w)``. """
    weights = frozenset(weights)
    report = CheckReport("inversion_multiset")
    elements = all_elements(datum)
    for w in elements:
        for j in range(datum.rank):
            if length(datum, datum.simple_reflection(j) * w) != length(datum, w) + 1:
                continue
            for x in elements:
                if not inversion_multiset_check(datum, weights, x, w, j):
                    report.fail({"x": list(reduced_word(datum, x)), "w": list(reduced_word(datum, w)), "simple": j})
    return report


def vector_to_json(datum: RootDatum, v: FixedPointVector):
    return [
        {"word": list(reduced_word(datum, w)), "value": ratfun_to_json(c)}
        for w, c in sorted(v.items(), key=lambda kv: (length(datum, kv[0]), reduced_word(datum, kv[0])))
    ]


def matrix_to_json(datum: RootDatum, m: FixedPointMatrix):
    """ Sparse ``(x-word, y-word, numerator, denominator)`` rows in canonical order. """

    def key(item):
        (x, y), _ = item
        return length(datum, x), reduced_word(datum, x), length(datum, y), reduced_word(datum, y)

    rows = []
    for (x, y), c in sorted(m.items(), key=key):
        payload = ratfun_to_json(c)
        rows.append([list(reduced_word(datum, x)), list(reduced_word(datum, y)), payload["numerator"], payload["denominator"]])
    return rows
