"""
The registered checks, grouped into suites.

``combinatorics``, ``demazure``, ``representation``, ``relations``, ``braid``, ``grading``,
``localization``, ``euler`` and ``klr``. Every check receives a
:py:class:`CheckInterface <quiverhecke.CheckInterface.CheckInterface>`; checks that do not apply to a
configuration note why and pass.
"""

import logging
import random
from itertools import combinations

from .algebra import (
    braid_assumption_holds,
    braid_closed_form,
    braid_defect,
    check_relations,
    faithfulness_check,
    filtration_check,
    gen_sigma,
    gen_unit,
    gen_var,
    grading_check,
    group_algebra_check,
    normal_form,
    sigma,
    word_independence_check,
    zero_operator,
)
from .collector import CheckCollector
from .localize import (
    euler_identities_check,
    inversion_multiset_report,
    leading_term_report,
    pathway_check,
    theta_algebra_check,
    theta_equivariance_check,
)
from .polyops import (
    action_composition_check,
    demazure_braid_check,
    demazure_product_rule_check,
    demazure_square_check,
    monomials_up_to,
)
from .presets import klr_oracle_check
from .repdata import h_split_check, shortage_check, validate
from .rootcore import (
    all_elements,
    bruhat_leq,
    coxeter_order,
    length,
    reduced_word,
    subword_elements,
)
from .subgroup import coset_table_check, factorization_check, length_comparison_check

logger = logging.getLogger(__name__)

collector = CheckCollector()


def _subsets(n):
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            yield subset


def preset_kind(ctx):
    """ ``"nilhecke"``, ``"skew"`` or ``None``, read off the representation and torus data. """
    datum, springer = ctx.datum, ctx.springer
    full = ctx.sub.group_order == len(all_elements(datum))
    if springer.r == 0 and full:
        return "nilhecke"
    if (
        springer.r == 1
        and full
        and springer.u_sets[0] == frozenset(datum.positive_roots)
        and springer.v_sets[0] == frozenset(datum.roots)
    ):
        return "skew"
    return None


# combinatorics


@collector(suite="combinatorics")
def coset_table(interface):
    interface.assert_report_passes(coset_table_check(interface.ctx.table))


@collector(suite="combinatorics")
def length_comparison(interface):
    interface.assert_report_passes(length_comparison_check(interface.ctx.sub))


@collector(suite="combinatorics")
def factorization(interface):
    """ Every pair of ``S``-adapted subsets of the simple reflections. """
    interface.require_small_group()
    ctx = interface.ctx
    tried = 0
    for J in _subsets(ctx.rank):
        for K in _subsets(ctx.rank):
            report = factorization_check(ctx.sub, J, K)
            if "skipped" in report.details:
                continue
            tried += 1
            interface.assert_report_passes(report)
    interface.note("adapted_pairs", tried)


@collector(suite="combinatorics")
def bruhat_subwords(interface):
    """ The lifting-property comparison agrees with the subword property. """
    interface.require_small_group()
    datum = interface.ctx.datum
    for w in all_elements(datum):
        below = subword_elements(datum, reduced_word(datum, w))
        for u in all_elements(datum):
            interface.assert_true(
                bruhat_leq(datum, u, w) == (u in below),
                "Bruhat order disagrees with subwords at {} <= {}".format(reduced_word(datum, u), reduced_word(datum, w)),
            )


# demazure


@collector(suite="demazure")
def demazure_identities(interface):
    ctx = interface.ctx
    datum = ctx.datum
    monomials = monomials_up_to(ctx.ring, ctx.degree_bound)
    for j in range(ctx.rank):
        for f in monomials:
            interface.assert_true(demazure_square_check(datum, j, f), "δ_{}² != 0 on {}".format(j, f))
            for x in ctx.ring.gens:
                interface.assert_true(demazure_product_rule_check(datum, j, x, f), "product rule for δ_{} on {}".format(j, f))
    for s, t in combinations(range(ctx.rank), 2):
        for f in monomials:
            interface.assert_true(demazure_braid_check(datum, s, t, f), "braid relation for δ_{}, δ_{} on {}".format(s, t, f))


@collector(suite="demazure")
def action_composition(interface):
    ctx = interface.ctx
    reflections = [ctx.datum.simple_reflection(j) for j in range(ctx.rank)]
    for f in monomials_up_to(ctx.ring, min(2, ctx.degree_bound)):
        for a in reflections:
            for b in reflections:
                interface.assert_true(action_composition_check(a, b, f), "Weyl action does not compose on {}".format(f))


# representation


@collector(suite="representation")
def suitability(interface):
    ctx = interface.ctx
    interface.assert_report_passes(validate(ctx.springer, ctx.sub))


@collector(suite="representation")
def h_split(interface):
    interface.assert_report_passes(h_split_check(interface.ctx))


@collector(suite="representation")
def shortage(interface):
    interface.require_small_group()
    interface.assert_report_passes(shortage_check(interface.ctx))


# relations


@collector(suite="relations")
def relations(interface):
    interface.assert_report_passes(check_relations(interface.ctx))


@collector(suite="relations")
def expression_identities(interface):
    interface.assert_operators_equal("1(0)*1(0)", "1(0)", "idempotent")
    if interface.ctx.datum.ambient_rank > 1:
        interface.assert_operator_zero("z(0,1)*z(0,2) - z(0,2)*z(0,1)", "commuting coordinates")


@collector(suite="relations")
def quadratic_presets(interface):
    """ ``σ(s)² = 0`` for nil Hecke data and ``σ(s)² = -2σ(s)`` for skew data. """
    ctx = interface.ctx
    kind = preset_kind(ctx)
    interface.note("preset", kind)
    if kind is None:
        interface.skip("neither nil Hecke nor skew-group data")
    for j in range(ctx.rank):
        s = sigma(ctx, ctx.datum.simple_reflection(j))
        expected = zero_operator(ctx) if kind == "nilhecke" else s.scale(-2)
        interface.assert_operators_equal(s * s, expected, "σ(s_{})²".format(j))


@collector(suite="relations")
def group_algebra(interface):
    ctx = interface.ctx
    if preset_kind(ctx) != "skew":
        interface.skip("not skew-group data")
    for s, t in combinations(range(ctx.rank), 2):
        interface.assert_report_passes(group_algebra_check(ctx, s, t))


@collector(suite="relations")
def word_independence(interface):
    interface.require_small_group()
    ctx = interface.ctx
    for i in ctx.table.indices:
        for w in all_elements(ctx.datum):
            interface.assert_report_passes(word_independence_check(ctx, i, w))


@collector(suite="relations")
def normal_forms(interface):
    """ ``σ(s)σ(w)`` for ``l(sw) = l(w) + 1`` has leading coefficient ``1`` at ``sw`` and reassembles exactly. """
    ctx = interface.ctx
    datum = ctx.datum
    if not ctx.springer.borel_flag:
        interface.skip("non-Borel data")
    interface.require_small_group()
    one = {i: ctx.ring.one for i in ctx.table.indices}
    checked = 0
    for w in all_elements(datum):
        for j in range(ctx.rank):
            s = datum.simple_reflection(j)
            if length(datum, s * w) != length(datum, w) + 1:
                continue
            product = sigma(ctx, s) * sigma(ctx, w)
            form = normal_form(ctx, product)
            interface.assert_operators_equal(form.reassemble(), product, "normal form reassembly")
            lead = form.coefficients.get(s * w)
            rows = sigma(ctx, s * w).rows()
            interface.assert_true(
                lead is not None and all(lead.component(i) == one[i] for i in rows),
                "leading coefficient of σ(s_{})σ({}) is not 1".format(j, reduced_word(datum, w)),
            )
            checked += 1
    for i in ctx.table.indices:
        form = normal_form(ctx, gen_unit(ctx, i))
        interface.assert_true(
            set(form.coefficients) == {datum.identity} and form.coefficients[datum.identity].components == {i: ctx.ring.one},
            "normal form of 1_{}".format(i),
        )
    interface.note("products", checked)


@collector(suite="relations")
def random_products(interface):
    """ Seeded random products of generators expand over the ``σ(w)`` basis and act like their expansion. """
    ctx = interface.ctx
    if not ctx.springer.borel_flag:
        interface.skip("non-Borel data")
    interface.require_small_group()
    rng = random.Random(interface.seed)

    def generator(i):
        kind = rng.choice(("z", "sigma") if ctx.rank else ("z",))
        if kind == "z":
            return gen_var(ctx, i, rng.randrange(ctx.datum.ambient_rank) + 1), i
        j = rng.randrange(ctx.rank)
        return gen_sigma(ctx, i, j), ctx.act(i, j)

    for _ in range(5):
        i = rng.choice(list(ctx.table.indices))
        product, current = gen_unit(ctx, i), i
        for _ in range(3):
            factor, current = generator(current)
            product = product * factor
        expansion = normal_form(ctx, product).reassemble()
        interface.assert_operators_equal(expansion, product, "normal form of a random product")
        interface.assert_true(faithfulness_check(ctx, product, expansion), "random product acts differently")
    interface.note("seed", interface.seed)


# braid


@collector(suite="braid")
def braid_defects(interface):
    """ Extract every braid defect, require polynomiality under the standing assumptions and compare
    with the closed forms where they are known. """
    ctx = interface.ctx
    datum = ctx.datum
    found = []
    for i in ctx.table.indices:
        for s, t in combinations(range(ctx.rank), 2):
            m = coxeter_order(datum, s, t)
            if m == 2:
                continue
            defect = braid_defect(ctx, i, s, t)
            found.append(defect.to_json(datum))
            if braid_assumption_holds(ctx, i, s, t):
                interface.assert_true(defect.all_polynomial, "non-polynomial braid coefficient at {} ({}, {})".format(i, s, t))
            predicted = braid_closed_form(ctx, i, s, t)
            if predicted is None:
                continue
            interface.assert_true(
                set(predicted) == set(defect.coefficients)
                and all(defect.coefficients[w] == f for w, f in predicted.items()),
                "closed form differs at {} ({}, {})".format(i, s, t),
            )
    interface.note("defects", found)


# grading


@collector(suite="grading")
def grading(interface):
    interface.assert_report_passes(grading_check(interface.ctx))


@collector(suite="grading")
def filtration(interface):
    interface.require_small_group()
    interface.assert_report_passes(filtration_check(interface.ctx))


@collector(suite="grading")
def sigma_generators(interface):
    """ ``σ_i(s)`` maps ``ℰ_{is}`` into ``ℰ_i`` and nothing else. """
    ctx = interface.ctx
    for i in ctx.table.indices:
        for j in range(ctx.rank):
            g = gen_sigma(ctx, i, j)
            interface.assert_operators_equal(gen_unit(ctx, i) * g * gen_unit(ctx, ctx.act(i, j)), g, "σ_{}(s_{})".format(i, j))


# localization


@collector(suite="localization")
def pathway(interface):
    interface.require_small_group()
    interface.assert_report_passes(pathway_check(interface.localization))


@collector(suite="localization")
def theta_equivariance(interface):
    interface.require_small_group()
    interface.assert_report_passes(theta_equivariance_check(interface.localization))


@collector(suite="localization")
def theta_algebra(interface):
    interface.require_small_group()
    interface.assert_report_passes(theta_algebra_check(interface.localization))


# euler


@collector(suite="euler")
def euler_identities(interface):
    interface.require_small_group()
    interface.assert_report_passes(euler_identities_check(interface.localization))


@collector(suite="euler")
def inversion_multisets(interface):
    interface.require_small_group()
    datum = interface.ctx.datum
    for weights in (datum.positive_roots, datum.negative_roots):
        interface.assert_report_passes(inversion_multiset_report(datum, weights))


@collector(suite="euler")
def leading_terms(interface):
    if not interface.ctx.springer.borel_flag:
        interface.skip("non-Borel data")
    interface.require_small_group()
    interface.assert_report_passes(leading_term_report(interface.localization))


# klr


@collector(suite="klr")
def klr_oracle(interface):
    if interface.quiver is None:
        interface.skip("configuration was not built from a quiver")
    interface.assert_report_passes(klr_oracle_check(interface.quiver, interface.ctx))
