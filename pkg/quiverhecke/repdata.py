"""
Representation data as weight multisets: the ``𝒰`` and ``V`` copies, suitability, ``h``-counts,
``q``-polynomials and fiber weights, plus :py:class:`AlgebraData`, the bundle every algebra and
localization routine works from.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from sympy.polys.rings import PolyRing

from .exceptions import ConfigError, UnsuitableData
from .polyops import Poly, linear_form, poly_ring, substitute_linear
from .report import CheckReport
from .rootcore import RootDatum, Vector, WeylElement, all_elements, reduced_word
from .subgroup import CosetTable, SubSystem, build_coset_table

logger = logging.getLogger(__name__)

POSITIVE_ROOTS = "positive_roots"
ALL_ROOTS = "all_roots"

WeightMultiset = Counter


def _add(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


class SpringerData:
    """ The weights of ``𝒰^(1) … 𝒰^(r)`` and of the nonzero part of ``V^(1) … V^(r)``.

    Zero weights of ``V`` are dropped on ingestion.

    :param RootDatum datum: The ambient root datum.
    :param u_sets: One weight set per copy of ``𝒰``.
    :param v_sets: One weight set per copy of ``V``.
    :raises: ConfigError
    """

    def __init__(self, datum: RootDatum, u_sets: Iterable[Iterable[Sequence[int]]], v_sets: Iterable[Iterable[Sequence[int]]]):
        self.datum = datum
        self.u_sets: Tuple[FrozenSet[Vector], ...] = tuple(frozenset(tuple(int(x) for x in a) for a in u) for u in u_sets)
        self.v_sets: Tuple[FrozenSet[Vector], ...] = tuple(
            frozenset(tuple(int(x) for x in a) for a in v if any(a)) for v in v_sets
        )
        if len(self.u_sets) != len(self.v_sets):
            raise ConfigError("Got {} U-sets but {} V-sets".format(len(self.u_sets), len(self.v_sets)))
        for weights in self.u_sets + self.v_sets:
            for a in weights:
                if len(a) != datum.ambient_rank:
                    raise ConfigError("Weight {} does not have length {}".format(a, datum.ambient_rank))

    @property
    def r(self) -> int:
        return len(self.u_sets)

    @property
    def borel_flag(self) -> bool:
        positives = frozenset(self.datum.positive_roots)
        return all(u == positives for u in self.u_sets)

    def __eq__(self, other):
        return (
            isinstance(other, SpringerData)
            and self.datum.spec == other.datum.spec
            and self.u_sets == other.u_sets
            and self.v_sets == other.v_sets
        )

    def __repr__(self):
        return "SpringerData(r={})".format(self.r)

    @classmethod
    def from_json(cls, datum: RootDatum, data) -> "SpringerData":
        """ Read ``{"u_sets": [...], "v_sets": [...], "r": r}``; entries may be the keywords
        ``"positive_roots"`` or ``"all_roots"``. """
        if data is None:
            return cls(datum, [], [])

        def expand(entry):
            if entry == POSITIVE_ROOTS:
                return datum.positive_roots
            if entry == ALL_ROOTS:
                return datum.roots
            if isinstance(entry, list):
                return [tuple(a) for a in entry]
            raise ConfigError("Cannot read weight set {!r}".format(entry))

        unknown = set(data) - {"r", "u_sets", "v_sets"}
        if unknown:
            raise ConfigError("Unknown springer keys: {}".format(", ".join(sorted(unknown))))
        u_sets = [expand(u) for u in data.get("u_sets", [])]
        v_sets = [expand(v) for v in data.get("v_sets", [])]
        if "r" in data and data["r"] != len(u_sets):
            raise ConfigError("r = {} but {} U-sets were given".format(data["r"], len(u_sets)))
        return cls(datum, u_sets, v_sets)

    def to_json(self):
        def compress(weights):
            if weights == frozenset(self.datum.positive_roots):
                return POSITIVE_ROOTS
            if weights == frozenset(self.datum.roots):
                return ALL_ROOTS
            return [list(a) for a in sorted(weights)]

        return {
            "r": self.r,
            "u_sets": [compress(u) for u in self.u_sets],
            "v_sets": [compress(v) for v in self.v_sets],
        }


def _closure_failures(datum: RootDatum, weights: FrozenSet[Vector], adders: Iterable[Vector]) -> List[Vector]:
    missing = []
    for a in sorted(weights):
        for p in adders:
            total = _add(a, p)
            if datum.is_root(total) and total not in weights:
                missing.append(total)
    return missing


def validate(data: SpringerData, sub: SubSystem, strict: bool = False) -> CheckReport:
    """ Weight-level suitability of the representation data.

    Each ``U_k`` must avoid ``0`` and be closed under adding positive roots, as must ``U_k ∩ s(U_k)`` for
    every simple ``s``. Each ``V_k`` must be stable under ``W`` and closed under adding roots of ``Φ``.

    :param bool strict: Raise instead of logging a warning when a condition fails.
    :raises: UnsuitableData
    """
    datum = data.datum
    report = CheckReport("suitability")
    for k, u in enumerate(data.u_sets):
        if any(not any(a) for a in u):
            report.fail({"copy": k, "problem": "zero weight in U"})
        outside = sorted(a for a in u if not datum.is_root(a))
        if outside:
            report.fail({"copy": k, "problem": "U weights that are not roots", "weights": [list(a) for a in outside]})
        missing = _closure_failures(datum, u, datum.positive_roots)
        if missing:
            report.fail({"copy": k, "problem": "U not closed", "missing": [list(a) for a in missing]})
        for j in range(datum.rank):
            s = datum.simple_reflection(j)
            meet = frozenset(a for a in u if s.act(a) in u)
            missing = _closure_failures(datum, meet, datum.positive_roots)
            if missing:
                report.fail({"copy": k, "simple": j, "problem": "U ∩ s(U) not closed", "missing": [list(a) for a in missing]})
    for k, v in enumerate(data.v_sets):
        outside = sorted(a for a in v if not datum.is_root(a))
        if outside:
            report.fail({"copy": k, "problem": "V weights that are not roots", "weights": [list(a) for a in outside]})
        for s in sub.reflections:
            if frozenset(s.act(a) for a in v) != v:
                report.fail({"copy": k, "problem": "V not W-stable"})
                break
        missing = _closure_failures(datum, v, sub.roots)
        if missing:
            report.fail({"copy": k, "problem": "V not closed under Φ", "missing": [list(a) for a in missing]})
    report.details.update(r=data.r, borel=data.borel_flag)
    if not report.passed:
        if strict:
            raise UnsuitableData("Representation data are not suitable: {}".format(report.violations))
        for violation in report.violations:
            logger.warning("Suitability check failed: %s", violation)
    return report


def h_split(data: SpringerData, table: CosetTable, i: int, j: int) -> Tuple[int, int]:
    """ ``(arrows, loops)``: copies with ``x_i(α_s) ∈ V_k`` split by whether ``x_i(α_s) ∈ Φ``. """
    image = table.rep(i).act(data.datum.simple_roots[j])
    hits = [k for k, v in enumerate(data.v_sets) if image in v]
    loops = len(hits) if table.sub.contains(image) else 0
    return len(hits) - loops, loops


def h_count(data: SpringerData, table: CosetTable, i: int, j: int) -> int:
    """ ``h_i(s) = #{k : x_i(α_s) ∈ V_k}`` """
    return sum(h_split(data, table, i, j))


def q_poly(data: SpringerData, table: CosetTable, i: int, j: int) -> Poly:
    """ ``q_i(s)``, the product over copies ``k`` of the linear forms ``α ∈ U_k`` with ``s(α) ∉ U_k`` and
    ``x_i(α) ∈ V_k``. """
    datum = data.datum
    ring = poly_ring(datum.ambient_rank)
    x, s = table.rep(i), datum.simple_reflection(j)
    result = ring.one
    for u, v in zip(data.u_sets, data.v_sets):
        for a in sorted(u):
            if s.act(a) not in u and x.act(a) in v:
                result *= linear_form(ring, a)
    return result


def fiber_weights(data: SpringerData, w: WeylElement) -> WeightMultiset:
    """ ``F_w = ⊔_k V_k ∩ w(U_k)`` """
    found = Counter()
    for u, v in zip(data.u_sets, data.v_sets):
        for a in u:
            image = w.act(a)
            if image in v:
                found[image] += 1
    return found


def fiber_pair_weights(data: SpringerData, x: WeylElement, y: WeylElement) -> WeightMultiset:
    """ ``F_{x,y} = ⊔_k V_k ∩ x(U_k) ∩ y(U_k)`` """
    y_inverse = y.inverse()
    found = Counter()
    for u, v in zip(data.u_sets, data.v_sets):
        for a in u:
            image = x.act(a)
            if image in v and y_inverse.act(image) in u:
                found[image] += 1
    return found


def shortage_weights(data: SpringerData, x: WeylElement, j: int) -> WeightMultiset:
    """ ``F_x - F_{x,xs}`` as a multiset. """
    s = data.datum.simple_reflection(j)
    return fiber_weights(data, x) - fiber_pair_weights(data, x, x * s)


@dataclass
class AlgebraData:
    """ Everything the algebra and localization routines need, built once per configuration.

    ``q`` and ``h`` are filled eagerly for every index and simple reflection.
    """

    datum: RootDatum
    sub: SubSystem
    springer: SpringerData
    table: CosetTable
    degree_bound: int = 4
    q: Dict[Tuple[int, int], Poly] = field(default_factory=dict)
    h: Dict[Tuple[int, int], int] = field(default_factory=dict)

    @property
    def ring(self) -> PolyRing:
        return poly_ring(self.datum.ambient_rank)

    @property
    def rank(self) -> int:
        return self.datum.rank

    def stabilized(self, i: int, j: int) -> bool:
        return self.table.is_stabilized(i, j)

    def act(self, i: int, j: int) -> int:
        return self.table.act_simple(i, j)


def assemble(
    datum: RootDatum, sub: SubSystem, springer: SpringerData, degree_bound: int = 4, strict: bool = False
) -> AlgebraData:
    """ Build the coset table, validate the data and fill the ``q``/``h`` caches.

    :raises: UnsuitableData in strict mode
    """
    validate(springer, sub, strict=strict)
    table = build_coset_table(sub)
    ctx = AlgebraData(datum, sub, springer, table, degree_bound=degree_bound)
    for i in table.indices:
        for j in range(datum.rank):
            ctx.q[(i, j)] = q_poly(springer, table, i, j)
            ctx.h[(i, j)] = h_count(springer, table, i, j)
            if springer.borel_flag:
                expected = linear_form(ctx.ring, datum.simple_roots[j]) ** ctx.h[(i, j)]
                assert ctx.q[(i, j)] == expected, "q_i(s) is not α_s^h for Borel data"
    logger.info("Assembled algebra data with %d indices and r = %d", len(table), springer.r)
    return ctx


def h_split_check(ctx: AlgebraData) -> CheckReport:
    """ Wall-crossing indices only see arrows and stabilised ones only loops. """
    report = CheckReport("h_split")
    for i in ctx.table.indices:
        for j in range(ctx.rank):
            arrows, loops = h_split(ctx.springer, ctx.table, i, j)
            bad = loops if not ctx.stabilized(i, j) else arrows
            if bad:
                report.fail({"index": i, "simple": j, "arrows": arrows, "loops": loops})
    return report


def shortage_check(ctx: AlgebraData) -> CheckReport:
    """ ``eu(F_x - F_{x,xs}) = x(q_i(s))`` for every ``x ∈ 𝕎``; in the Borel case also
    ``F_{x_i} = F_{x_i,x_is} ⊔ {x_i(α_s)}^{h_i(s)}``. """
    datum, ring = ctx.datum, ctx.ring
    report = CheckReport("shortage")
    for x in all_elements(datum):
        i = ctx.table.coset_of(x)
        for j in range(ctx.rank):
            weights = shortage_weights(ctx.springer, x, j)
            product = ring.one
            for a, m in weights.items():
                product *= linear_form(ring, a) ** m
            if product != substitute_linear(ctx.q[(i, j)], x):
                report.fail({"element": list(reduced_word(datum, x)), "simple": j, "problem": "Q_x(s) != x(q_i(s))"})
            if ctx.springer.borel_flag and x == ctx.table.rep(i):
                expected = Counter({x.act(datum.simple_roots[j]): ctx.h[(i, j)]}) if ctx.h[(i, j)] else Counter()
                if weights != expected:
                    report.fail({"index": i, "simple": j, "problem": "fiber sequence multiset"})
    return report
