"""
Ready-made configurations: nil Hecke algebras, skew group rings, KLR algebras of quivers and the
half-integral ``A2`` example, plus an independent construction of the KLR representation on vertex
sequences used to cross-check the root-system pathway.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from .algebra import ModuleElement, apply, braid_defect, sigma_word, straightening_poly
from .config import DEFAULT_OPTIONS, Config
from .exceptions import ConfigError, QuiverHeckeError, UnsupportedDimension
from .polyops import Poly, monomials_up_to, poly_ring
from .repdata import ALL_ROOTS, POSITIVE_ROOTS, AlgebraData, h_split
from .report import CheckReport
from .rootcore import alternating_word, coxeter_order
from .subgroup import GENERIC, TORSION, TorusConstraint

logger = logging.getLogger(__name__)

MAX_KLR_DIMENSION = 6


def _options(**overrides):
    options = dict(DEFAULT_OPTIONS)
    options.update(overrides)
    return options


def preset_nilhecke(label: str) -> Config:
    """ No torus constraints and no representation: ``σ(s)`` is the Demazure operator ``δ_s``. """
    return Config(group={"cartan": label}, options=_options())


def preset_skew(label: str) -> Config:
    """ One copy of the adjoint weights: ``σ(s) = α_s δ_s = s - 1``. """
    return Config(
        group={"cartan": label},
        springer={"r": 1, "u_sets": [POSITIVE_ROOTS], "v_sets": [ALL_ROOTS]},
        options=_options(),
    )


def preset_half_integral() -> Config:
    """ ``A2`` with the torsion constraint ``⟨α_1, λ⟩ = 1/2``, ``⟨α_2, λ⟩ = 0`` and ``V = {α_1, α_1 + α_2}``. """
    return Config(
        group={"cartan": "A2"},
        torus=[TorusConstraint(TORSION, (Fraction(1, 2), Fraction(0)))],
        springer={"r": 1, "u_sets": [POSITIVE_ROOTS], "v_sets": [[[1, 0], [1, 1]]]},
        options=_options(),
    )


@dataclass
class QuiverSpec:
    """ A quiver with dimension vector. Loops are arrows whose source equals their target.

    :param list vertices: Vertex labels, in the order used to lay out positions.
    :param list arrows: ``(source, target)`` pairs, repeated for multiple arrows.
    :param dict dimension: Vertex → dimension.
    """

    vertices: List[Hashable]
    arrows: List[Tuple[Hashable, Hashable]] = field(default_factory=list)
    dimension: Dict[Hashable, int] = field(default_factory=dict)

    def __post_init__(self):
        self.vertices = list(self.vertices)
        self.arrows = [tuple(a) for a in self.arrows]
        known = set(self.vertices)
        for source, target in self.arrows:
            if source not in known or target not in known:
                raise ConfigError("Arrow {} -> {} uses an unknown vertex".format(source, target))
        for q in self.dimension:
            if q not in known:
                raise ConfigError("Dimension given for unknown vertex {}".format(q))
        if self.total_dimension < 1:
            raise ConfigError("The dimension vector must be nonzero")

    @property
    def total_dimension(self) -> int:
        return sum(self.dimension.get(q, 0) for q in self.vertices)

    def arrow_count(self, source, target) -> int:
        return sum(1 for a in self.arrows if a == (source, target))

    def loop_count(self, q) -> int:
        return self.arrow_count(q, q)

    def positions(self) -> List[Hashable]:
        """ The vertex of each position ``0 … d-1``, vertices laid out in order. """
        return [q for q in self.vertices for _ in range(self.dimension.get(q, 0))]

    def index_set(self) -> List[Tuple[Hashable, ...]]:
        """ All vertex sequences with the given content, in the order of their position layouts. """
        order = {q: k for k, q in enumerate(self.vertices)}
        return sorted(set(permutations(self.positions())), key=lambda seq: [order[q] for q in seq])

    @classmethod
    def from_json(cls, data) -> "QuiverSpec":
        try:
            return cls(
                vertices=list(data["vertices"]),
                arrows=[tuple(a) for a in data.get("arrows", [])],
                dimension={q: int(n) for q, n in zip(data["vertices"], data["dimension"])}
                if isinstance(data["dimension"], list)
                else {q: int(n) for q, n in data["dimension"].items()},
            )
        except (KeyError, TypeError) as err:
            raise ConfigError("Bad quiver description: {}".format(err))

    def to_json(self):
        return {
            "vertices": self.vertices,
            "arrows": [list(a) for a in self.arrows],
            "dimension": [self.dimension.get(q, 0) for q in self.vertices],
        }


def preset_klr(quiver: QuiverSpec) -> Config:
    """ The KLR configuration of a quiver on ``GL_d``.

    Positions are grouped by vertex; one generic constraint separates the vertices so that ``W`` is the
    product of the symmetric groups ``S_{d_q}``. An arrow ``q → q'`` adds a copy with
    ``V = {e_b - e_c : b at q, c at q'}``, a loop at ``q`` adds ``{e_b - e_c : b ≠ c both at q}``; every
    ``U`` is the positive roots.

    :raises: UnsupportedDimension
    """
    d = quiver.total_dimension
    if d > MAX_KLR_DIMENSION:
        raise UnsupportedDimension("Total dimension {} exceeds {}".format(d, MAX_KLR_DIMENSION))
    positions = quiver.positions()
    kappa = {q: k for k, q in enumerate(quiver.vertices)}

    def e(a, b):
        return [int(k == a) - int(k == b) for k in range(d)]

    v_sets = []
    for source, target in quiver.arrows:
        v_sets.append(
            [
                e(b, c)
                for b in range(d)
                for c in range(d)
                if b != c and positions[b] == source and positions[c] == target
            ]
        )
    return Config(
        group={"gl": d},
        torus=[TorusConstraint(GENERIC, tuple(Fraction(kappa[q]) for q in positions))],
        springer={"r": len(v_sets), "u_sets": [POSITIVE_ROOTS] * len(v_sets), "v_sets": v_sets},
        options=_options(),
    )


def sequence_of(ctx: AlgebraData, quiver: QuiverSpec, i: int) -> Tuple[Hashable, ...]:
    """ The vertex sequence of index ``i``: position ``k`` carries the vertex of ``x_i(e_k)``. """
    positions = quiver.positions()
    matrix = ctx.table.rep(i).matrix
    return tuple(positions[int(matrix[:, k].nonzero()[0][0])] for k in range(matrix.shape[1]))


class KLROracle:
    """ The KLR polynomial representation built directly from vertex sequences.

    Each sequence ``ν`` carries ``QQ[e1 … ed]``. The crossing at ``k`` is
    ``(e_k - e_{k+1})^h ∂_k`` with ``h`` the loop count when ``ν_k = ν_{k+1}``, and the twisted swap
    ``(e_k - e_{k+1})^h s_k`` with ``h`` the number of arrows ``ν_k → ν_{k+1}`` otherwise.
    """

    def __init__(self, quiver: QuiverSpec):
        self.quiver = quiver
        self.d = quiver.total_dimension
        self.ring = poly_ring(self.d)
        self.sequences = quiver.index_set()

    def swap(self, sequence: Sequence, k: int) -> Tuple:
        seq = list(sequence)
        seq[k], seq[k + 1] = seq[k + 1], seq[k]
        return tuple(seq)

    def h(self, sequence: Sequence, k: int) -> int:
        a, b = sequence[k], sequence[k + 1]
        return self.quiver.loop_count(a) if a == b else self.quiver.arrow_count(a, b)

    def _swap_poly(self, f: Poly, k: int) -> Poly:
        g = self.ring.gens
        return f.compose([(g[k], g[k + 1]), (g[k + 1], g[k])])

    def crossing(self, sequence: Sequence, k: int, f: Poly) -> Poly:
        """ The crossing at ``k`` into ``sequence``, applied to ``f`` living on ``swap(sequence, k)``. """
        g = self.ring.gens
        alpha = g[k] - g[k + 1]
        twist = alpha ** self.h(sequence, k)
        swapped = self._swap_poly(f, k)
        if sequence[k] == sequence[k + 1]:
            quotient, remainder = (swapped - f).div(alpha)
            if remainder:
                raise QuiverHeckeError("Divided difference is not exact")
            return twist * quotient
        return twist * swapped

    def word(self, sequence: Sequence, word: Sequence[int], f: Poly) -> Poly:
        """ ``σ_ν(s_1)σ_{νs_1}(s_2)⋯`` applied to ``f`` on the last sequence. """
        chain = [tuple(sequence)]
        for k in word:
            chain.append(self.swap(chain[-1], k))
        for position in reversed(range(len(word))):
            f = self.crossing(chain[position], word[position], f)
        return f


def klr_oracle_check(quiver: QuiverSpec, ctx: Optional[AlgebraData] = None) -> CheckReport:
    """ Compare the root-system construction of a KLR preset with :py:class:`KLROracle`.

    Checks the index sets, the ``h``-counts with their arrow/loop split, the quadratic relation, the
    straightening polynomials and the braid relations with the extracted coefficients ``Q_w``, all on
    monomials up to degree 2.
    """
    if ctx is None:
        ctx = preset_klr(quiver).build()
    oracle = KLROracle(quiver)
    report = CheckReport("klr_oracle")
    sequences = {i: sequence_of(ctx, quiver, i) for i in ctx.table.indices}
    if sorted(sequences.values(), key=str) != sorted(oracle.sequences, key=str):
        report.fail({"problem": "index sets differ"})
        return report
    monomials = monomials_up_to(ctx.ring, min(2, ctx.degree_bound))
    braid_pairs = 0
    for i, nu in sequences.items():
        where = {"sequence": [str(q) for q in nu]}
        for k in range(ctx.rank):
            arrows, loops = h_split(ctx.springer, ctx.table, i, k)
            expected = oracle.h(nu, k)
            stabilised = nu[k] == nu[k + 1]
            if stabilised != ctx.stabilized(i, k):
                report.fail(dict(where, simple=k, problem="stabiliser"))
                continue
            if ctx.h[(i, k)] != expected or (loops if stabilised else arrows) != expected:
                report.fail(dict(where, simple=k, problem="h-count"))
            square = sigma_word(ctx, i, (k, k))
            for f in monomials:
                root_side = apply(square, ModuleElement.single(ctx, i, f)).component(i)
                if root_side != oracle.word(nu, (k, k), f):
                    report.fail(dict(where, simple=k, problem="quadratic relation"))
                    break
            if stabilised:
                for t, g in enumerate(ctx.ring.gens):
                    if straightening_poly(ctx, i, k, t).component(i) != oracle.crossing(nu, k, g):
                        report.fail(dict(where, simple=k, variable=t, problem="straightening"))
        for s in range(ctx.rank):
            for t in range(s + 1, ctx.rank):
                m = coxeter_order(ctx.datum, s, t)
                if m == 2:
                    continue
                braid_pairs += 1
                left, right = alternating_word(s, t, m), alternating_word(t, s, m)
                coefficients = braid_defect(ctx, i, s, t).by_word(ctx.datum)
                if not all(q.is_polynomial() for q in coefficients.values()):
                    report.fail(dict(where, simples=[s, t], problem="non-polynomial braid coefficient"))
                    continue
                for f in monomials:
                    lhs = oracle.word(nu, left, f) - oracle.word(nu, right, f)
                    rhs = ctx.ring.zero
                    for word, q in coefficients.items():
                        rhs += q.to_poly() * oracle.word(nu, word, f)
                    if lhs != rhs:
                        report.fail(dict(where, simples=[s, t], problem="braid relation"))
                        break
    report.details["sequences"] = len(sequences)
    report.details["braid_pairs"] = braid_pairs
    logger.info("KLR oracle comparison: %d sequences, %d violations", len(sequences), len(report.violations))
    return report
