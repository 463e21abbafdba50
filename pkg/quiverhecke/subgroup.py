"""
Torus constraints, the fixed root subsystem and its Weyl group, and the coset table ``W\\𝕎``.

Cosets are right cosets ``W x``. Each one gets the canonical representative ``x`` with
``Φ ∩ x(Φ̲⁺) = Φ⁺``; indices follow the order in which
:py:func:`all_elements <quiverhecke.rootcore.all_elements>` first meets a coset, so index 0 is
always the coset of the identity.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .exceptions import ConfigError, NonCanonicalizable
from .report import CheckReport
from .rootcore import (
    RootDatum,
    Vector,
    WeylElement,
    all_elements,
    length,
    reduced_word,
    reduced_words,
    right_descents,
    word_to_str,
)

logger = logging.getLogger(__name__)

TORSION = "torsion"
GENERIC = "generic"


@dataclass(frozen=True)
class TorusConstraint:
    """ One generator of the torus data ``H``.

    A ``torsion`` constraint keeps the roots with ``⟨α, λ⟩ ∈ ℤ``; a ``generic`` one models a
    one-parameter subgroup and keeps the roots with ``⟨α, λ⟩ = 0``.
    """

    kind: str
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.kind not in (TORSION, GENERIC):
            raise ConfigError("Torus constraint kind must be 'torsion' or 'generic', not {!r}".format(self.kind))
        object.__setattr__(self, "values", tuple(Fraction(x) for x in self.values))

    def pairing(self, alpha: Sequence[int]) -> Fraction:
        return sum((a * x for a, x in zip(alpha, self.values)), Fraction(0))

    def keeps(self, alpha: Sequence[int]) -> bool:
        p = self.pairing(alpha)
        if self.kind == TORSION:
            return p.denominator == 1
        return p == 0

    @classmethod
    def from_json(cls, data) -> "TorusConstraint":
        try:
            return cls(data["kind"], tuple(Fraction(x) for x in data["values"]))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as err:
            raise ConfigError("Bad torus constraint {!r}: {}".format(data, err))

    def to_json(self):
        return {"kind": self.kind, "values": [str(x) for x in self.values]}


class SubSystem:
    """ The roots ``Φ`` kept by every constraint, with ``Φ⁺ = Φ ∩ Φ̲⁺`` and simple roots ``Δ(Φ)``.

    :param RootDatum datum: The ambient root datum.
    :param constraints: The torus constraints; none means ``Φ = Φ̲``.
    """

    def __init__(self, datum: RootDatum, constraints: Iterable[TorusConstraint] = ()):
        self.datum = datum
        self.constraints: Tuple[TorusConstraint, ...] = tuple(constraints)
        for c in self.constraints:
            if len(c.values) != datum.ambient_rank:
                raise ConfigError("Torus constraint {} does not have length {}".format(c.to_json(), datum.ambient_rank))
        self.roots: Tuple[Vector, ...] = tuple(r for r in datum.roots if all(c.keeps(r) for c in self.constraints))
        self.positives: Tuple[Vector, ...] = tuple(r for r in self.roots if datum.is_positive(r))
        self._root_set = frozenset(self.roots)
        self._positive_set = frozenset(self.positives)
        sums = {tuple(a + b for a, b in zip(x, y)) for x in self.positives for y in self.positives}
        self.simples: Tuple[Vector, ...] = tuple(r for r in self.positives if r not in sums)
        self.reflections: Tuple[WeylElement, ...] = tuple(datum.reflection(b) for b in self.simples)
        self._elements = None
        logger.info("Fixed subsystem has %d roots and simple roots %s", len(self.roots), self.simples)

    def contains(self, alpha: Sequence[int]) -> bool:
        return tuple(alpha) in self._root_set

    def is_positive(self, alpha: Sequence[int]) -> bool:
        return tuple(alpha) in self._positive_set

    def elements(self) -> Tuple[WeylElement, ...]:
        """ The elements of ``W`` in the canonical order of ``𝕎``. """
        if self._elements is None:
            self._elements = tuple(w for w in all_elements(self.datum) if member_of_W(self, w))
        return self._elements

    @property
    def group_order(self) -> int:
        return len(self.elements())

    def length(self, w: WeylElement) -> int:
        """ Length of ``w ∈ W`` with respect to its own simple reflections ``S``. """
        return sum(1 for beta in self.positives if not self.datum.is_positive(w.act(beta)))

    def to_json(self):
        return [c.to_json() for c in self.constraints]


def fixed_subsystem(datum: RootDatum, constraints: Iterable[TorusConstraint] = ()) -> SubSystem:
    return SubSystem(datum, constraints)


def member_of_W(sub: SubSystem, w: WeylElement) -> bool:
    """ Whether ``w`` lies in the subgroup generated by the reflections in ``Φ``.

    Right-multiplies by ``s_β`` while some ``β ∈ Δ(Φ)`` is sent into ``Φ⁻``; ``w ∈ W`` iff this ends at ``e``.
    """
    datum = sub.datum
    while True:
        for beta, s_beta in zip(sub.simples, sub.reflections):
            image = w.act(beta)
            if sub.contains(image) and not datum.is_positive(image):
                w = w * s_beta
                break
        else:
            return w.is_identity


def canonical_representative(sub: SubSystem, y: WeylElement) -> WeylElement:
    """ The representative ``x ∈ W y`` with ``Φ ∩ x(Φ̲⁺) = Φ⁺``.

    :raises: NonCanonicalizable
    """
    datum = sub.datum
    steps = 0
    while True:
        inverse = y.inverse()
        for beta, s_beta in zip(sub.simples, sub.reflections):
            if not datum.is_positive(inverse.act(beta)):
                y = s_beta * y
                break
        else:
            return y
        steps += 1
        logger.debug("Canonicalisation step %d", steps)
        if steps > len(sub.positives):
            raise NonCanonicalizable("Representative did not stabilise after {} steps".format(steps))


def is_canonical(sub: SubSystem, x: WeylElement) -> bool:
    inverse = x.inverse()
    return all(sub.datum.is_positive(inverse.act(beta)) for beta in sub.positives)


class CosetTable:
    """ The index set ``I = W\\𝕎`` with canonical representatives and the right ``𝕎``-action.

    :param SubSystem sub: The fixed subsystem.
    """

    def __init__(self, sub: SubSystem):
        self.sub = sub
        self.datum = sub.datum
        self.reps: List[WeylElement] = []
        self._coset_of: Dict[WeylElement, int] = {}
        w_elements = sub.elements()
        for w in all_elements(self.datum):
            if w in self._coset_of:
                continue
            x = canonical_representative(sub, w)
            index = len(self.reps)
            self.reps.append(x)
            for u in w_elements:
                self._coset_of[u * x] = index
        self.action: Dict[Tuple[int, int], int] = {
            (i, j): self._coset_of[x * self.datum.simple_reflection(j)]
            for i, x in enumerate(self.reps)
            for j in range(self.datum.rank)
        }
        self.stab_flags: Dict[Tuple[int, int], bool] = {key: target == key[0] for key, target in self.action.items()}
        logger.info("Coset table has %d indices", len(self.reps))

    @property
    def indices(self) -> range:
        return range(len(self.reps))

    def __len__(self):
        return len(self.reps)

    def rep(self, i: int) -> WeylElement:
        return self.reps[i]

    def coset_of(self, w: WeylElement) -> int:
        return self._coset_of[w]

    def act_simple(self, i: int, j: int) -> int:
        """ ``i s_j`` """
        return self.action[(i, j)]

    def act(self, i: int, w: WeylElement) -> int:
        """ ``i w``, the coset of ``x_i w``. """
        return self._coset_of[self.reps[i] * w]

    def act_word(self, i: int, word: Sequence[int]) -> int:
        for j in word:
            i = self.action[(i, j)]
        return i

    def is_stabilized(self, i: int, j: int) -> bool:
        return self.stab_flags[(i, j)]

    def orbit(self, i: int) -> Tuple[WeylElement, ...]:
        """ The coset ``W x_i`` in canonical order. """
        x = self.reps[i]
        return tuple(sorted((u * x for u in self.sub.elements()), key=lambda v: (length(self.datum, v), reduced_word(self.datum, v))))

    def describe(self):
        return [
            {"index": i, "rep": word_to_str(reduced_word(self.datum, x)), "word": list(reduced_word(self.datum, x))}
            for i, x in enumerate(self.reps)
        ]


def build_coset_table(sub: SubSystem) -> CosetTable:
    return CosetTable(sub)


def coset_table_check(table: CosetTable) -> CheckReport:
    """ Exhaustive check of canonicity, the action on representatives and the stabiliser flags. """
    sub, datum = table.sub, table.datum
    report = CheckReport("coset_table")
    for i in table.indices:
        canonical = [u for u in table.orbit(i) if is_canonical(sub, u)]
        if canonical != [table.rep(i)]:
            report.fail({"index": i, "canonical_count": len(canonical)})
    for (i, j), target in table.action.items():
        x = table.rep(i)
        s = datum.simple_reflection(j)
        conjugate = x * s * x.inverse()
        if target != i:
            if table.rep(target) != x * s:
                report.fail({"index": i, "simple": j, "problem": "x_is != x_i s"})
            if member_of_W(sub, conjugate):
                report.fail({"index": i, "simple": j, "problem": "moved but x s x^-1 in W"})
        else:
            if not member_of_W(sub, conjugate):
                report.fail({"index": i, "simple": j, "problem": "stabilised but x s x^-1 not in W"})
            elif conjugate != datum.reflection(x.act(datum.simple_roots[j])):
                report.fail({"index": i, "simple": j, "problem": "x s x^-1 is not the reflection in x(α_s)"})
    for i in table.indices:
        for j in range(datum.rank):
            for k in range(datum.rank):
                word_action = table.act(i, datum.simple_reflection(j) * datum.simple_reflection(k))
                if table.act_simple(table.act_simple(i, j), k) != word_action:
                    report.fail({"index": i, "word": [j, k], "problem": "action not compatible"})
    if len(table) * sub.group_order != len(all_elements(datum)):
        report.fail({"problem": "#I * #W != #𝕎"})
    report.details.update(indices=len(table), group_order=sub.group_order, weyl_order=len(all_elements(datum)))
    return report


def length_comparison_check(sub: SubSystem) -> CheckReport:
    """ ``l_S(w) ≤ l_𝕊(w)`` on ``W``, and every simple reflection of ``𝕎`` lying in ``W`` is in ``S``. """
    datum = sub.datum
    report = CheckReport("length_comparison")
    for w in sub.elements():
        inner, outer = sub.length(w), length(datum, w)
        if inner > outer:
            report.fail({"element": list(reduced_word(datum, w)), "l_S": inner, "l_full": outer})
    for j in range(datum.rank):
        s = datum.simple_reflection(j)
        if member_of_W(sub, s) and s not in sub.reflections:
            report.fail({"simple": j, "problem": "in W but not in S"})
    report.details["group_order"] = sub.group_order
    return report


def _support(datum: RootDatum, w: WeylElement) -> FrozenSet[int]:
    return frozenset(reduced_word(datum, w))


def s_adapted(sub: SubSystem, J: Iterable[int]) -> bool:
    """ Whether every reduced ``𝕎``-word of every ``s ∈ S`` touching ``J`` lies entirely in ``J``. """
    J = frozenset(J)
    for s in sub.reflections:
        for word in reduced_words(sub.datum, s):
            if any(j in J for j in word) and not set(word) <= J:
                return False
    return True


def parabolic_factor(datum: RootDatum, w: WeylElement, J: Iterable[int]) -> Tuple[WeylElement, WeylElement]:
    """ ``w = w^J w_J`` with ``w^J`` minimal in ``w 𝕎_J``. """
    J = frozenset(J)
    top = w
    while True:
        descents = [j for j in right_descents(datum, top) if j in J]
        if not descents:
            break
        top = top * datum.simple_reflection(descents[0])
    return top, top.inverse() * w


def _min_in_W(sub: SubSystem, w: WeylElement, L: Sequence[int]) -> bool:
    return all(sub.datum.is_positive(w.act(sub.simples[k])) for k in L)


def _min_in_full(datum: RootDatum, w: WeylElement, J: FrozenSet[int]) -> bool:
    return all(datum.is_positive(w.act(datum.simple_roots[j])) for j in J)


def factorization_check(sub: SubSystem, J: Iterable[int], K: Iterable[int]) -> CheckReport:
    """ The parabolic factorisation of ``W`` against ``𝕎_J`` and the double coset representatives.

    For ``S``-adapted ``J`` and ``K`` with ``L = S ∩ 𝕎_J`` and ``M = S ∩ 𝕎_K``: ``W^L = W ∩ 𝕎^J``, both factors of
    ``w = w^J w_J`` lie in ``W`` for ``w ∈ W``, and ``^J𝕎^K ∩ W = ^LW^M``.
    """
    datum = sub.datum
    J, K = frozenset(J), frozenset(K)
    report = CheckReport("factorization")
    report.details.update(J=sorted(J), K=sorted(K))
    if not (s_adapted(sub, J) and s_adapted(sub, K)):
        report.details["skipped"] = "J or K is not S-adapted"
        return report
    L = [k for k, s in enumerate(sub.reflections) if _support(datum, s) <= J]
    M = [k for k, s in enumerate(sub.reflections) if _support(datum, s) <= K]
    for w in sub.elements():
        word = list(reduced_word(datum, w))
        if _min_in_W(sub, w, L) != _min_in_full(datum, w, J):
            report.fail({"element": word, "problem": "W^L != W ∩ 𝕎^J"})
        top, bottom = parabolic_factor(datum, w, J)
        if not (member_of_W(sub, top) and member_of_W(sub, bottom)):
            report.fail({"element": word, "problem": "factor outside W"})
        elif not (_min_in_W(sub, top, L) and _support(datum, bottom) <= J):
            report.fail({"element": word, "problem": "factors not in W^L and W_L"})
        inverse = w.inverse()
        full_double = _min_in_full(datum, inverse, J) and _min_in_full(datum, w, K)
        inner_double = _min_in_W(sub, inverse, L) and _min_in_W(sub, w, M)
        if full_double != inner_double:
            report.fail({"element": word, "problem": "double coset representatives differ"})
    report.details.update(L=L, M=M)
    return report
