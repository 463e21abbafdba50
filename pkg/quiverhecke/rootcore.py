"""
Root data, Weyl group elements as integer matrices, lengths, reduced words and Bruhat order.

Cartan labels are realised on the root lattice: the ambient coordinates of a root are its
coefficients in the simple roots, and coroots are stored as rational vectors so that the
pairing is the dot product. GL-style data use ``ℤ^d`` with roots ``e_a - e_b``.

>>> datum = build_root_datum("A2")
>>> datum.positive_roots
((0, 1), (1, 0), (1, 1))
>>> reduced_word(datum, longest_element(datum))
(0, 1, 0)
"""

import logging
import re
from collections import deque
from fractions import Fraction
from itertools import combinations, product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .exceptions import InvalidRootDatum

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]

MAX_ROOTS = 1000
MAX_ELEMENTS = 5000

_LABEL = re.compile(r"^\s*([ABCDFGabcdfg])_?(\d+)\s*$")
_RANKS = {"A": range(1, 5), "B": range(2, 5), "C": range(2, 5), "D": range(3, 5), "G": (2,), "F": (4,)}


class WeylElement:
    """ An element of the Weyl group, stored as the integer matrix of its action on the ambient lattice.

    Elements are immutable and hashable; ``a * b`` is composition (``b`` acts first).

    :param matrix: Square integer matrix.
    """

    __slots__ = ("matrix", "_key", "_inverse")

    def __init__(self, matrix):
        m = np.array(matrix, dtype=np.int64)
        m.setflags(write=False)
        self.matrix = m
        self._key = (m.shape[0], m.tobytes())
        self._inverse = None

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __mul__(self, other):
        return WeylElement(self.matrix @ other.matrix)

    def __repr__(self):
        return "WeylElement({})".format(self.matrix.tolist())

    @property
    def is_identity(self) -> bool:
        return bool(np.array_equal(self.matrix, np.eye(self.matrix.shape[0], dtype=np.int64)))

    def act(self, v: Sequence[int]) -> Vector:
        """ Apply the element to an integer vector. """
        return tuple(int(x) for x in self.matrix @ np.asarray(v, dtype=np.int64))

    def inverse(self) -> "WeylElement":
        """ The power ``w^{k-1}`` where ``k`` is the order of ``w``, computed in integer arithmetic.

        :raises: InvalidRootDatum if ``w`` has no finite order below ``MAX_ELEMENTS``
        """
        if self._inverse is None:
            identity = np.eye(self.matrix.shape[0], dtype=np.int64)
            power = identity
            for _ in range(MAX_ELEMENTS):
                following = power @ self.matrix
                if np.array_equal(following, identity):
                    self._inverse = WeylElement(power)
                    break
                power = following
            else:
                raise InvalidRootDatum("Weyl matrix has no finite order up to {}".format(MAX_ELEMENTS))
        return self._inverse


def weyl_mul(a: WeylElement, b: WeylElement) -> WeylElement:
    return a * b


def weyl_inv(a: WeylElement) -> WeylElement:
    return a.inverse()


def weyl_act(a: WeylElement, v: Sequence[int]) -> Vector:
    return a.act(v)


class RootDatum:
    """ A finite root system inside an ambient character lattice ``ℤ^N``.

    The roots are generated as the orbit of the simple roots under the simple reflections, keeping
    track of the coefficients of every root in the simple roots.

    :param int ambient_rank: N, the rank of the character lattice.
    :param simple_roots: Ordered simple roots as integer vectors of length N.
    :param coroots: One rational vector per simple root; the pairing is the dot product.
    :param roots: Optional full root list to validate against the generated one.
    :param dict spec: The description the datum was built from, echoed in reports.
    :raises: InvalidRootDatum
    """

    def __init__(self, ambient_rank, simple_roots, coroots, roots=None, spec=None):
        self.ambient_rank = int(ambient_rank)
        self.simple_roots: Tuple[Vector, ...] = tuple(tuple(int(x) for x in a) for a in simple_roots)
        self.coroots: Tuple[Tuple[Fraction, ...], ...] = tuple(tuple(Fraction(x) for x in c) for c in coroots)
        self.spec = spec if spec is not None else {
            "ambient_rank": self.ambient_rank,
            "simple_roots": [list(a) for a in self.simple_roots],
            "coroots": [[str(x) for x in c] for c in self.coroots],
        }
        if len(self.coroots) != len(self.simple_roots):
            raise InvalidRootDatum("Need exactly one coroot per simple root")
        for v in self.simple_roots + tuple(self.coroots):
            if len(v) != self.ambient_rank:
                raise InvalidRootDatum("Vector {} does not have length {}".format(v, self.ambient_rank))
        for j, alpha in enumerate(self.simple_roots):
            if self.pairing(alpha, j) != 2:
                raise InvalidRootDatum("<α, α∨> != 2 for simple root {}".format(alpha))
        self._reflections = tuple(self._simple_reflection_matrix(j) for j in range(self.rank))
        self._generate_roots()
        if roots is not None:
            given = {tuple(int(x) for x in r) for r in roots}
            if given != set(self.roots):
                raise InvalidRootDatum("Given roots do not match the orbit of the simple roots")
        self._elements: Optional[Tuple[WeylElement, ...]] = None
        self._lengths: Dict[WeylElement, int] = {}
        self._words: Dict[WeylElement, Tuple[int, ...]] = {}
        self._reflection_cache: Dict[Vector, WeylElement] = {}
        self.identity = WeylElement(np.eye(self.ambient_rank, dtype=np.int64))
        logger.debug("Built root datum %s with %d roots", self.spec, len(self.roots))

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    def __repr__(self):
        return "RootDatum({})".format(self.spec)

    def pairing(self, v: Sequence[int], j: int) -> Fraction:
        """ ⟨v, α_j∨⟩ """
        return sum((Fraction(x) * c for x, c in zip(v, self.coroots[j])), Fraction(0))

    def _simple_reflection_matrix(self, j):
        alpha, coroot = self.simple_roots[j], self.coroots[j]
        n = self.ambient_rank
        rows = []
        for a in range(n):
            row = []
            for b in range(n):
                entry = Fraction(int(a == b)) - alpha[a] * coroot[b]
                if entry.denominator != 1:
                    raise InvalidRootDatum("Reflection in {} is not integral".format(alpha))
                row.append(int(entry))
            rows.append(row)
        return WeylElement(rows)

    def _generate_roots(self):
        coefficients: Dict[Vector, Vector] = {}
        origin: Dict[Vector, Tuple[int, Tuple[int, ...]]] = {}
        queue = deque()
        for j, alpha in enumerate(self.simple_roots):
            coefficients[alpha] = tuple(int(k == j) for k in range(self.rank))
            origin[alpha] = (j, ())
            queue.append(alpha)
        while queue:
            v = queue.popleft()
            for j, alpha in enumerate(self.simple_roots):
                p = self.pairing(v, j)
                if p.denominator != 1:
                    raise InvalidRootDatum("<{}, α∨_{}> is not an integer".format(v, j))
                u = tuple(x - int(p) * a for x, a in zip(v, alpha))
                coeff = list(coefficients[v])
                coeff[j] -= int(p)
                coeff = tuple(coeff)
                if u in coefficients:
                    if coefficients[u] != coeff:
                        raise InvalidRootDatum("Simple roots are linearly dependent")
                    continue
                coefficients[u] = coeff
                k, word = origin[v]
                origin[u] = (k, (j,) + word)
                queue.append(u)
                if len(coefficients) > MAX_ROOTS:
                    raise InvalidRootDatum("Root system is not finite (more than {} roots)".format(MAX_ROOTS))
        for v, coeff in coefficients.items():
            if not (all(c >= 0 for c in coeff) or all(c <= 0 for c in coeff)):
                raise InvalidRootDatum("Root {} is neither positive nor negative".format(v))
            if tuple(-x for x in v) not in coefficients:
                raise InvalidRootDatum("Root {} has no negative".format(v))
        self.root_coefficients = coefficients
        self._origin = origin
        self.roots: Tuple[Vector, ...] = tuple(sorted(coefficients))
        self.positive_roots: Tuple[Vector, ...] = tuple(r for r in self.roots if sum(coefficients[r]) > 0)
        self.negative_roots: Tuple[Vector, ...] = tuple(r for r in self.roots if sum(coefficients[r]) < 0)
        self._root_set = frozenset(self.roots)
        self._positive_set = frozenset(self.positive_roots)

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._root_set

    def is_positive(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._positive_set

    def simple_reflection(self, j: int) -> WeylElement:
        return self._reflections[j]

    def reflection(self, beta: Sequence[int]) -> WeylElement:
        """ The reflection in an arbitrary root, ``w s_j w^{-1}`` for ``beta = w(α_j)``. """
        beta = tuple(beta)
        if beta not in self._reflection_cache:
            if beta not in self._root_set:
                raise InvalidRootDatum("{} is not a root".format(beta))
            j, word = self._origin[beta] if beta in self._origin else self._origin[tuple(-x for x in beta)]
            w = element_from_word(self, word)
            self._reflection_cache[beta] = w * self.simple_reflection(j) * w.inverse()
        return self._reflection_cache[beta]

    def to_json(self):
        return self.spec


def _cartan_realisation(family, n):
    """ Simple roots of type ``family_n`` in an orthonormal basis (Bourbaki numbering). """

    def e(k, dim):
        return [Fraction(int(i == k)) for i in range(dim)]

    def sub(a, b):
        return [x - y for x, y in zip(a, b)]

    if family == "A":
        return [sub(e(k, n + 1), e(k + 1, n + 1)) for k in range(n)]
    if family in "BCD":
        roots = [sub(e(k, n), e(k + 1, n)) for k in range(n - 1)]
        if family == "B":
            roots.append(e(n - 1, n))
        elif family == "C":
            roots.append([2 * x for x in e(n - 1, n)])
        else:
            roots.append([x + y for x, y in zip(e(n - 2, n), e(n - 1, n))])
        return roots
    if family == "G":
        return [[Fraction(1), Fraction(-1), Fraction(0)], [Fraction(-2), Fraction(1), Fraction(1)]]
    half = Fraction(1, 2)
    return [
        [Fraction(0), Fraction(1), Fraction(-1), Fraction(0)],
        [Fraction(0), Fraction(0), Fraction(1), Fraction(-1)],
        [Fraction(0), Fraction(0), Fraction(0), Fraction(1)],
        [half, -half, -half, -half],
    ]


def cartan_datum(label: str) -> RootDatum:
    """ Root datum of a Cartan label such as ``"B2"`` or ``"A_3"``, in simple-root coordinates.

    :param str label: Family letter followed by the rank.
    :rtype: RootDatum
    :raises: InvalidRootDatum
    """
    match = _LABEL.match(label)
    if not match:
        raise InvalidRootDatum("Cannot read Cartan label {!r}".format(label))
    family, n = match.group(1).upper(), int(match.group(2))
    if n not in _RANKS[family]:
        raise InvalidRootDatum("Unsupported Cartan label {}{}".format(family, n))
    realised = _cartan_realisation(family, n)

    def dot(a, b):
        return sum((x * y for x, y in zip(a, b)), Fraction(0))

    simple = [tuple(int(i == j) for i in range(n)) for j in range(n)]
    coroots = [[2 * dot(realised[i], realised[j]) / dot(realised[j], realised[j]) for i in range(n)] for j in range(n)]
    return RootDatum(n, simple, coroots, spec={"cartan": "{}{}".format(family, n)})


def gl_datum(d: int) -> RootDatum:
    """ Root datum of GL_d on ``ℤ^d``: roots ``e_a - e_b``, simple roots ``e_k - e_{k+1}``. """
    if d < 1:
        raise InvalidRootDatum("GL_d needs d >= 1")
    simple = [tuple(int(i == k) - int(i == k + 1) for i in range(d)) for k in range(d - 1)]
    return RootDatum(d, simple, simple, spec={"gl": d})


def build_root_datum(spec) -> RootDatum:
    """ Build a :py:class:`RootDatum` from a Cartan label, a GL spec or explicit data.

    :param spec: ``"A2"``, ``{"cartan": "A2"}``, ``{"gl": 3}`` or
                 ``{"ambient_rank": N, "simple_roots": [...], "coroots": [...], "roots": [...]}``.
    :rtype: RootDatum
    :raises: InvalidRootDatum
    """
    if isinstance(spec, str):
        return cartan_datum(spec)
    if not isinstance(spec, dict):
        raise InvalidRootDatum("Unrecognised root datum spec {!r}".format(spec))
    if "cartan" in spec:
        return cartan_datum(spec["cartan"])
    if "gl" in spec:
        return gl_datum(int(spec["gl"]))
    try:
        return RootDatum(
            spec["ambient_rank"],
            spec["simple_roots"],
            spec["coroots"],
            roots=spec.get("roots"),
            spec=dict(spec),
        )
    except KeyError as missing:
        raise InvalidRootDatum("Explicit root datum is missing {}".format(missing))


def element_from_word(datum: RootDatum, word: Iterable[int]) -> WeylElement:
    """ The product ``s_{w_1} s_{w_2} ⋯`` of simple reflections. """
    w = datum.identity
    for j in word:
        w = w * datum.simple_reflection(j)
    return w


def length(datum: RootDatum, w: WeylElement) -> int:
    """ Number of positive roots sent to negative roots. """
    if w not in datum._lengths:
        datum._lengths[w] = sum(1 for alpha in datum.positive_roots if not datum.is_positive(w.act(alpha)))
    return datum._lengths[w]


def right_descents(datum: RootDatum, w: WeylElement) -> List[int]:
    return [j for j, alpha in enumerate(datum.simple_roots) if not datum.is_positive(w.act(alpha))]


def reduced_word(datum: RootDatum, w: WeylElement) -> Tuple[int, ...]:
    """ Reduced word obtained by peeling right descents, smallest index first. """
    if w not in datum._words:
        peeled = []
        current = w
        while not current.is_identity:
            j = right_descents(datum, current)[0]
            peeled.append(j)
            current = current * datum.simple_reflection(j)
        datum._words[w] = tuple(reversed(peeled))
    return datum._words[w]


def reduced_words(datum: RootDatum, w: WeylElement) -> List[Tuple[int, ...]]:
    """ Every reduced word of ``w``, sorted lexicographically. """
    memo: Dict[WeylElement, List[Tuple[int, ...]]] = {}

    def words(u):
        if u.is_identity:
            return [()]
        if u not in memo:
            found = []
            for j in right_descents(datum, u):
                found.extend(prefix + (j,) for prefix in words(u * datum.simple_reflection(j)))
            memo[u] = found
        return memo[u]

    return sorted(set(words(w)))


def all_elements(datum: RootDatum) -> Tuple[WeylElement, ...]:
    """ Every element of the Weyl group, ordered by length and then by reduced word. """
    if datum._elements is None:
        seen = {datum.identity}
        queue = deque([datum.identity])
        while queue:
            w = queue.popleft()
            for j in range(datum.rank):
                u = w * datum.simple_reflection(j)
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
                    if len(seen) > MAX_ELEMENTS:
                        raise InvalidRootDatum("Weyl group has more than {} elements".format(MAX_ELEMENTS))
        datum._elements = tuple(sorted(seen, key=lambda u: (length(datum, u), reduced_word(datum, u))))
        logger.info("Enumerated %d Weyl group elements", len(datum._elements))
    return datum._elements


def longest_element(datum: RootDatum) -> WeylElement:
    return all_elements(datum)[-1]


def bruhat_leq(datum: RootDatum, u: WeylElement, w: WeylElement) -> bool:
    """ Bruhat comparison ``u ≤ w``.

    Uses the lifting property: for a right descent ``s`` of ``w``, ``u ≤ w`` iff ``us ≤ ws`` when ``s``
    is also a descent of ``u``, and iff ``u ≤ ws`` otherwise.
    """
    while True:
        if length(datum, u) > length(datum, w):
            return False
        if w.is_identity:
            return u.is_identity
        j = right_descents(datum, w)[0]
        s = datum.simple_reflection(j)
        if not datum.is_positive(u.act(datum.simple_roots[j])):
            u = u * s
        w = w * s


def subword_elements(datum: RootDatum, word: Sequence[int]) -> set:
    """ All products of subwords of ``word``. """
    found = set()
    for mask in product((0, 1), repeat=len(word)):
        found.add(element_from_word(datum, [j for j, keep in zip(word, mask) if keep]))
    return found


def coxeter_order(datum: RootDatum, i: int, j: int) -> int:
    """ The order m_ij of ``s_i s_j``. """
    st = datum.simple_reflection(i) * datum.simple_reflection(j)
    power, m = st, 1
    while not power.is_identity:
        power = power * st
        m += 1
    return m


def parabolic_elements(datum: RootDatum, letters: Iterable[int]) -> Tuple[WeylElement, ...]:
    """ The elements of the standard parabolic subgroup generated by ``letters``, in canonical order. """
    letters = sorted(set(letters))
    return tuple(w for w in all_elements(datum) if set(reduced_word(datum, w)) <= set(letters))


def alternating_word(first: int, second: int, m: int) -> Tuple[int, ...]:
    """ ``first second first ⋯`` with ``m`` letters. """
    return tuple(first if k % 2 == 0 else second for k in range(m))


def commuting_pairs(datum: RootDatum):
    return [(i, j) for i, j in combinations(range(datum.rank), 2) if coxeter_order(datum, i, j) == 2]


def word_to_str(word: Sequence[int]) -> str:
    return "e" if not word else ".".join("s{}".format(j) for j in word)
