import logging
from dataclasses import dataclass
from itertools import combinations

from thetanerve.categories.fincat import ordinal
from thetanerve.models.matset.model import (MatSimplex, degeneracy, empty_column, empty_row, face,
                                            is_nondegenerate, iter_simplices, matrix_from_entries, restrict)
from thetanerve.utils.validation import ValidationReport

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class SigmaIndex:
    """Names one of the two non-degenerate n-simplices of the free 2-cell, ``σ_n`` or ``σ'_n``."""
    n: int
    primed: bool = False

    def __post_init__(self):
        if self.n < 0:
            message = f"Dimension must be non-negative, got {self.n}."
            LOGGER.error(message)
            raise ValueError(message)

    def __str__(self) -> str:
        return f"σ'{self.n}" if self.primed else f"σ{self.n}"


@dataclass(frozen=True)
class SkeletonLabel:
    """A degenerate or non-degenerate simplex written as ``s_{i1} .. s_{ip} σ``, degeneracies outermost first."""
    degeneracies: tuple[int, ...]
    base: SigmaIndex

    def __str__(self) -> str:
        return "".join(f"s{i}" for i in self.degeneracies) + str(self.base)


def sigma(index: SigmaIndex) -> MatSimplex:
    """The closed-form non-degenerate simplex of ``Mat([1])``.

    In dimension ``2m`` ``σ`` has shape ``[m-1] x [m]^op`` with entry 0 iff
    ``i < j`` and ``σ'`` has shape ``[m] x [m-1]^op`` with entry 0 iff ``i <= j``;
    in dimension ``2m+1`` both are square with the same two rules. In
    dimension 0 they are the empty row (y) and the empty column (x).
    """
    category = ordinal(1)
    n, primed = index.n, index.primed
    if n == 0:
        return empty_column(category, 0) if primed else empty_row(category, 0)
    m, odd = divmod(n, 2)
    if odd:
        rows, cols = m + 1, m + 1
    else:
        rows, cols = (m + 1, m) if primed else (m, m + 1)
    entries = [[0 if (i <= j if primed else i < j) else 1 for j in range(cols)] for i in range(rows)]
    return matrix_from_entries(category, entries)


def _s(n: int, primed: bool = False) -> MatSimplex:
    return sigma(SigmaIndex(n, primed))


def face_relations(m: int) -> list[tuple[str, MatSimplex, MatSimplex]]:
    """Every ``d_i σ`` identity for dimensions ``2m`` and ``2m+1`` as ``(label, lhs, rhs)``."""
    if m < 1:
        message = f"The face relations are stated for m >= 1, got {m}."
        LOGGER.error(message)
        raise ValueError(message)
    relations = []

    def add(label, lhs, rhs):
        relations.append((label, lhs, rhs))

    for i in range(2 * m + 1):
        lhs = face(_s(2 * m), i)
        if i <= m - 1:
            add(f"d{i}σ{2 * m} = s{m - 1 + i}σ{2 * m - 2}", lhs, degeneracy(_s(2 * m - 2), m - 1 + i))
        elif i == m:
            add(f"d{i}σ{2 * m} = σ'{2 * m - 1}", lhs, _s(2 * m - 1, True))
        elif i <= 2 * m - 1:
            add(f"d{i}σ{2 * m} = s{i - m - 1}σ{2 * m - 2}", lhs, degeneracy(_s(2 * m - 2), i - m - 1))
        else:
            add(f"d{i}σ{2 * m} = σ{2 * m - 1}", lhs, _s(2 * m - 1))

    for i in range(2 * m + 1):
        lhs = face(_s(2 * m, True), i)
        if i == 0:
            add(f"d0σ'{2 * m} = σ{2 * m - 1}", lhs, _s(2 * m - 1))
        elif i <= m - 1:
            add(f"d{i}σ'{2 * m} = s{m - 1 + i}σ'{2 * m - 2}", lhs, degeneracy(_s(2 * m - 2, True), m - 1 + i))
        elif i == m:
            add(f"d{i}σ'{2 * m} = σ'{2 * m - 1}", lhs, _s(2 * m - 1, True))
        else:
            add(f"d{i}σ'{2 * m} = s{i - m - 1}σ'{2 * m - 2}", lhs, degeneracy(_s(2 * m - 2, True), i - m - 1))

    for i in range(2 * m + 2):
        lhs = face(_s(2 * m + 1), i)
        if i <= m - 1:
            add(f"d{i}σ{2 * m + 1} = s{m + i}σ{2 * m - 1}", lhs, degeneracy(_s(2 * m - 1), m + i))
        elif i == m:
            add(f"d{i}σ{2 * m + 1} = σ{2 * m}", lhs, _s(2 * m))
        elif i == m + 1:
            add(f"d{i}σ{2 * m + 1} = σ'{2 * m}", lhs, _s(2 * m, True))
        else:
            add(f"d{i}σ{2 * m + 1} = s{i - m - 2}σ{2 * m - 1}", lhs, degeneracy(_s(2 * m - 1), i - m - 2))

    for i in range(2 * m + 2):
        lhs = face(_s(2 * m + 1, True), i)
        if i == 0:
            add(f"d0σ'{2 * m + 1} = σ{2 * m}", lhs, _s(2 * m))
        elif i <= m:
            add(f"d{i}σ'{2 * m + 1} = s{m - 1 + i}σ'{2 * m - 1}", lhs, degeneracy(_s(2 * m - 1, True), m - 1 + i))
        elif i <= 2 * m:
            add(f"d{i}σ'{2 * m + 1} = s{i - m - 1}σ'{2 * m - 1}", lhs, degeneracy(_s(2 * m - 1, True), i - m - 1))
        else:
            add(f"d{i}σ'{2 * m + 1} = σ'{2 * m}", lhs, _s(2 * m, True))

    return relations


def verify_face_relations(m: int) -> ValidationReport:
    """Checks every face relation of ``σ`` and ``σ'`` in dimensions ``2m`` and ``2m+1``.

    Returns
    -------
    ValidationReport
        Invalid with the first failing relation, otherwise the number of relations checked.
    """
    relations = face_relations(m)
    for label, lhs, rhs in relations:
        if lhs != rhs:
            LOGGER.info(f"Face relation {label} fails: {lhs} != {rhs}")
            return ValidationReport.failure(f"{label} fails: left side {lhs}, right side {rhs}")
    return ValidationReport.ok(relations=len(relations))


def two_skeleton_face(m: int, i: int, j: int, k: int) -> SkeletonLabel:
    """The restriction of ``σ_{2m}`` to the vertices ``i < j < k``, by the eight-case formula.

    Raises
    ------
    ValueError
        If the triple is not increasing inside ``0..2m``.
    """
    if m < 1 or not 0 <= i < j < k <= 2 * m:
        message = f"({i}, {j}, {k}) is not an increasing triple of vertices of σ{2 * m}."
        LOGGER.error(message)
        raise ValueError(message)
    if k <= m - 1:
        return SkeletonLabel((0, 0), SigmaIndex(0, True))
    if i < j < k - m:
        return SkeletonLabel((0,), SigmaIndex(1, True))
    if i < k - m <= j <= m - 1:
        return SkeletonLabel((), SigmaIndex(2, True))
    if 0 <= k - m <= i < j <= m - 1:
        return SkeletonLabel((0,), SigmaIndex(1))
    if i < j - m < k - m:
        return SkeletonLabel((1,), SigmaIndex(1, True))
    if 0 <= j - m <= i < k - m:
        return SkeletonLabel((), SigmaIndex(2))
    if 0 <= j - m < k - m <= i <= m - 1:
        return SkeletonLabel((1,), SigmaIndex(1))
    return SkeletonLabel((0, 0), SigmaIndex(0))


def skeleton_label_simplex(label: SkeletonLabel) -> MatSimplex:
    simplex = sigma(label.base)
    for i in reversed(label.degeneracies):
        simplex = degeneracy(simplex, i)
    return simplex


def check_two_skeleton(m: int) -> ValidationReport:
    """Compares the eight-case formula with restricting ``σ_{2m}`` along every vertex triple."""
    top = _s(2 * m)
    for triple in combinations(range(2 * m + 1), 3):
        label = two_skeleton_face(m, *triple)
        if skeleton_label_simplex(label) != restrict(top, triple):
            return ValidationReport.failure(f"σ{2 * m} restricted to {triple} is not {label}")
    return ValidationReport.ok(triples=len(list(combinations(range(2 * m + 1), 3))))


def nondegenerate_simplices(n: int) -> list[MatSimplex]:
    """The non-degenerate n-simplices of ``Mat([1])`` found by enumeration."""
    return [simplex for simplex in iter_simplices(ordinal(1), n) if is_nondegenerate(simplex)]


def check_uniqueness(n: int) -> ValidationReport:
    """Enumeration finds exactly ``σ_n`` and ``σ'_n`` as the non-degenerate n-simplices."""
    found = nondegenerate_simplices(n)
    expected = {_s(n), _s(n, True)}
    if len(found) != 2 or set(found) != expected:
        return ValidationReport.failure(f"dimension {n} has non-degenerate simplices {[str(s) for s in found]}")
    return ValidationReport.ok()
