import logging
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np
from tqdm import tqdm

from thetanerve.categories.fincat import (FinCategory, FunctorData, iter_functors, matrix_domain,
                                          ordinal_pair_table, ordinal_pairs, validate_functor)
from thetanerve.models.base_models import BaseSimplicialSet
from thetanerve.models.matset.matset_config import MatSetConfig
from thetanerve.models.matset.matset_utils import chi, check_vertex_map, codegeneracy, coface
from thetanerve.utils.validation import ValidationReport

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class MatSimplex:
    """An n-simplex of Mat(D): a functor ``[k] x [l]^op -> D`` with ``k + l = n - 1``.

    Rows are indexed by ``a`` in ``0..k`` and columns by ``b`` in ``0..l``;
    entry ``(a, b)`` sits at object index ``a * (l + 1) + b`` of the domain.
    ``k = -1`` is the empty row and ``l = -1`` the empty column, both with the
    empty functor as body.
    """
    k: int
    l: int
    body: FunctorData

    def __post_init__(self):
        if self.k < -1 or self.l < -1 or (self.k == -1 and self.l == -1):
            message = f"Invalid matrix shape ({self.k}, {self.l})."
            LOGGER.error(message)
            raise ValueError(message)
        if self.body.source != matrix_domain(self.k, self.l):
            message = f"The body of a ({self.k}, {self.l}) matrix must be defined on [{self.k}]x[{self.l}]^op."
            LOGGER.error(message)
            raise ValueError(message)

    @property
    def dim(self) -> int:
        return self.k + self.l + 1

    @property
    def category(self) -> FinCategory:
        return self.body.target

    @property
    def is_empty_row(self) -> bool:
        return self.k == -1

    @property
    def is_empty_column(self) -> bool:
        return self.l == -1

    @property
    def is_proper(self) -> bool:
        return self.k >= 0 and self.l >= 0

    def entry(self, a: int, b: int) -> int:
        return self.body.obj_map[a * (self.l + 1) + b]

    def arrow(self, a: int, b: int, a2: int, b2: int) -> int:
        """The morphism of D from entry ``(a, b)`` to entry ``(a2, b2)``, ``a <= a2`` and ``b >= b2``."""
        f = ordinal_pair_table(self.k)[a, a2]
        g = ordinal_pair_table(self.l)[b2, b]
        if f < 0 or g < 0:
            message = f"There is no arrow from ({a}, {b}) to ({a2}, {b2}) in a ({self.k}, {self.l}) matrix."
            LOGGER.error(message)
            raise ValueError(message)
        return self.body.mor_map[int(f) * len(ordinal_pairs(self.l)) + int(g)]

    def vertical_arrow(self, a: int, b: int) -> int:
        """The arrow ``(a, b) -> (a + 1, b)``."""
        return self.arrow(a, b, a + 1, b)

    def horizontal_arrow(self, a: int, b: int) -> int:
        """The arrow ``(a, b) -> (a, b - 1)``."""
        return self.arrow(a, b, a, b - 1)

    def entries(self) -> list[list[int]]:
        return [[self.entry(a, b) for b in range(self.l + 1)] for a in range(self.k + 1)]

    def labelled_entries(self) -> list[list[str]]:
        labels = self.category.object_labels
        return [[labels[x] for x in row] for row in self.entries()]

    def validate(self) -> ValidationReport:
        if not self.is_proper:
            return ValidationReport.ok() if not self.body.obj_map else ValidationReport.failure("an empty matrix has a non-empty body")
        return validate_functor(self.body)

    def __str__(self) -> str:
        if self.is_empty_row:
            return f"empty row of length {self.dim}"
        if self.is_empty_column:
            return f"empty column of length {self.dim}"
        return " / ".join(" ".join(row) for row in self.labelled_entries())


@dataclass(frozen=True)
class SimplexType:
    """The type ``k`` of an n-simplex, i.e. its image ``χ_k`` in Δ[1]."""
    value: int
    dim: int

    @property
    def chi(self) -> tuple[int, ...]:
        return chi(self.value, self.dim)

    def face(self, i: int) -> "SimplexType":
        return SimplexType(self.value - 1 if i <= self.value else self.value, self.dim - 1)

    def degeneracy(self, i: int) -> "SimplexType":
        return SimplexType(self.value + 1 if i <= self.value else self.value, self.dim + 1)


def empty_row(category: FinCategory, n: int) -> MatSimplex:
    return MatSimplex(-1, n, FunctorData(matrix_domain(-1, n), category, (), ()))


def empty_column(category: FinCategory, n: int) -> MatSimplex:
    return MatSimplex(n, -1, FunctorData(matrix_domain(n, -1), category, (), ()))


def _reindex(simplex: MatSimplex, row_map: Sequence[int], col_map: Sequence[int]) -> MatSimplex:
    # precompose the body with (row_map x col_map): [k'] x [l']^op -> [k] x [l]^op
    k, l = len(row_map) - 1, len(col_map) - 1
    category = simplex.category
    if k == -1:
        return empty_row(category, l)
    if l == -1:
        return empty_column(category, k)

    rows = np.asarray(row_map, dtype=np.int64)
    cols = np.asarray(col_map, dtype=np.int64)
    obj_index = (rows[:, None] * (simplex.l + 1) + cols[None, :]).reshape(-1)

    row_pairs = np.asarray(ordinal_pairs(k), dtype=np.int64)
    col_pairs = np.asarray(ordinal_pairs(l), dtype=np.int64)
    old_rows = ordinal_pair_table(simplex.k)[rows[row_pairs[:, 0]], rows[row_pairs[:, 1]]]
    old_cols = ordinal_pair_table(simplex.l)[cols[col_pairs[:, 0]], cols[col_pairs[:, 1]]]
    mor_index = (old_rows[:, None] * len(ordinal_pairs(simplex.l)) + old_cols[None, :]).reshape(-1)

    obj_map = np.asarray(simplex.body.obj_map, dtype=np.int64)[obj_index]
    mor_map = np.asarray(simplex.body.mor_map, dtype=np.int64)[mor_index]
    return MatSimplex(k, l, FunctorData(matrix_domain(k, l), category, obj_map.tolist(), mor_map.tolist()))


def face(simplex: MatSimplex, i: int) -> MatSimplex:
    """The i-th face: drops row ``i`` when ``i <= k``, otherwise column ``i - k - 1``.

    Raises
    ------
    ValueError
        If ``simplex`` is a 0-simplex or ``i`` is outside ``0..n``.
    """
    n, k, l = simplex.dim, simplex.k, simplex.l
    if n == 0 or not 0 <= i <= n:
        message = f"Face d_{i} is not defined on a {n}-simplex."
        LOGGER.error(message)
        raise ValueError(message)
    if simplex.is_empty_row:
        return empty_row(simplex.category, n - 1)
    if simplex.is_empty_column:
        return empty_column(simplex.category, n - 1)
    if i <= k:
        return _reindex(simplex, coface(k, i), range(l + 1))
    return _reindex(simplex, range(k + 1), coface(l, i - k - 1))


def degeneracy(simplex: MatSimplex, i: int) -> MatSimplex:
    """The i-th degeneracy: doubles row ``i`` when ``i <= k``, otherwise column ``i - k - 1``.

    Raises
    ------
    ValueError
        If ``i`` is outside ``0..n``.
    """
    n, k, l = simplex.dim, simplex.k, simplex.l
    if not 0 <= i <= n:
        message = f"Degeneracy s_{i} is not defined on a {n}-simplex."
        LOGGER.error(message)
        raise ValueError(message)
    if simplex.is_empty_row:
        return empty_row(simplex.category, n + 1)
    if simplex.is_empty_column:
        return empty_column(simplex.category, n + 1)
    if i <= k:
        return _reindex(simplex, codegeneracy(k, i), range(l + 1))
    return _reindex(simplex, range(k + 1), codegeneracy(l, i - k - 1))


def restrict(simplex: MatSimplex, vertex_map: Sequence[int]) -> MatSimplex:
    """Pulls a simplex back along a monotone map ``[m] -> [n]``.

    Vertices landing in ``0..k`` become rows, the others columns, so the new
    type is the largest ``j`` with ``vertex_map[j] <= k``.
    """
    n, k = simplex.dim, simplex.k
    vertex_map = check_vertex_map(vertex_map, n)
    m = len(vertex_map) - 1
    if simplex.is_empty_row:
        return empty_row(simplex.category, m)
    if simplex.is_empty_column:
        return empty_column(simplex.category, m)
    new_k = sum(1 for v in vertex_map if v <= k) - 1
    return _reindex(simplex, vertex_map[:new_k + 1], [v - k - 1 for v in vertex_map[new_k + 1:]])


def type_of(simplex: MatSimplex) -> SimplexType:
    return SimplexType(simplex.k, simplex.dim)


def _rows_coincide(simplex: MatSimplex, a: int) -> bool:
    category = simplex.category
    for b in range(simplex.l + 1):
        if simplex.entry(a, b) != simplex.entry(a + 1, b) or not category.is_identity(simplex.vertical_arrow(a, b)):
            return False
        if b and simplex.horizontal_arrow(a, b) != simplex.horizontal_arrow(a + 1, b):
            return False
    return True


def _columns_coincide(simplex: MatSimplex, b: int) -> bool:
    # columns b and b + 1, joined by the arrows (a, b + 1) -> (a, b)
    category = simplex.category
    for a in range(simplex.k + 1):
        if simplex.entry(a, b) != simplex.entry(a, b + 1) or not category.is_identity(simplex.horizontal_arrow(a, b + 1)):
            return False
        if a < simplex.k and simplex.vertical_arrow(a, b) != simplex.vertical_arrow(a, b + 1):
            return False
    return True


def is_nondegenerate(simplex: MatSimplex) -> bool:
    """True iff no two consecutive rows and no two consecutive columns coincide.

    Rows coincide when they agree in entries and horizontal arrows and the
    vertical arrows joining them are identities; columns likewise. Empty rows
    and columns are non-degenerate only in dimension 0.
    """
    if not simplex.is_proper:
        return simplex.dim == 0
    if any(_rows_coincide(simplex, a) for a in range(simplex.k)):
        return False
    return not any(_columns_coincide(simplex, b) for b in range(simplex.l))


def matrix_from_grid(category: FinCategory,
                     k: int,
                     l: int,
                     entries: Sequence[Sequence[int]],
                     vertical: Sequence[Sequence[Optional[int]]],
                     horizontal: Sequence[Sequence[Optional[int]]]) -> MatSimplex:
    """Builds a proper matrix from its entries and unit arrows.

    Parameters
    ----------
    category : FinCategory
        The target category D.
    k, l : int
        The shape, both non-negative.
    entries : Sequence[Sequence[int]]
        ``entries[a][b]`` is the object in row ``a``, column ``b``.
    vertical : Sequence[Sequence[int]]
        ``vertical[a][b]`` for ``a < k`` is the arrow ``(a, b) -> (a + 1, b)``.
    horizontal : Sequence[Sequence[int]]
        ``horizontal[a][b]`` for ``b >= 1`` is the arrow ``(a, b) -> (a, b - 1)``; column 0 is ignored.

    Raises
    ------
    ValueError
        If an arrow does not fit its entries or a square does not commute.
    """
    pair_rows, pair_cols = ordinal_pairs(k), ordinal_pairs(l)
    obj_map = [entries[a][b] for a in range(k + 1) for b in range(l + 1)]
    mor_map = []
    for a1, a2 in pair_rows:
        for b_lo, b_hi in pair_cols:
            morphism = category.identity(entries[a1][b_hi])
            steps = [(vertical[a][b_hi], (a, b_hi)) for a in range(a1, a2)]
            steps += [(horizontal[a2][b], (a2, b)) for b in range(b_hi, b_lo, -1)]
            for step, cell in steps:
                composite = category.compose(step, morphism) if step is not None else None
                if composite is None:
                    message = f"The unit arrow leaving cell {cell} is missing or does not fit its entries."
                    LOGGER.error(message)
                    raise ValueError(message)
                morphism = composite
            mor_map.append(morphism)

    simplex = MatSimplex(k, l, FunctorData(matrix_domain(k, l), category, obj_map, mor_map))
    report = validate_functor(simplex.body)
    if not report:
        message = f"The grid is not a functor: {report.diagnostics[0]}"
        LOGGER.error(message)
        raise ValueError(message)
    return simplex


def matrix_from_entries(category: FinCategory, entries: Sequence[Sequence[int]]) -> MatSimplex:
    """Builds a proper matrix over a thin category from its entries alone.

    Raises
    ------
    ValueError
        If the category is not thin or some required arrow does not exist.
    """
    if not category.is_thin:
        message = "Entries determine a matrix only over a thin category."
        LOGGER.error(message)
        raise ValueError(message)
    k, l = len(entries) - 1, len(entries[0]) - 1

    def unit(x, y):
        hom = category.hom(x, y)
        return hom[0] if hom else None

    vertical = [[unit(entries[a][b], entries[a + 1][b]) for b in range(l + 1)] for a in range(k)]
    horizontal = [[None] + [unit(entries[a][b], entries[a][b - 1]) for b in range(1, l + 1)] for a in range(k + 1)]
    return matrix_from_grid(category, k, l, entries, vertical, horizontal)


def iter_simplices(category: FinCategory, n: int, show_progress: bool = False) -> Iterator[MatSimplex]:
    """Streams Mat_n(D): the empty row, then the matrices by increasing k, then the empty column."""
    if n < 0:
        message = f"Dimension must be non-negative, got {n}."
        LOGGER.error(message)
        raise ValueError(message)
    yield empty_row(category, n)
    for k in tqdm(range(n), desc=f"Mat_{n} blocks", disable=not show_progress):
        l = n - 1 - k
        for body in iter_functors(matrix_domain(k, l), category):
            yield MatSimplex(k, l, body)
    yield empty_column(category, n)


def simplices(category: FinCategory, n: int) -> list[MatSimplex]:
    """All n-simplices of Mat(D) in the order of `iter_simplices`."""
    return list(iter_simplices(category, n))


class MatrixSimplicialSet(BaseSimplicialSet):
    """The simplicial set Mat(D) of D-valued matrices.

    Example
    -------
    ```python
    from thetanerve.categories.fincat import ordinal
    from thetanerve.models.matset import MatrixSimplicialSet, MatSetConfig

    model = MatrixSimplicialSet(ordinal(1), configurer=MatSetConfig(max_dim=6))
    print(len(model.simplices(3)))                     # 16
    print(len(model.nondegenerate_simplices(5)))       # 2
    ```

    Parameters
    ----------
    category : FinCategory
        The category D.
    configurer : MatSetConfig, optional, default=default_configurer
        The model configuration.
    """
    default_configurer = MatSetConfig()

    def __init__(self, category: FinCategory, configurer: MatSetConfig = default_configurer) -> None:
        super().__init__()
        self.category = category
        self.config = configurer.config
        self.show_progress = self.config["show_progress"]

    def _check_budget(self, n: int) -> None:
        if n > self.config["max_dim"]:
            message = f"Dimension {n} exceeds the configured budget max_dim={self.config['max_dim']}."
            LOGGER.error(message)
            raise ValueError(message)

    def iter_simplices(self, n: int) -> Iterator[MatSimplex]:
        self._check_budget(n)
        return iter_simplices(self.category, n, self.show_progress)

    def simplices(self, n: int) -> list[MatSimplex]:
        result = list(self.iter_simplices(n))
        LOGGER.info(f"Mat_{n} of a category with {self.category.n_objects} objects has {len(result)} simplices.")
        return result

    def nondegenerate_simplices(self, n: int) -> list[MatSimplex]:
        return [simplex for simplex in self.iter_simplices(n) if is_nondegenerate(simplex)]

    def face(self, simplex: MatSimplex, i: int) -> MatSimplex:
        return face(simplex, i)

    def degeneracy(self, simplex: MatSimplex, i: int) -> MatSimplex:
        return degeneracy(simplex, i)

    def restrict(self, simplex: MatSimplex, vertex_map: Sequence[int]) -> MatSimplex:
        return restrict(simplex, vertex_map)
