import logging
from functools import cached_property, lru_cache
from typing import Callable, Optional, Sequence

import numpy as np

from thetanerve.categories.fincat import FinCategory, ordinal, product
from thetanerve.utils.validation import ValidationReport

LOGGER = logging.getLogger(__name__)

ComposeRule = Callable[[int, int, int, int, int], int]


def _associativity_failure(table: np.ndarray) -> Optional[tuple[int, int, int]]:
    for middle in range(table.shape[0]):
        inner = np.nonzero(table[middle] >= 0)[0]
        outer = np.nonzero(table[:, middle] >= 0)[0]
        if not inner.size or not outer.size:
            continue
        lhs = table[np.ix_(outer, table[middle, inner])]
        rhs = table[np.ix_(table[outer, middle], inner)]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            o, i = bad[0].tolist()
            return int(outer[o]), middle, int(inner[i])
    return None


class TwoCategory:
    """A strict finite 2-category given by its hom-categories.

    Every 1-cell and 2-cell gets a global index: 1-cells of ``hom(p, q)``
    are numbered consecutively in the order of the object pairs, followed by
    their local object index; the same holds for 2-cells and local morphism
    indices. Vertical composition is composition inside a hom-category.

    Parameters
    ----------
    n_objects : int
        The number of objects.
    homs : dict[tuple[int, int], FinCategory]
        The hom-categories; a missing pair means an empty hom.
    compose_one_cells : Callable
        ``(p, q, r, g, f) -> local object of hom(p, r)`` for local objects
        ``f`` of ``hom(p, q)`` and ``g`` of ``hom(q, r)``.
    compose_two_cells : Callable
        ``(p, q, r, beta, alpha) -> local morphism of hom(p, r)``.
    units : Sequence[int], optional
        The local object of ``hom(p, p)`` serving as the identity 1-cell; 0 by default.
    object_labels : Sequence[str], optional
        Display names of the objects.

    Raises
    ------
    ValueError
        If the data violate a strict 2-category law.
    """

    def __init__(self,
                 n_objects: int,
                 homs: dict[tuple[int, int], FinCategory],
                 compose_one_cells: ComposeRule,
                 compose_two_cells: ComposeRule,
                 units: Optional[Sequence[int]] = None,
                 object_labels: Optional[Sequence[str]] = None):

        self.n_objects = int(n_objects)
        self.homs = {pair: hom for pair, hom in sorted(homs.items())}
        self.object_labels = tuple(object_labels) if object_labels is not None else tuple(str(p) for p in range(n_objects))
        units = list(units) if units is not None else [0] * self.n_objects

        for p in range(self.n_objects):
            if (p, p) not in self.homs or not 0 <= units[p] < self.homs[(p, p)].n_objects:
                message = f"Object {p} has no identity 1-cell."
                LOGGER.error(message)
                raise ValueError(message)

        self.one_offsets: dict[tuple[int, int], int] = {}
        self.two_offsets: dict[tuple[int, int], int] = {}
        one_hom, one_local, two_hom, two_local = [], [], [], []
        for pair, hom in self.homs.items():
            self.one_offsets[pair] = len(one_local)
            self.two_offsets[pair] = len(two_local)
            one_hom += [pair] * hom.n_objects
            one_local += range(hom.n_objects)
            two_hom += [pair] * hom.n_morphisms
            two_local += range(hom.n_morphisms)

        self.one_cell_hom = tuple(one_hom)
        self.one_cell_local = tuple(one_local)
        self.two_cell_hom = tuple(two_hom)
        self.two_cell_local = tuple(two_local)
        n_one, n_two = len(one_local), len(two_local)

        self.one_identities = np.array([self.one_offsets[(p, p)] + units[p] for p in range(self.n_objects)], dtype=np.int64)
        self.two_sources = np.array([self.one_cell(*pair, self.homs[pair].source(f)) for pair, f in zip(two_hom, two_local)], dtype=np.int64)
        self.two_targets = np.array([self.one_cell(*pair, self.homs[pair].target(f)) for pair, f in zip(two_hom, two_local)], dtype=np.int64)
        self.two_identities = np.array([self.two_cell(*pair, self.homs[pair].identity(c)) for pair, c in zip(one_hom, one_local)], dtype=np.int64)

        self.one_compose_table = np.full((n_one, n_one), -1, dtype=np.int64)
        self.vertical_table = np.full((n_two, n_two), -1, dtype=np.int64)
        self.horizontal_table = np.full((n_two, n_two), -1, dtype=np.int64)

        for pair, hom in self.homs.items():
            offset = self.two_offsets[pair]
            block = np.where(hom.compose_table >= 0, hom.compose_table + offset, -1)
            self.vertical_table[offset:offset + hom.n_morphisms, offset:offset + hom.n_morphisms] = block

        for (p, q), first in self.homs.items():
            for (q2, r), second in self.homs.items():
                if q2 != q or (p, r) not in self.homs:
                    continue
                for f in range(first.n_objects):
                    for g in range(second.n_objects):
                        self.one_compose_table[self.one_cell(q, r, g), self.one_cell(p, q, f)] = \
                            self.one_cell(p, r, compose_one_cells(p, q, r, g, f))
                for alpha in range(first.n_morphisms):
                    for beta in range(second.n_morphisms):
                        self.horizontal_table[self.two_cell(q, r, beta), self.two_cell(p, q, alpha)] = \
                            self.two_cell(p, r, compose_two_cells(p, q, r, beta, alpha))

        for table in (self.one_identities, self.two_sources, self.two_targets, self.two_identities,
                      self.one_compose_table, self.vertical_table, self.horizontal_table):
            table.setflags(write=False)

        report = self.validate()
        if not report:
            message = f"Invalid 2-category: {report.diagnostics[0]}"
            LOGGER.error(message)
            raise ValueError(message)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n_objects={self.n_objects}, n_one_cells={self.n_one_cells}, n_two_cells={self.n_two_cells})"

    @property
    def n_one_cells(self) -> int:
        return len(self.one_cell_local)

    @property
    def n_two_cells(self) -> int:
        return len(self.two_cell_local)

    def hom(self, p: int, q: int) -> Optional[FinCategory]:
        return self.homs.get((p, q))

    def one_cell(self, p: int, q: int, local: int) -> int:
        return self.one_offsets[(p, q)] + local

    def two_cell(self, p: int, q: int, local: int) -> int:
        return self.two_offsets[(p, q)] + local

    def one_cell_endpoints(self, cell: int) -> tuple[int, int]:
        return self.one_cell_hom[cell]

    def identity_one_cell(self, p: int) -> int:
        return int(self.one_identities[p])

    def identity_two_cell(self, cell: int) -> int:
        return int(self.two_identities[cell])

    def two_source(self, alpha: int) -> int:
        return int(self.two_sources[alpha])

    def two_target(self, alpha: int) -> int:
        return int(self.two_targets[alpha])

    def compose_one_cells(self, g: int, f: int) -> int:
        h = int(self.one_compose_table[g, f])
        if h < 0:
            message = f"1-cells {g} and {f} are not composable."
            LOGGER.error(message)
            raise ValueError(message)
        return h

    def vertical(self, beta: int, alpha: int) -> int:
        """``beta · alpha``, alpha first."""
        gamma = int(self.vertical_table[beta, alpha])
        if gamma < 0:
            message = f"2-cells {beta} and {alpha} are not vertically composable."
            LOGGER.error(message)
            raise ValueError(message)
        return gamma

    def horizontal(self, beta: int, alpha: int) -> int:
        """``beta * alpha`` for alpha in ``hom(p, q)`` and beta in ``hom(q, r)``."""
        gamma = int(self.horizontal_table[beta, alpha])
        if gamma < 0:
            message = f"2-cells {beta} and {alpha} are not horizontally composable."
            LOGGER.error(message)
            raise ValueError(message)
        return gamma

    def whisker_left(self, g: int, alpha: int) -> int:
        """``g ◁ alpha``: post-whiskering a 2-cell by a 1-cell."""
        return self.horizontal(self.identity_two_cell(g), alpha)

    def whisker_right(self, beta: int, f: int) -> int:
        """``beta ▷ f``: pre-whiskering a 2-cell by a 1-cell."""
        return self.horizontal(beta, self.identity_two_cell(f))

    def validate(self) -> ValidationReport:
        """Exhaustively checks the strict 2-category laws on the global tables."""
        one_src = np.array([p for p, _ in self.one_cell_hom], dtype=np.int64)
        one_tgt = np.array([q for _, q in self.one_cell_hom], dtype=np.int64)
        two_src_obj = np.array([p for p, _ in self.two_cell_hom], dtype=np.int64)
        two_tgt_obj = np.array([q for _, q in self.two_cell_hom], dtype=np.int64)
        one_compose, horizontal = self.one_compose_table, self.horizontal_table

        composable = one_src[:, None] == one_tgt[None, :]
        if np.any((one_compose >= 0) != composable):
            g, f = np.argwhere((one_compose >= 0) != composable)[0].tolist()
            return ValidationReport.failure(f"1-cell composition wrongly defined on ({g}, {f})")
        g_idx, f_idx = np.nonzero(composable)
        h_idx = one_compose[g_idx, f_idx]
        if np.any((one_src[h_idx] != one_src[f_idx]) | (one_tgt[h_idx] != one_tgt[g_idx])):
            return ValidationReport.failure("a composite 1-cell has the wrong endpoints")

        cells = np.arange(self.n_one_cells)
        if self.n_one_cells and (np.any(one_compose[self.one_identities[one_tgt], cells] != cells)
                                 or np.any(one_compose[cells, self.one_identities[one_src]] != cells)):
            return ValidationReport.failure("identity 1-cells are not units")
        failure = _associativity_failure(one_compose)
        if failure:
            return ValidationReport.failure(f"1-cell composition not associative on {failure}")

        h_composable = two_src_obj[:, None] == two_tgt_obj[None, :]
        if np.any((horizontal >= 0) != h_composable):
            return ValidationReport.failure("horizontal composition defined on a non-composable pair")
        b_idx, a_idx = np.nonzero(h_composable)
        c_idx = horizontal[b_idx, a_idx]
        if np.any(self.two_sources[c_idx] != one_compose[self.two_sources[b_idx], self.two_sources[a_idx]]) \
                or np.any(self.two_targets[c_idx] != one_compose[self.two_targets[b_idx], self.two_targets[a_idx]]):
            return ValidationReport.failure("horizontal composite has the wrong boundary")

        if g_idx.size and np.any(horizontal[self.two_identities[g_idx], self.two_identities[f_idx]]
                                 != self.two_identities[h_idx]):
            return ValidationReport.failure("horizontal composition does not preserve identity 2-cells")

        alphas = np.arange(self.n_two_cells)
        unit_left = self.two_identities[self.one_identities[two_tgt_obj]]
        unit_right = self.two_identities[self.one_identities[two_src_obj]]
        if self.n_two_cells and (np.any(horizontal[unit_left, alphas] != alphas)
                                 or np.any(horizontal[alphas, unit_right] != alphas)):
            return ValidationReport.failure("identity 2-cells of identity 1-cells are not horizontal units")
        failure = _associativity_failure(horizontal)
        if failure:
            return ValidationReport.failure(f"horizontal composition not associative on {failure}")

        vertical_pairs = [tuple(pair) for pair in np.argwhere(self.vertical_table >= 0).tolist()]
        for outer_second, outer_first in vertical_pairs:
            for inner_second, inner_first in vertical_pairs:
                if horizontal[outer_first, inner_first] < 0:
                    continue
                lhs = horizontal[self.vertical_table[outer_second, outer_first],
                                 self.vertical_table[inner_second, inner_first]]
                rhs = self.vertical_table[horizontal[outer_second, inner_second],
                                          horizontal[outer_first, inner_first]]
                if lhs != rhs:
                    return ValidationReport.failure(
                        f"interchange law fails on ({outer_second}·{outer_first}) * ({inner_second}·{inner_first})")

        return ValidationReport.ok()


def _hom_product(factors: Sequence[FinCategory]) -> FinCategory:
    hom = ordinal(0)
    for factor in factors:
        hom = product(hom, factor)
    return hom


class SuspensionTwoCategory(TwoCategory):
    """The (r+1)-point suspension of a list of finite categories.

    Objects are ``x_0 .. x_r``; ``hom(x_p, x_q)`` is the product of the
    factors ``p..q-1`` for ``p < q``, the terminal category on the diagonal
    and empty below it. Horizontal composition concatenates tuples, which in
    the mixed-radix product indexing is ``first * |hom(q, r)| + second``.

    Parameters
    ----------
    factors : Sequence[FinCategory]
        The categories ``D_1 .. D_r``, at least one.
    object_labels : Sequence[str], optional
        Defaults to ``x, y`` for one factor and ``x0 .. xr`` otherwise.
    """

    def __init__(self, factors: Sequence[FinCategory], object_labels: Optional[Sequence[str]] = None):
        self.factors = tuple(factors)
        if not self.factors:
            message = "A suspension needs at least one hom-category."
            LOGGER.error(message)
            raise ValueError(message)
        r = len(self.factors)
        if object_labels is None:
            object_labels = ["x", "y"] if r == 1 else [f"x{p}" for p in range(r + 1)]

        homs = {(p, q): _hom_product(self.factors[p:q]) for p in range(r + 1) for q in range(p, r + 1)}

        def compose_one_cells(p, q, r_, g, f):
            return f * homs[(q, r_)].n_objects + g

        def compose_two_cells(p, q, r_, beta, alpha):
            return alpha * homs[(q, r_)].n_morphisms + beta

        super().__init__(r + 1, homs, compose_one_cells, compose_two_cells, object_labels=object_labels)

    @property
    def r(self) -> int:
        return len(self.factors)

    def encode_one_cell(self, p: int, q: int, components: Sequence[int]) -> int:
        """Global 1-cell of ``hom(x_p, x_q)`` with one object per factor ``p..q-1``."""
        dims = tuple(factor.n_objects for factor in self.factors[p:q])
        return self.one_cell(p, q, int(np.ravel_multi_index(tuple(components), dims)) if dims else 0)

    def encode_two_cell(self, p: int, q: int, components: Sequence[int]) -> int:
        """Global 2-cell of ``hom(x_p, x_q)`` with one morphism per factor ``p..q-1``."""
        dims = tuple(factor.n_morphisms for factor in self.factors[p:q])
        return self.two_cell(p, q, int(np.ravel_multi_index(tuple(components), dims)) if dims else 0)

    def decode_one_cell(self, cell: int) -> tuple[int, int, tuple[int, ...]]:
        p, q = self.one_cell_hom[cell]
        dims = tuple(factor.n_objects for factor in self.factors[p:q])
        components = tuple(int(c) for c in np.unravel_index(self.one_cell_local[cell], dims)) if dims else ()
        return p, q, components

    def decode_two_cell(self, cell: int) -> tuple[int, int, tuple[int, ...]]:
        p, q = self.two_cell_hom[cell]
        dims = tuple(factor.n_morphisms for factor in self.factors[p:q])
        components = tuple(int(c) for c in np.unravel_index(self.two_cell_local[cell], dims)) if dims else ()
        return p, q, components


@lru_cache(maxsize=None)
def _suspension_of(factors: tuple[FinCategory, ...]) -> SuspensionTwoCategory:
    return SuspensionTwoCategory(factors)


def suspension(category: FinCategory) -> SuspensionTwoCategory:
    """The 2-category with objects x, y and ``hom(x, y) = category``."""
    return _suspension_of((category,))


def multi_suspension(categories: Sequence[FinCategory]) -> SuspensionTwoCategory:
    """Suspensions of ``D_1 .. D_r`` glued along ``x_0 .. x_r``.

    Raises
    ------
    ValueError
        If the list is empty.
    """
    if not categories:
        message = "multi_suspension needs at least one category."
        LOGGER.error(message)
        raise ValueError(message)
    return _suspension_of(tuple(categories))
