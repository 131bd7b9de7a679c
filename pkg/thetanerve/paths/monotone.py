import logging
from dataclasses import dataclass
from typing import Sequence

from thetanerve.categories.fincat import FinCategory
from thetanerve.categories.two_category import suspension
from thetanerve.constants.enums import Step
from thetanerve.models.duskin.simplex import DuskinSimplex
from thetanerve.models.matset.model import MatSimplex, matrix_from_grid, restrict
from thetanerve.paths.bijection import PolygonState, triangulation_to_shuffle
from thetanerve.paths.shuffles import Shuffle
from thetanerve.paths.triangulations import Triangulation

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class LabeledPath:
    """A composable string of arrows ``objects[0] -> objects[1] -> ..`` in a category."""
    category: FinCategory
    objects: tuple[int, ...]
    arrows: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(int(x) for x in self.objects))
        object.__setattr__(self, "arrows", tuple(int(f) for f in self.arrows))
        if len(self.arrows) != len(self.objects) - 1:
            message = f"A path through {len(self.objects)} objects has {len(self.objects) - 1} arrows, got {len(self.arrows)}."
            LOGGER.error(message)
            raise ValueError(message)
        for i, f in enumerate(self.arrows):
            if (self.category.source(f), self.category.target(f)) != (self.objects[i], self.objects[i + 1]):
                message = f"Arrow {i} of the path does not run from object {self.objects[i]} to {self.objects[i + 1]}."
                LOGGER.error(message)
                raise ValueError(message)

    def object_labels(self) -> list[str]:
        return [self.category.object_labels[x] for x in self.objects]

    def arrow_labels(self) -> list[str]:
        return [self.category.morphism_labels[f] for f in self.arrows]

    def __str__(self) -> str:
        return " -> ".join(self.object_labels())


def monotone_path(simplex: MatSimplex, shuffle: Shuffle) -> LabeledPath:
    """Reads the entries and unit arrows of a matrix along a staircase.

    Raises
    ------
    ValueError
        If the matrix is empty or its shape differs from the shuffle's.
    """
    if not simplex.is_proper or (simplex.k, simplex.l) != (shuffle.k, shuffle.l):
        message = f"A ({shuffle.k}, {shuffle.l}) shuffle cannot be read in a ({simplex.k}, {simplex.l}) matrix."
        LOGGER.error(message)
        raise ValueError(message)
    positions = shuffle.positions
    objects = [simplex.entry(a, b) for a, b in positions]
    arrows = [simplex.arrow(a, b, a2, b2) for (a, b), (a2, b2) in zip(positions, positions[1:])]
    return LabeledPath(simplex.category, objects, arrows)


def labeled_triangulation_check(simplex: MatSimplex, triangulation: Triangulation) -> bool:
    """Whether every triangle of the triangulation restricts the matrix to a proper 2-simplex.

    This holds exactly when the triangulation satisfies the constraint for the
    matrix type.

    Raises
    ------
    ValueError
        If the matrix is not a proper ``n``-simplex for the polygon.
    """
    if not simplex.is_proper or simplex.dim != triangulation.n:
        message = f"A proper {triangulation.n}-simplex is required, got {simplex}."
        LOGGER.error(message)
        raise ValueError(message)
    return all(restrict(simplex, triangle).is_proper for triangle in triangulation.triangles)


def labeled_path_from_triangulation(category: FinCategory,
                                    simplex: DuskinSimplex,
                                    triangulation: Triangulation,
                                    k: int) -> tuple[Shuffle, LabeledPath]:
    """Reads a labelled path off a nerve simplex of the suspension of ``category`` along a triangulation.

    The path starts at the label of the outer edge ``(0, n)``; each peeled
    triangle contributes its 2-cell and the label of the new outer edge.

    Raises
    ------
    ValueError
        If the simplex is not of type ``k`` or the triangulation violates the constraint.
    """
    n = triangulation.n
    expected = [0] * (k + 1) + [1] * (n - k)
    if simplex.dim != n or list(simplex.objects) != expected:
        message = f"The simplex must have vertices {expected}, got {list(simplex.objects)}."
        LOGGER.error(message)
        raise ValueError(message)
    two_category = suspension(category)
    shuffle = triangulation_to_shuffle(triangulation, n, k)

    def label(u: int, w: int) -> int:
        return two_category.decode_one_cell(simplex.edge(u, w))[2][0]

    def cell(u: int, v: int, w: int) -> int:
        return two_category.decode_two_cell(simplex.triangle(u, v, w))[2][0]

    state = PolygonState(range(n + 1), k)
    objects, arrows = [label(0, n)], []
    for step in shuffle.steps:
        triangle, state = state.peel(step)
        arrows.append(cell(*triangle))
        u, v, w = triangle
        objects.append(label(u, v) if step is Step.HORIZONTAL else label(v, w))
    return shuffle, LabeledPath(category, objects, arrows)


def reconstruct_matrix(n: int, k: int, paths: Sequence[tuple[Shuffle, LabeledPath]]) -> MatSimplex:
    """Glues labelled paths back into the matrix they were read from.

    Raises
    ------
    ValueError
        If two paths disagree on a cell or arrow, if the paths leave a cell
        or unit arrow uncovered, or if the result is not a functor.
    """
    l = n - 1 - k
    if not paths or not 0 <= k <= n - 1:
        message = f"Reconstruction needs at least one path and 0 <= k <= n - 1, got k={k}, n={n}."
        LOGGER.error(message)
        raise ValueError(message)
    category = paths[0][1].category
    entries: dict[tuple[int, int], int] = {}
    vertical: dict[tuple[int, int], int] = {}
    horizontal: dict[tuple[int, int], int] = {}

    def record(table: dict, cell: tuple[int, int], value: int, what: str) -> None:
        if table.setdefault(cell, value) != value:
            message = f"Paths conflict on the {what} at cell {cell}."
            LOGGER.error(message)
            raise ValueError(message)

    for shuffle, path in paths:
        if (shuffle.k, shuffle.l) != (k, l) or path.category != category:
            message = f"Every path must be a ({k}, {l}) shuffle over one category."
            LOGGER.error(message)
            raise ValueError(message)
        positions = shuffle.positions
        for cell, x in zip(positions, path.objects):
            record(entries, cell, x, "entry")
        for cell, step, f in zip(positions, shuffle.steps, path.arrows):
            if step is Step.VERTICAL:
                record(vertical, cell, f, "vertical arrow")
            else:
                record(horizontal, cell, f, "horizontal arrow")

    required = ([("entry", entries, (a, b)) for a in range(k + 1) for b in range(l + 1)]
                + [("vertical arrow", vertical, (a, b)) for a in range(k) for b in range(l + 1)]
                + [("horizontal arrow", horizontal, (a, b)) for a in range(k + 1) for b in range(1, l + 1)])
    for what, table, cell in required:
        if cell not in table:
            message = f"No path covers the {what} at cell {cell}."
            LOGGER.error(message)
            raise ValueError(message)

    return matrix_from_grid(category,
                            k,
                            l,
                            [[entries[(a, b)] for b in range(l + 1)] for a in range(k + 1)],
                            [[vertical[(a, b)] for b in range(l + 1)] for a in range(k)],
                            [[horizontal.get((a, b)) for b in range(l + 1)] for a in range(k + 1)])
