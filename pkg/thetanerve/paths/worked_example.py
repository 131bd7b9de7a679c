import logging
from dataclasses import dataclass, field
from typing import Optional

from thetanerve.categories.fincat import FinCategory, FunctorData, matrix_domain
from thetanerve.models.duskin.phi import phi_extended
from thetanerve.models.matset.model import MatSimplex
from thetanerve.paths.monotone import (LabeledPath, labeled_path_from_triangulation, labeled_triangulation_check,
                                       reconstruct_matrix)
from thetanerve.paths.shuffles import Shuffle
from thetanerve.paths.triangulations import Triangulation

LOGGER = logging.getLogger(__name__)

EXPECTED_ROWS = (("p02", "p01", "p00"), ("p12", "p11", "p10"))

GRID_TRIANGULATIONS = {
    "left column and bottom row": frozenset({(0, 1, 4), (1, 3, 4), (1, 2, 3)}),
    "middle column": frozenset({(0, 3, 4), (0, 1, 3), (1, 2, 3)}),
    "top row and right column": frozenset({(0, 3, 4), (0, 2, 3), (0, 1, 2)}),
}


@dataclass
class WorkedExampleResult:
    """The three labelled paths of the 2 x 3 grid example and the matrix glued back from them."""
    paths: dict[str, tuple[Shuffle, LabeledPath]] = field(default_factory=dict)
    matrix: Optional[MatSimplex] = None

    @property
    def rows(self) -> tuple[tuple[str, ...], ...]:
        """Rows as displayed, i.e. with the columns of the matrix reversed."""
        return tuple(tuple(reversed(row)) for row in self.matrix.labelled_entries())

    @property
    def matches(self) -> bool:
        return self.rows == EXPECTED_ROWS


def grid_poset() -> FinCategory:
    """``[1] x [2]^op`` with the object ``(a, b)`` named ``p{a}{b}``."""
    return matrix_domain(1, 2).relabel(object_labels=[f"p{a}{b}" for a in range(2) for b in range(3)])


def worked_example() -> WorkedExampleResult:
    """Runs the 4-simplex of type 1 over the grid poset through triangulations, paths and back.

    The matrix is the identity of the grid poset; its nerve image is read
    along three constrained triangulations of the pentagon, and the three
    labelled paths together cover every entry and unit arrow.

    Raises
    ------
    ValueError
        If a triangulation is not admissible for the matrix.
    """
    category = grid_poset()
    domain = matrix_domain(1, 2)
    matrix = MatSimplex(1, 2, FunctorData(domain, category, range(domain.n_objects), range(domain.n_morphisms)))
    simplex = phi_extended(category, matrix)

    result = WorkedExampleResult()
    for name, triangles in GRID_TRIANGULATIONS.items():
        triangulation = Triangulation(4, triangles)
        if not labeled_triangulation_check(matrix, triangulation):
            message = f"The triangulation {triangulation} does not restrict to proper triangles."
            LOGGER.error(message)
            raise ValueError(message)
        shuffle, path = labeled_path_from_triangulation(category, simplex, triangulation, 1)
        LOGGER.info(f"{name}: {shuffle} gives {path}")
        result.paths[name] = (shuffle, path)

    result.matrix = reconstruct_matrix(4, 1, list(result.paths.values()))
    return result
