from .shuffles import Shuffle, enumerate_shuffles
from .triangulations import Triangulation, ConstraintK, enumerate_triangulations, filter_constrained, catalan
from .bijection import PolygonState, triangulation_to_shuffle, shuffle_to_triangulation
from .monotone import (LabeledPath, monotone_path, labeled_triangulation_check, labeled_path_from_triangulation,
                       reconstruct_matrix)
from .worked_example import WorkedExampleResult, worked_example, grid_poset, EXPECTED_ROWS, GRID_TRIANGULATIONS
