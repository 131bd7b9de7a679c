import pytest

from thetanerve.categories.fincat import FunctorData, matrix_domain, ordinal
from thetanerve.models.duskin import phi_extended
from thetanerve.models.matset.model import MatSimplex, empty_row, matrix_from_entries, simplices
from thetanerve.paths import (EXPECTED_ROWS, GRID_TRIANGULATIONS, LabeledPath, Shuffle, Triangulation,
                              enumerate_shuffles, enumerate_triangulations, filter_constrained, grid_poset,
                              labeled_path_from_triangulation, labeled_triangulation_check, monotone_path,
                              reconstruct_matrix, triangulation_to_shuffle, worked_example)

@pytest.fixture
def commutative_square():
    """The identity matrix of [1] x [1]^op with the corners named a (top right), b, c and d."""
    category = matrix_domain(1, 1).relabel(object_labels=["b", "a", "c", "d"])
    domain = matrix_domain(1, 1)
    return MatSimplex(1, 1, FunctorData(domain, category, range(domain.n_objects), range(domain.n_morphisms)))

def test_monotone_path_through_a_commutative_square(commutative_square):
    """
    Test case for the two staircases of a 2 x 2 matrix: HV passes through b, VH through d.
    """
    path = monotone_path(commutative_square, Shuffle.from_steps(1, 1, "HV"))
    assert path.object_labels() == ["a", "b", "c"]
    assert str(path) == "a -> b -> c"
    other = monotone_path(commutative_square, Shuffle.from_steps(1, 1, "VH"))
    assert other.object_labels() == ["a", "d", "c"]

def test_monotone_path_arrows(commutative_square):
    path = monotone_path(commutative_square, Shuffle.from_steps(1, 1, "HV"))
    category = commutative_square.category
    assert [category.source(f) for f in path.arrows] == list(path.objects[:-1])
    assert [category.target(f) for f in path.arrows] == list(path.objects[1:])

def test_monotone_path_shape_mismatch_raises(commutative_square):
    with pytest.raises(ValueError):
        monotone_path(commutative_square, Shuffle.from_steps(1, 2, "HVH"))
    with pytest.raises(ValueError):
        monotone_path(empty_row(ordinal(1), 2), Shuffle.from_steps(1, 1, "HV"))

def test_labeled_path_validation():
    category = ordinal(1)
    assert LabeledPath(category, [0, 1], [1]).arrow_labels() == ["0<=1"]
    with pytest.raises(ValueError):
        LabeledPath(category, [0, 1], [])
    with pytest.raises(ValueError):
        LabeledPath(category, [1, 0], [1])

def test_labeled_triangulation_check():
    matrix = simplices(ordinal(1), 4)[5]
    k = matrix.k
    for triangulation in enumerate_triangulations(4):
        assert labeled_triangulation_check(matrix, triangulation) == triangulation.satisfies(k)

def test_labeled_triangulation_check_needs_a_proper_simplex():
    triangulation = Triangulation(4, GRID_TRIANGULATIONS["middle column"])
    with pytest.raises(ValueError):
        labeled_triangulation_check(empty_row(ordinal(1), 4), triangulation)
    with pytest.raises(ValueError):
        labeled_triangulation_check(matrix_from_entries(ordinal(1), [[0, 0], [1, 0]]), triangulation)

@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_paths_from_triangulations_match_staircases(k):
    """
    Test case for reading a nerve simplex along a triangulation: the labels are the staircase of the matrix.
    """
    category = ordinal(1)
    constrained = filter_constrained(enumerate_triangulations(4), k)
    for matrix in simplices(category, 4):
        if matrix.k != k:
            continue
        simplex = phi_extended(category, matrix)
        for triangulation in constrained:
            shuffle, path = labeled_path_from_triangulation(category, simplex, triangulation, k)
            assert shuffle == triangulation_to_shuffle(triangulation, 4, k)
            assert path == monotone_path(matrix, shuffle)

def test_path_from_triangulation_checks_the_type():
    category = ordinal(1)
    matrix = next(x for x in simplices(category, 4) if x.k == 2)
    triangulation = Triangulation(4, GRID_TRIANGULATIONS["middle column"])
    with pytest.raises(ValueError):
        labeled_path_from_triangulation(category, phi_extended(category, matrix), triangulation, 1)

@pytest.mark.parametrize("k, l", [(0, 2), (1, 1), (1, 2), (2, 2)])
def test_reconstruct_from_every_staircase(k, l):
    category = ordinal(2)
    for matrix in simplices(category, k + l + 1):
        if matrix.k != k:
            continue
        paths = [(shuffle, monotone_path(matrix, shuffle)) for shuffle in enumerate_shuffles(k, l)]
        assert reconstruct_matrix(k + l + 1, k, paths) == matrix

def test_reconstruct_needs_full_coverage(commutative_square):
    shuffle = Shuffle.from_steps(1, 1, "HV")
    with pytest.raises(ValueError, match="No path covers"):
        reconstruct_matrix(3, 1, [(shuffle, monotone_path(commutative_square, shuffle))])

def test_reconstruct_detects_conflicts():
    category = ordinal(1)
    shuffle = Shuffle.from_steps(0, 1, "H")
    first = monotone_path(matrix_from_entries(category, [[0, 0]]), shuffle)
    second = monotone_path(matrix_from_entries(category, [[1, 0]]), shuffle)
    with pytest.raises(ValueError, match="conflict"):
        reconstruct_matrix(2, 0, [(shuffle, first), (shuffle, second)])

def test_reconstruct_needs_paths():
    with pytest.raises(ValueError):
        reconstruct_matrix(3, 1, [])

class TestWorkedExample:
    @pytest.fixture(scope="class")
    def result(self):
        return worked_example()

    def test_rows(self, result):
        assert result.rows == EXPECTED_ROWS
        assert result.matches

    def test_paths(self, result):
        """
        Test case for the three labelled paths of the 2 x 3 grid.
        """
        words = {name: shuffle.word for name, (shuffle, _) in result.paths.items()}
        assert words == {
            "left column and bottom row": "VHH",
            "middle column": "HVH",
            "top row and right column": "HHV",
        }
        labels = {name: path.object_labels() for name, (_, path) in result.paths.items()}
        assert labels["left column and bottom row"] == ["p02", "p12", "p11", "p10"]
        assert labels["middle column"] == ["p02", "p01", "p11", "p10"]
        assert labels["top row and right column"] == ["p02", "p01", "p00", "p10"]

    def test_matrix_is_the_identity(self, result):
        assert result.matrix.category == grid_poset()
        assert result.matrix.entries() == [[0, 1, 2], [3, 4, 5]]
