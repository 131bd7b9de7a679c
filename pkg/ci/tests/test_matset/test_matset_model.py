import pytest
from hypothesis import given, strategies as st

from thetanerve.categories.fincat import FinCategory, FunctorData, matrix_domain, ordinal, product
from thetanerve.models.matset import MatrixSimplicialSet, MatSetConfig
from thetanerve.models.matset.model import (MatSimplex, SimplexType, degeneracy, empty_column, empty_row, face,
                                            is_nondegenerate, matrix_from_entries, matrix_from_grid, restrict,
                                            simplices, type_of)

def parallel_arrows() -> FinCategory:
    return FinCategory(2,
                       [0, 1, 0, 0],
                       [0, 1, 1, 1],
                       [0, 1],
                       [[0, -1, -1, -1],
                        [-1, 1, 2, 3],
                        [2, -1, -1, -1],
                        [3, -1, -1, -1]])

@pytest.fixture
def square_matrix():
    """The 3-simplex of type 1 over [1] with rows (0 0) and (1 0)."""
    return matrix_from_entries(ordinal(1), [[0, 0], [1, 0]])

@pytest.mark.parametrize("n", range(0, 7))
def test_mat_of_terminal_category(n):
    """
    Test case for Mat_n([0]): one matrix per type plus the empty row and column.
    """
    assert len(simplices(ordinal(0), n)) == n + 2

@pytest.mark.parametrize("n", range(0, 6))
def test_mat_of_one(n):
    assert len(simplices(ordinal(1), n)) == 2 ** (n + 1)

def test_mat_of_two_in_dimension_three():
    assert len(simplices(ordinal(2), 3)) == 44

def test_enumeration_order():
    result = simplices(ordinal(1), 3)
    assert result[0] == empty_row(ordinal(1), 3)
    assert result[-1] == empty_column(ordinal(1), 3)
    assert [x.k for x in result[1:-1]] == sorted(x.k for x in result[1:-1])
    assert len(set(result)) == len(result)

def test_negative_dimension_raises():
    with pytest.raises(ValueError):
        simplices(ordinal(1), -1)

@pytest.mark.parametrize("n, expected", [(0, 2), (1, 1), (2, 0), (3, 0)])
def test_nondegenerate_simplices_of_terminal_category(n, expected):
    model = MatrixSimplicialSet(ordinal(0))
    assert len(model.nondegenerate_simplices(n)) == expected

def test_faces(square_matrix):
    """
    Test case for the four faces of a 2 x 2 matrix: d0, d1 drop rows, d2, d3 drop columns.
    """
    category = ordinal(1)
    assert face(square_matrix, 0) == matrix_from_entries(category, [[1, 0]])
    assert face(square_matrix, 1) == matrix_from_entries(category, [[0, 0]])
    assert face(square_matrix, 2) == matrix_from_entries(category, [[0], [0]])
    assert face(square_matrix, 3) == matrix_from_entries(category, [[0], [1]])

def test_degeneracies(square_matrix):
    category = ordinal(1)
    assert degeneracy(square_matrix, 0) == matrix_from_entries(category, [[0, 0], [0, 0], [1, 0]])
    assert degeneracy(square_matrix, 2) == matrix_from_entries(category, [[0, 0, 0], [1, 1, 0]])
    assert not is_nondegenerate(degeneracy(square_matrix, 2))
    assert is_nondegenerate(square_matrix)

def test_empty_simplices_stay_empty():
    category = ordinal(1)
    assert face(empty_row(category, 3), 1) == empty_row(category, 2)
    assert degeneracy(empty_column(category, 2), 0) == empty_column(category, 3)
    assert is_nondegenerate(empty_row(category, 0))
    assert not is_nondegenerate(empty_row(category, 1))

def test_face_out_of_range_raises(square_matrix):
    with pytest.raises(ValueError):
        face(square_matrix, 4)
    with pytest.raises(ValueError):
        face(empty_row(ordinal(1), 0), 0)
    with pytest.raises(ValueError):
        degeneracy(square_matrix, 5)

def test_restrict_matches_faces(square_matrix):
    assert restrict(square_matrix, [1, 2, 3]) == face(square_matrix, 0)
    assert restrict(square_matrix, [0, 1, 2]) == face(square_matrix, 3)
    assert restrict(square_matrix, [0, 0, 1, 2, 3]) == degeneracy(square_matrix, 0)

def test_restrict_rejects_non_monotone_maps(square_matrix):
    with pytest.raises(ValueError):
        restrict(square_matrix, [2, 1])
    with pytest.raises(ValueError):
        restrict(square_matrix, [0, 4])

def test_type_map_commutes_with_faces():
    """
    Test case for the projection to Δ[1]: the type of a face is the face of the type.
    """
    for simplex in simplices(ordinal(1), 3):
        for i in range(4):
            assert type_of(face(simplex, i)) == type_of(simplex).face(i)
            assert type_of(degeneracy(simplex, i)) == type_of(simplex).degeneracy(i)

def test_type_chi(square_matrix):
    assert type_of(square_matrix) == SimplexType(1, 3)
    assert type_of(square_matrix).chi == (0, 0, 1, 1)

def test_string_form(square_matrix):
    assert str(square_matrix) == "0 0 / 1 0"
    assert str(empty_row(ordinal(1), 3)) == "empty row of length 3"

def test_invalid_shape_raises():
    with pytest.raises(ValueError):
        MatSimplex(-1, -1, FunctorData.empty(ordinal(1)))
    with pytest.raises(ValueError):
        MatSimplex(1, 1, FunctorData.identity(matrix_domain(1, 2)))

def test_arrow_against_the_order_raises(square_matrix):
    with pytest.raises(ValueError):
        square_matrix.arrow(1, 0, 0, 0)

def test_matrix_from_entries_needs_arrows():
    with pytest.raises(ValueError):
        matrix_from_entries(ordinal(1), [[0, 1]])

def test_matrix_from_entries_needs_a_thin_category():
    with pytest.raises(ValueError):
        matrix_from_entries(parallel_arrows(), [[1, 0], [1, 1]])

def test_matrix_from_grid_over_parallel_arrows():
    """
    Test case for a 2 x 2 grid over a non-thin category: the square commutes only if both paths pick the same arrow.
    """
    category = parallel_arrows()
    entries = [[1, 0], [1, 1]]
    horizontal = [[None, 2], [None, 1]]
    simplex = matrix_from_grid(category, 1, 1, entries, [[1, 2]], horizontal)
    assert simplex.arrow(0, 1, 1, 0) == 2
    assert simplex.validate()
    with pytest.raises(ValueError):
        matrix_from_grid(category, 1, 1, entries, [[1, 3]], horizontal)

@pytest.mark.parametrize("category, max_dim", [
    (ordinal(0), 5),
    (ordinal(1), 4),
    (product(ordinal(1), ordinal(1)), 2),
])
def test_simplicial_identities(category, max_dim):
    model = MatrixSimplicialSet(category)
    report = model.check_simplicial_identities(max_dim)
    assert report, report.diagnostics

def test_retraction_witness_agrees_with_degeneracy_test():
    model = MatrixSimplicialSet(ordinal(2))
    for simplex in model.simplices(3):
        assert (model.retraction_witness(simplex) is None) == is_nondegenerate(simplex)

@given(st.integers(min_value=0, max_value=31), st.integers(min_value=0, max_value=4))
def test_restrict_along_coface(index, i):
    simplex = simplices(ordinal(1), 4)[index]
    vertex_map = [v for v in range(5) if v != i]
    assert restrict(simplex, vertex_map) == face(simplex, i)

def test_model_budget():
    """
    Test case when a dimension beyond the configured budget is requested.

    Raises:
    - ValueError: max_dim caps the enumeration.
    """
    model = MatrixSimplicialSet(ordinal(1), configurer=MatSetConfig(max_dim=2))
    assert len(model.simplices(2)) == 8
    with pytest.raises(ValueError):
        model.simplices(3)

def test_config_rejects_negative_budget():
    with pytest.raises(ValueError):
        MatSetConfig(max_dim=-1)
