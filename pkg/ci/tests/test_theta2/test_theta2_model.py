import pytest

from thetanerve.categories.fincat import ordinal
from thetanerve.categories.two_category import multi_suspension
from thetanerve.models.duskin import DuskinNerve
from thetanerve.models.matset.model import empty_column, empty_row, matrix_from_entries
from thetanerve.models.theta2 import (Theta2Config, TupleSimplex, TupleSimplicialSet, count_nondegenerate,
                                      parse_theta2_object, pullback_simplices, theta2_object, tuple_phi,
                                      tuple_phi_extended, tuple_phi_inverse, tuple_simplices,
                                      type_vector_in_image)

@pytest.mark.parametrize("n, expected", [(0, 3), (1, 6), (2, 10)])
def test_tuples_over_two_points(n, expected):
    """
    Test case for [2|0,0]: one tuple per nondecreasing pair of types in -1..n.
    """
    assert len(tuple_simplices(theta2_object(2, [0, 0]), n)) == expected

def test_tuples_over_two_intervals():
    categories = theta2_object(2, [1, 1])
    assert len(tuple_simplices(categories, 2)) == 42
    assert count_nondegenerate(categories, 2) == 23

def test_model_matches_functions():
    model = TupleSimplicialSet(theta2_object(2, [1, 1]))
    assert len(model.simplices(2)) == 42
    assert len(model.nondegenerate_simplices(2)) == 23

@pytest.mark.parametrize("widths, n", [([0, 0], 2), ([1, 0], 2), ([1, 1], 2), ([0, 1, 0], 1)])
def test_pullback_agrees_with_enumeration(widths, n):
    categories = theta2_object(len(widths), widths)
    assert set(pullback_simplices(categories, n)) == set(tuple_simplices(categories, n))

@pytest.mark.parametrize("widths", [[0, 0], [1, 0], [0, 1]])
def test_counts_match_nerve_of_multi_suspension(widths):
    categories = theta2_object(2, widths)
    nerve = DuskinNerve(multi_suspension(categories))
    for n in range(4):
        assert len(tuple_simplices(categories, n)) == len(nerve.simplices(n))

def test_tuple_phi_is_inverted():
    categories = theta2_object(2, [1, 1])
    two_category = multi_suspension(categories)
    for n in range(4):
        for simplex in tuple_simplices(categories, n):
            image = tuple_phi(categories, simplex)
            assert image.validate_in(two_category)
            assert tuple_phi_inverse(categories, image) == simplex

def test_tuple_phi_is_gated_to_dimension_three():
    categories = theta2_object(2, [0, 0])
    simplex = tuple_simplices(categories, 4)[4]
    with pytest.raises(ValueError):
        tuple_phi(categories, simplex)
    assert tuple_phi_inverse(categories, tuple_phi_extended(categories, simplex)) == simplex

def test_simplicial_identities():
    model = TupleSimplicialSet(theta2_object(2, [1, 0]))
    report = model.check_simplicial_identities(3)
    assert report, report.diagnostics

def test_tuple_types():
    category = ordinal(1)
    simplex = TupleSimplex([empty_row(category, 1), matrix_from_entries(category, [[1]]), empty_column(category, 1)])
    assert simplex.types == (-1, 0, 1)
    assert simplex.dim == 1

def test_decreasing_types_raise():
    """
    Test case when the parts of a tuple do not have nondecreasing types.

    Raises:
    - ValueError: such a tuple has no nerve simplex.
    """
    category = ordinal(1)
    with pytest.raises(ValueError):
        TupleSimplex([empty_column(category, 1), empty_row(category, 1)])

def test_mismatched_dimensions_raise():
    category = ordinal(1)
    with pytest.raises(ValueError):
        TupleSimplex([empty_row(category, 1), empty_row(category, 2)])
    with pytest.raises(ValueError):
        TupleSimplex([])

@pytest.mark.parametrize("types, expected", [([0, 1, 1], True), ([-1, -1], True), ([1, 0], False)])
def test_type_vector_in_image(types, expected):
    assert type_vector_in_image(types) == expected

def test_theta2_object():
    assert theta2_object(3, [2, 0, 1]) == [ordinal(2), ordinal(0), ordinal(1)]
    with pytest.raises(ValueError):
        theta2_object(2, [1])
    with pytest.raises(ValueError):
        theta2_object(1, [-1])

@pytest.mark.parametrize("text, expected", [("[3|2,0,1]", (3, [2, 0, 1])), (" [ 1 | 4 ] ", (1, [4]))])
def test_parse_theta2_object(text, expected):
    assert parse_theta2_object(text) == expected

@pytest.mark.parametrize("text", ["[3|]", "3|2,0,1", "[a|1]"])
def test_parse_theta2_object_rejects_malformed_text(text):
    with pytest.raises(ValueError):
        parse_theta2_object(text)

def test_budget():
    model = TupleSimplicialSet(theta2_object(1, [1]), Theta2Config(max_dim=1))
    assert len(model.simplices(1)) == 4
    with pytest.raises(ValueError):
        model.simplices(2)
    with pytest.raises(ValueError):
        Theta2Config(max_dim=-1)
