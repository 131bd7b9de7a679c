import pytest
from itertools import combinations

from thetanerve.categories.fincat import ordinal
from thetanerve.models.freecell.model import (SigmaIndex, SkeletonLabel, check_two_skeleton, check_uniqueness,
                                              face_relations, nondegenerate_simplices, sigma,
                                              skeleton_label_simplex, two_skeleton_face, verify_face_relations)
from thetanerve.models.matset.model import empty_column, empty_row, is_nondegenerate, matrix_from_entries

@pytest.mark.parametrize("n, primed, entries", [
    (1, False, [[1]]),
    (1, True, [[0]]),
    (2, False, [[1, 0]]),
    (2, True, [[0], [1]]),
    (3, False, [[1, 0], [1, 1]]),
    (3, True, [[0, 0], [1, 0]]),
])
def test_closed_forms(n, primed, entries):
    """
    Test case for the entries of σ_n and σ'_n in low dimensions.

    Args:
        n (int): The dimension.
        primed (bool): Whether the primed simplex is meant.
        entries (list): The expected matrix.
    """
    assert sigma(SigmaIndex(n, primed)) == matrix_from_entries(ordinal(1), entries)

def test_dimension_zero():
    assert sigma(SigmaIndex(0)) == empty_row(ordinal(1), 0)
    assert sigma(SigmaIndex(0, True)) == empty_column(ordinal(1), 0)

@pytest.mark.parametrize("n", range(0, 8))
def test_closed_forms_are_nondegenerate(n):
    for primed in (False, True):
        simplex = sigma(SigmaIndex(n, primed))
        assert simplex.dim == n
        assert is_nondegenerate(simplex)

@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_face_relations(m):
    report = verify_face_relations(m)
    assert report, report.diagnostics
    assert report.payload["relations"] == 2 * (2 * m + 1) + 2 * (2 * m + 2)

def test_face_relation_labels():
    labels = [label for label, _, _ in face_relations(1)]
    assert labels[0] == "d0σ2 = s0σ0"
    assert "d1σ2 = σ'1" in labels
    assert "d2σ2 = σ1" in labels

def test_face_relations_need_positive_m():
    with pytest.raises(ValueError):
        face_relations(0)

@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_two_skeleton(m):
    """
    Test case for the eight-case formula against restricting σ_2m to every vertex triple.
    """
    report = check_two_skeleton(m)
    assert report, report.diagnostics
    assert report.payload["triples"] == len(list(combinations(range(2 * m + 1), 3)))

def test_two_skeleton_labels():
    assert str(two_skeleton_face(1, 0, 1, 2)) == "σ2"
    assert str(SkeletonLabel((0, 0), SigmaIndex(0, True))) == "s0s0σ'0"
    label = two_skeleton_face(2, 0, 1, 2)
    assert skeleton_label_simplex(label).dim == 2

def test_two_skeleton_rejects_bad_triples():
    with pytest.raises(ValueError):
        two_skeleton_face(1, 0, 2, 1)
    with pytest.raises(ValueError):
        two_skeleton_face(1, 0, 1, 3)

@pytest.mark.parametrize("n", range(0, 8))
def test_uniqueness(n):
    assert check_uniqueness(n)
    assert len(nondegenerate_simplices(n)) == 2

def test_sigma_index():
    assert str(SigmaIndex(3)) == "σ3"
    assert str(SigmaIndex(3, True)) == "σ'3"
    with pytest.raises(ValueError):
        SigmaIndex(-1)
