import json
import pytest

from thetanerve.categories.fincat import FinCategory, FunctorData, ordinal, product
from thetanerve.categories.two_category import multi_suspension, suspension
from thetanerve.models.duskin.model import nerve_simplices
from thetanerve.models.matset.model import empty_column, empty_row, matrix_from_entries
from thetanerve.paths import Shuffle, Triangulation
from thetanerve.utils.serialization import (duskin_from_json, duskin_to_json, fincat_from_json, fincat_to_json,
                                            functor_from_json, functor_to_json, load_schema, matsimplex_from_json,
                                            matsimplex_to_json, parse_category_spec, read_paths_file,
                                            shuffle_to_json, triangulation_to_json, two_category_from_json,
                                            two_category_to_json)
from thetanerve.utils.validation import ValidationReport

def idempotent_monoid():
    return FinCategory(1, [0, 0], [0, 0], [0], [[0, 1], [1, 1]])

@pytest.mark.parametrize("text, n_objects, n_morphisms", [
    ("ordinal:0", 1, 1),
    ("ordinal:2", 3, 6),
    (" square ", 4, 9),
])
def test_parse_single_categories(text, n_objects, n_morphisms):
    [category] = parse_category_spec(text)
    assert (category.n_objects, category.n_morphisms) == (n_objects, n_morphisms)

def test_parse_theta_object():
    categories = parse_category_spec("theta:[2|1,2]")
    assert categories == [ordinal(1), ordinal(2)]

@pytest.mark.parametrize("text", ["bogus", "ordinal:", "ordinal:-1", "ordinal:x"])
def test_parse_rejects_unknown_text(text):
    """
    Test case for category names that match none of the built-in forms.

    Raises:
    - ValueError: the message lists the accepted forms or names the bad ordinal.
    """
    with pytest.raises(ValueError):
        parse_category_spec(text)

class TestFinCategoryJson:
    def test_shape(self):
        """
        Test case for the encoding of [1]: integer objects, {id, src, tgt} morphisms and composition triples.
        """
        data = fincat_to_json(ordinal(1))
        assert data["objects"] == [0, 1]
        assert data["morphisms"] == [{"id": 0, "src": 0, "tgt": 0}, {"id": 1, "src": 0, "tgt": 1}, {"id": 2, "src": 1, "tgt": 1}]
        assert data["identities"] == [0, 2]
        assert data["composition"] == [[0, 0, 0], [1, 0, 1], [2, 1, 1], [2, 2, 2]]

    @pytest.mark.parametrize("category", [ordinal(0), product(ordinal(1), ordinal(2)), idempotent_monoid()])
    def test_round_trip(self, category):
        data = json.loads(json.dumps(fincat_to_json(category)))
        restored = fincat_from_json(data)
        assert restored == category
        assert restored.object_labels == category.object_labels

    def test_from_name(self):
        assert fincat_from_json("ordinal:1") == ordinal(1)
        with pytest.raises(ValueError):
            fincat_from_json("theta:[2|0,0]")

    @pytest.mark.parametrize("field", ["objects", "morphisms", "identities", "composition"])
    def test_missing_field_raises(self, field):
        data = fincat_to_json(ordinal(1))
        del data[field]
        with pytest.raises(ValueError):
            fincat_from_json(data)

    @pytest.mark.parametrize("change", [
        {"objects": [1, 2]},
        {"morphisms": [{"id": 0, "src": 0, "tgt": 0}, {"id": 2, "src": 0, "tgt": 1}, {"id": 3, "src": 1, "tgt": 1}]},
        {"composition": [[0, 0, 0], [1, 0, 1], [2, 1, 7], [2, 2, 2]]},
        {"composition": [[0, 0, 0], [1, 0, 1], [2, 2, 2]]},
    ])
    def test_invalid_encodings_raise(self, change):
        """
        Test case for encodings that are well-formed JSON but no category.

        Raises:
        - ValueError: gaps in the ids, composites out of range or a missing composite.
        """
        data = {**fincat_to_json(ordinal(1)), **change}
        with pytest.raises(ValueError):
            fincat_from_json(data)

class TestFunctorJson:
    def test_round_trip(self):
        functor = FunctorData(ordinal(1), ordinal(2), [0, 2], [0, 2, 5])
        data = json.loads(json.dumps(functor_to_json(functor)))
        assert data["obj_map"] == [0, 2]
        assert data["mor_map"] == [0, 2, 5]
        assert functor_from_json(data) == functor

    def test_named_categories(self):
        data = {"source": "ordinal:0", "target": "ordinal:1", "obj_map": [1], "mor_map": [2]}
        assert functor_from_json(data) == FunctorData.constant(ordinal(0), ordinal(1), 1)

    def test_non_functor_raises(self):
        data = {"source": "ordinal:1", "target": "ordinal:1", "obj_map": [1, 0], "mor_map": [2, 1, 0]}
        with pytest.raises(ValueError):
            functor_from_json(data)

    def test_missing_field_raises(self):
        with pytest.raises(ValueError):
            functor_from_json({"source": "ordinal:0", "target": "ordinal:0", "obj_map": [0]})

class TestTwoCategoryJson:
    @pytest.mark.parametrize("two_category", [suspension(ordinal(1)), multi_suspension([ordinal(1), ordinal(0)])])
    def test_round_trip(self, two_category):
        data = json.loads(json.dumps(two_category_to_json(two_category)))
        restored = two_category_from_json(data)
        assert (restored.n_objects, restored.n_one_cells, restored.n_two_cells) == \
            (two_category.n_objects, two_category.n_one_cells, two_category.n_two_cells)
        assert two_category_to_json(restored) == data

    def test_shape(self):
        data = two_category_to_json(suspension(ordinal(1)))
        assert data["objects"] == [0, 1]
        assert len(data["one_cells"]) == 4
        assert len(data["two_cells"]) == 5
        assert {"id": 1, "src": 0, "tgt": 1} in data["one_cells"]
        assert data["object_labels"] == ["x", "y"]

    def test_missing_composite_raises(self):
        data = two_category_to_json(suspension(ordinal(1)))
        data["horizontal"] = data["horizontal"][1:]
        with pytest.raises(ValueError):
            two_category_from_json(data)

    def test_two_cell_across_homs_raises(self):
        data = two_category_to_json(suspension(ordinal(1)))
        data["two_cells"][0] = {"id": 0, "src": 0, "tgt": 3}
        with pytest.raises(ValueError):
            two_category_from_json(data)

class TestDuskinJson:
    def test_round_trip(self):
        two_category = suspension(ordinal(1))
        for simplex in nerve_simplices(two_category, 3):
            data = json.loads(json.dumps(duskin_to_json(simplex)))
            assert duskin_from_json(data, two_category) == simplex

    def test_foreign_simplex_raises(self):
        data = {"dim": 1, "objects": [0, 1], "one_cells": [3], "two_cells": []}
        with pytest.raises(ValueError):
            duskin_from_json(data, suspension(ordinal(1)))

    def test_wrong_counts_raise(self):
        with pytest.raises(ValueError):
            duskin_from_json({"dim": 2, "objects": [0, 1, 1], "one_cells": [1, 1], "two_cells": [0]})
        with pytest.raises(ValueError):
            duskin_from_json({"dim": 0, "objects": [0]})

class TestMatSimplexJson:
    def test_square_matrix(self):
        category = ordinal(1)
        simplex = matrix_from_entries(category, [[0, 0], [1, 0]])
        data = matsimplex_to_json(simplex)
        assert data["entries"] == [[0, 0], [1, 0]]
        assert data["vert_arrows"] == [[1, 0]]
        assert data["horz_arrows"] == [[0], [1]]
        assert matsimplex_from_json(category, data) == simplex

    @pytest.mark.parametrize("make, size", [(empty_row, 3), (empty_column, 2)])
    def test_empty_matrices(self, make, size):
        category = ordinal(1)
        simplex = make(category, size)
        data = matsimplex_to_json(simplex)
        assert data["entries"] == []
        assert data["n"] == size
        assert matsimplex_from_json(category, data) == simplex

    def test_empty_matrices_by_dimension(self):
        """
        Test case for the short forms {k: -1, n} and {l: -1, n} of the empty row and column.
        """
        category = ordinal(1)
        assert matsimplex_from_json(category, {"k": -1, "n": 3}) == empty_row(category, 3)
        assert matsimplex_from_json(category, {"l": -1, "n": 2}) == empty_column(category, 2)
        with pytest.raises(ValueError):
            matsimplex_from_json(category, {"k": -1, "l": 2, "n": 3})

    def test_malformed_matrix_raises(self):
        with pytest.raises(ValueError):
            matsimplex_from_json(ordinal(1), {"k": 1, "l": 1, "entries": [[0, 0]]})

def test_shuffle_and_triangulation_records():
    assert shuffle_to_json(Shuffle.from_steps(1, 2, "HVH")) == {"k": 1, "l": 2, "steps": "HVH"}
    triangulation = Triangulation(4, {(0, 1, 4), (1, 3, 4), (1, 2, 3)})
    assert triangulation_to_json(triangulation)["triangles"] == [[0, 1, 4], [1, 2, 3], [1, 3, 4]]

@pytest.mark.parametrize("name, field", [
    ("fincat", "composition"),
    ("functor", "mor_map"),
    ("twocategory", "horizontal"),
    ("duskin", "two_cells"),
    ("matsimplex", "n"),
    ("paths", "paths"),
])
def test_load_schema(name, field):
    schema = load_schema(name)
    assert schema["type"] == "object"
    assert field in schema["properties"]

def test_load_missing_schema_raises():
    with pytest.raises(ValueError):
        load_schema("nerve")

class TestReadPathsFile:
    def write(self, tmp_path, data):
        path = tmp_path / "paths.json"
        path.write_text(data if isinstance(data, str) else json.dumps(data))
        return path

    def test_reads_paths(self, tmp_path):
        path = self.write(tmp_path, {
            "category": fincat_to_json(ordinal(1)),
            "n": 3,
            "k": 1,
            "paths": [{"steps": "HV", "objects": [0, 0, 1], "arrows": [0, 1]}],
        })
        category, n, k, paths = read_paths_file(path)
        assert category == ordinal(1)
        assert (n, k) == (3, 1)
        [(shuffle, labeled)] = paths
        assert shuffle.word == "HV"
        assert list(labeled.objects) == [0, 0, 1]

    @pytest.mark.parametrize("data", [
        "{not json",
        {"category": "ordinal:1", "n": 3, "paths": []},
        {"category": "ordinal:1", "n": 3, "k": 1, "paths": [{"steps": "HV", "objects": [0, 0, 1]}]},
    ])
    def test_malformed_files_raise(self, tmp_path, data):
        with pytest.raises(ValueError):
            read_paths_file(self.write(tmp_path, data))

    def test_missing_file_raises(self, tmp_path):
        with pytest.raises(ValueError):
            read_paths_file(tmp_path / "absent.json")

class TestValidationReport:
    def test_truthiness(self):
        assert ValidationReport.ok(count=3)
        assert not ValidationReport.failure("broken")

    def test_merge(self):
        merged = ValidationReport.ok(a=1).merge(ValidationReport.failure("second", b=2))
        assert not merged
        assert merged.diagnostics == ["second"]
        assert merged.payload == {"a": 1, "b": 2}
        merged = ValidationReport.failure("first").merge(ValidationReport.failure("second"))
        assert merged.diagnostics == ["first", "second"]
