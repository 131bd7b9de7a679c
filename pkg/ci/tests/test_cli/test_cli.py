import json
import pytest
from click.testing import CliRunner

from thetanerve.cli import DEFAULT_CONFIG, EXIT_CODES, CommandResult, cli, load_config
from thetanerve.constants.enums import CommandStatus, VerificationSuite
from thetanerve.utils.validation import ValidationReport

@pytest.fixture
def runner():
    return CliRunner()

def last_json(result) -> dict:
    return json.loads(result.stdout.strip().splitlines()[-1])

@pytest.mark.parametrize("args, expected", [
    (["enumerate", "ordinal:1", "--dim", "5", "--nondegenerate", "--count-only"], "2"),
    (["enumerate", "ordinal:0", "--dim", "3", "--count-only"], "5"),
    (["enumerate", "ordinal:1", "--dim", "3", "--count-only"], "16"),
    (["enumerate", "ordinal:2", "--dim", "3", "--count-only"], "44"),
    (["enumerate", "ordinal:1", "--dim", "4", "--oracle", "--count-only"], "32"),
    (["enumerate", "theta:[2|0,0]", "--dim", "1", "--count-only"], "6"),
    (["theta2", "--widths", "1,1", "--dim", "2", "--count-only"], "42"),
    (["theta2", "--widths", "1,1", "--dim", "2", "--count-only", "--nondegenerate"], "23"),
])
def test_counts(runner, args, expected):
    """
    Test case for the counting commands in text mode.

    Args:
        args (list): The command line.
        expected (str): The printed count.
    """
    result = runner.invoke(cli, args)
    assert result.exit_code == 0
    assert result.stdout.strip() == expected

def test_enumerate_streams_json_records(runner):
    result = runner.invoke(cli, ["--json", "enumerate", "ordinal:1", "--dim", "1"])
    assert result.exit_code == 0
    lines = result.stdout.strip().splitlines()
    assert len(lines) == 5
    assert json.loads(lines[0]) == {"k": -1, "l": 1, "n": 1, "entries": [], "vert_arrows": [], "horz_arrows": []}
    assert json.loads(lines[1])["entries"] == [[0]]
    assert last_json(result) == {"status": "ok", "payload": {"count": 4}, "diagnostics": []}

def test_enumerate_text_records(runner):
    result = runner.invoke(cli, ["enumerate", "ordinal:1", "--dim", "2", "--nondegenerate"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[:2] == ["1 0", "0 / 1"]

@pytest.mark.parametrize("args", [
    ["enumerate", "bogus", "--dim", "1"],
    ["enumerate", "ordinal:x", "--dim", "1"],
    ["--budget", "3", "enumerate", "ordinal:1", "--dim", "5", "--count-only"],
    ["enumerate", "ordinal:1", "--dim", "5", "--oracle", "--count-only"],
    ["freecell"],
    ["freecell", "--list-nondegenerate"],
])
def test_errors_exit_with_two(runner, args):
    """
    Test case for invalid requests: unknown categories, exceeded budgets and missing options.
    """
    result = runner.invoke(cli, args)
    assert result.exit_code == EXIT_CODES[CommandStatus.ERROR] == 2

def test_error_in_json_mode(runner):
    result = runner.invoke(cli, ["--json", "enumerate", "bogus", "--dim", "1"])
    record = last_json(result)
    assert record["status"] == "error"
    assert "Unknown category" in record["diagnostics"][0]

def test_bijection(runner):
    result = runner.invoke(cli, ["--json", "bijection", "--n", "4", "--k", "1", "--verify"])
    assert result.exit_code == 0
    lines = result.stdout.strip().splitlines()
    assert [json.loads(line)["shuffle"]["steps"] for line in lines[:-1]] == ["VHH", "HVH", "HHV"]
    assert last_json(result)["payload"] == {"n": 4, "counts": {"1": 3}}

def test_bijection_all_cuts(runner):
    result = runner.invoke(cli, ["--json", "bijection", "--n", "5"])
    assert result.exit_code == 0
    assert last_json(result)["payload"]["counts"] == {"0": 1, "1": 4, "2": 6, "3": 4, "4": 1}

def test_appendix_example(runner):
    result = runner.invoke(cli, ["appendix-example"])
    assert result.exit_code == 0
    assert result.stdout.strip().splitlines() == ["p02 p01 p00", "p12 p11 p10"]

def test_appendix_example_json(runner):
    result = runner.invoke(cli, ["--json", "appendix-example"])
    payload = last_json(result)["payload"]
    assert payload["rows"] == [["p02", "p01", "p00"], ["p12", "p11", "p10"]]
    assert payload["paths"]["middle column"]["steps"] == "HVH"
    assert payload["matrix"]["entries"] == [[0, 1, 2], [3, 4, 5]]

def test_freecell_relations(runner):
    result = runner.invoke(cli, ["--json", "freecell", "--check-relations", "--max-m", "2"])
    assert result.exit_code == 0
    assert last_json(result)["payload"] == {"relations": 14 + 22}

def test_freecell_nondegenerate(runner):
    result = runner.invoke(cli, ["freecell", "--list-nondegenerate", "--dim", "3"])
    assert result.exit_code == 0
    lines = result.stdout.strip().splitlines()
    assert lines[0] == "σ'3  0 0 / 1 0"
    assert lines[1] == "σ3  1 0 / 1 1"

@pytest.mark.parametrize("args", [
    ["verify", "bijection", "--n", "5"],
    ["verify", "freecell-relations", "--max-m", "2"],
    ["verify", "coskeletal", "--cat", "ordinal:1"],
    ["verify", "phi-oracle", "--cat", "ordinal:1", "--dim", "3"],
    ["verify", "simplicial-identities", "--cat", "square", "--dim", "2"],
])
def test_verify_suites(runner, args):
    result = runner.invoke(cli, ["--json"] + args)
    assert result.exit_code == 0
    assert last_json(result)["status"] == "ok"

def test_verify_reports_violations(runner, mocker):
    run_suite = mocker.patch("thetanerve.cli.run_suite", return_value=ValidationReport.failure("d_0 d_1 != d_0 d_0 on x"))
    result = runner.invoke(cli, ["--seed", "7", "verify", "simplicial-identities", "--dim", "2"])
    assert result.exit_code == EXIT_CODES[CommandStatus.VIOLATION]
    assert result.stdout.splitlines()[0] == "violation"
    suite, config, categories = run_suite.call_args.args
    assert suite is VerificationSuite.SIMPLICIAL_IDENTITIES
    assert config.config["max_mat_dim"] == 2
    assert config.config["seed"] == 7
    assert categories is None

def test_verify_rejects_unknown_suite(runner):
    result = runner.invoke(cli, ["verify", "everything"])
    assert result.exit_code != 0

class TestReconstruct:
    def paths_file(self, tmp_path, second_objects, second_arrows=(0, 1)):
        data = {
            "category": "ordinal:1",
            "n": 3,
            "k": 1,
            "paths": [
                {"steps": "HV", "objects": [0, 0, 1], "arrows": [0, 1]},
                {"steps": "VH", "objects": second_objects, "arrows": list(second_arrows)},
            ],
        }
        path = tmp_path / "paths.json"
        path.write_text(json.dumps(data))
        return str(path)

    def test_reconstruct(self, runner, tmp_path):
        result = runner.invoke(cli, ["reconstruct", "--input", self.paths_file(tmp_path, [0, 0, 1])])
        assert result.exit_code == 0
        assert result.stdout.strip() == "0 0 / 1 0"

    def test_reconstruct_json(self, runner, tmp_path):
        result = runner.invoke(cli, ["--json", "reconstruct", "--input", self.paths_file(tmp_path, [0, 0, 1])])
        payload = last_json(result)["payload"]
        assert payload["labels"] == [["0", "0"], ["1", "0"]]
        assert payload["matrix"]["vert_arrows"] == [[1, 0]]

    def test_conflicting_paths(self, runner, tmp_path):
        """
        Test case when two paths disagree on an entry.

        Raises:
        - The command exits with status error and names the cell.
        """
        result = runner.invoke(cli, ["--json", "reconstruct", "--input", self.paths_file(tmp_path, [1, 1, 1], [2, 2])])
        assert result.exit_code == 2
        assert "cell" in last_json(result)["diagnostics"][0]

    def test_malformed_file(self, runner, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        result = runner.invoke(cli, ["reconstruct", "--input", str(path)])
        assert result.exit_code == 2

def test_config_file_overrides_budgets(runner, tmp_path):
    path = tmp_path / "budgets.yaml"
    path.write_text("matset:\n  max_dim: 2\n")
    assert runner.invoke(cli, ["--config", str(path), "enumerate", "ordinal:1", "--dim", "2", "--count-only"]).exit_code == 0
    assert runner.invoke(cli, ["--config", str(path), "enumerate", "ordinal:1", "--dim", "3", "--count-only"]).exit_code == 2

def test_load_config(tmp_path):
    path = tmp_path / "budgets.yaml"
    path.write_text("verification:\n  max_polygon: 5\n")
    config = load_config(str(path), seed=3, progress=True)
    assert config.verification.max_polygon == 5
    assert config.verification.seed == 3
    assert config.matset.show_progress
    assert config.duskin.max_dim == DEFAULT_CONFIG["duskin"]["max_dim"]

def test_command_result_json():
    result = CommandResult(CommandStatus.VIOLATION, {"b": 1, "a": 2}, ["first"])
    assert result.to_json() == '{"diagnostics": ["first"], "payload": {"a": 2, "b": 1}, "status": "violation"}'
