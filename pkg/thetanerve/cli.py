import json
import logging
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional

import click
from omegaconf import DictConfig, OmegaConf

from thetanerve.benchmark.verification import run_suite
from thetanerve.benchmark.verification_config import VerificationConfig
from thetanerve.categories.two_category import multi_suspension
from thetanerve.constants.budgets import (DEFAULT_SEED, MAX_FREECELL_M, MAX_MAT_DIM, MAX_ORACLE_DIM, MAX_POLYGON,
                                          THETA_PREFIX)
from thetanerve.constants.enums import CommandStatus, LoggingLevel, VerificationSuite
from thetanerve.models.duskin.duskin_config import DuskinNerveConfig
from thetanerve.models.duskin.model import DuskinNerve
from thetanerve.models.freecell.model import nondegenerate_simplices as freecell_nondegenerate
from thetanerve.models.freecell.model import sigma, SigmaIndex, verify_face_relations
from thetanerve.models.matset.matset_config import MatSetConfig
from thetanerve.models.matset.model import MatrixSimplicialSet
from thetanerve.models.theta2.model import TupleSimplicialSet, is_tuple_nondegenerate
from thetanerve.models.theta2.theta2_config import Theta2Config
from thetanerve.paths.bijection import shuffle_to_triangulation, triangulation_to_shuffle
from thetanerve.paths.monotone import reconstruct_matrix
from thetanerve.paths.shuffles import enumerate_shuffles
from thetanerve.paths.triangulations import enumerate_triangulations, filter_constrained
from thetanerve.paths.worked_example import worked_example
from thetanerve.utils.serialization import (duskin_to_json, labeled_path_to_json, matsimplex_to_json,
                                            parse_category_spec, read_paths_file, shuffle_to_json,
                                            triangulation_to_json, tuple_to_json)

LOGGER = logging.getLogger(__name__)

EXIT_CODES = {CommandStatus.OK: 0, CommandStatus.VIOLATION: 1, CommandStatus.ERROR: 2}

DEFAULT_CONFIG = {
    "matset": {"max_dim": MAX_MAT_DIM, "show_progress": False},
    "duskin": {"max_dim": MAX_ORACLE_DIM, "show_progress": False},
    "theta2": {"max_dim": MAX_MAT_DIM, "show_progress": False},
    "verification": {
        "max_mat_dim": 5,
        "max_oracle_dim": MAX_ORACLE_DIM,
        "max_m": MAX_FREECELL_M,
        "max_polygon": MAX_POLYGON,
        "seed": DEFAULT_SEED,
        "show_progress": False,
    },
}


@dataclass
class CommandResult:
    """The outcome of one subcommand; a violation always names the failed check in ``diagnostics``."""
    status: CommandStatus
    payload: Any = None
    diagnostics: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps({"status": self.status.value, "payload": self.payload, "diagnostics": self.diagnostics},
                          sort_keys=True)


@dataclass
class CliState:
    as_json: bool
    budget: Optional[int]
    config: DictConfig


def load_config(path: Optional[str], seed: int, progress: bool) -> DictConfig:
    """The defaults, overlaid with the YAML file at ``path`` and then with the command-line flags."""
    config = OmegaConf.create(DEFAULT_CONFIG)
    if path is not None:
        config = OmegaConf.merge(config, OmegaConf.load(path))
    config.verification.seed = seed
    if progress:
        for section in ("matset", "duskin", "theta2", "verification"):
            config[section].show_progress = True
    return config


def _check_budget(state: CliState, value: int, what: str) -> None:
    if state.budget is not None and value > state.budget:
        message = f"The requested {what} {value} exceeds the budget {state.budget}."
        LOGGER.error(message)
        raise ValueError(message)


def _emit_record(state: CliState, record: dict, text: str) -> None:
    click.echo(json.dumps(record, sort_keys=True) if state.as_json else text)


def _finish(state: CliState, result: CommandResult, text: Optional[str] = None) -> None:
    if state.as_json:
        click.echo(result.to_json())
    else:
        if text is not None and result.status is CommandStatus.OK:
            click.echo(text)
        else:
            click.echo(result.status.value)
            for diagnostic in result.diagnostics:
                click.echo(f"  {diagnostic}", err=result.status is not CommandStatus.OK)
    sys.exit(EXIT_CODES[result.status])


def _run(state: CliState, body: Callable[[], tuple[CommandResult, Optional[str]]]) -> None:
    try:
        result, text = body()
    except ValueError as error:
        result, text = CommandResult(CommandStatus.ERROR, None, [str(error)]), None
    _finish(state, result, text)


def _report_result(report) -> CommandResult:
    status = CommandStatus.OK if report else CommandStatus.VIOLATION
    return CommandResult(status, report.payload, list(report.diagnostics))


@click.group()
@click.option("--json", "as_json", is_flag=True, help="Emit JSON lines instead of text.")
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True, help="Seed of the randomized checks.")
@click.option("--budget", type=int, default=None, help="Largest dimension or polygon size a command may request.")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="YAML file overriding the default budgets.")
@click.option("--log-level", type=click.Choice([level.value for level in LoggingLevel]), default=LoggingLevel.INFO.value,
              show_default=True)
@click.option("--progress", is_flag=True, help="Show progress bars.")
@click.pass_context
def cli(ctx: click.Context, as_json: bool, seed: int, budget: Optional[int], config_path: Optional[str],
        log_level: str, progress: bool) -> None:
    """Matrix simplicial sets, Duskin nerves of suspensions and their combinatorics."""
    logging.getLogger().setLevel(log_level)
    ctx.obj = CliState(as_json, budget, load_config(config_path, seed, progress))


def _enumerate(state: CliState, spec: str, dim: int, count_only: bool, nondegenerate: bool, oracle: bool):
    categories = parse_category_spec(spec)
    _check_budget(state, dim, "dimension")
    config = state.config
    if oracle:
        model = DuskinNerve(multi_suspension(categories), DuskinNerveConfig(**config.duskin))
        records = ((simplex, duskin_to_json(simplex), str(simplex.one_cells)) for simplex in model.simplices(dim))
        degenerate = model.retraction_witness
    elif spec.startswith(THETA_PREFIX):
        model = TupleSimplicialSet(categories, Theta2Config(**config.theta2))
        records = ((simplex, tuple_to_json(simplex), " | ".join(str(part) for part in simplex.parts))
                   for simplex in model.iter_simplices(dim))
        degenerate = lambda simplex: None if is_tuple_nondegenerate(simplex) else 0
    else:
        model = MatrixSimplicialSet(categories[0], MatSetConfig(**config.matset))
        records = ((simplex, matsimplex_to_json(simplex), str(simplex)) for simplex in model.iter_simplices(dim))
        degenerate = model.retraction_witness

    count = 0
    for simplex, record, text in records:
        if nondegenerate and degenerate(simplex) is not None:
            continue
        count += 1
        if not count_only:
            _emit_record(state, record, text)
    LOGGER.info(f"{spec} has {count} {'non-degenerate ' if nondegenerate else ''}simplices in dimension {dim}.")
    return CommandResult(CommandStatus.OK, {"count": count}), str(count) if count_only else None


@cli.command("enumerate")
@click.argument("category")
@click.option("--dim", type=int, required=True, help="The simplex dimension.")
@click.option("--count-only", is_flag=True, help="Print only the number of simplices.")
@click.option("--nondegenerate", is_flag=True, help="Keep only non-degenerate simplices.")
@click.option("--oracle", is_flag=True, help="Enumerate the brute-force Duskin nerve of the suspension instead.")
@click.pass_obj
def enumerate_command(state: CliState, category: str, dim: int, count_only: bool, nondegenerate: bool, oracle: bool) -> None:
    """Streams the simplices of Mat(D) or of the Θ₂ tuple set, one per line.

    CATEGORY is ordinal:m, square or theta:[r|n1,...,nr].
    """
    _run(state, lambda: _enumerate(state, category, dim, count_only, nondegenerate, oracle))


@cli.command()
@click.option("--widths", required=True, help="Comma separated widths n1,...,nr of the Θ₂ object.")
@click.option("--dim", type=int, required=True)
@click.option("--count-only", is_flag=True)
@click.option("--nondegenerate", is_flag=True)
@click.pass_obj
def theta2(state: CliState, widths: str, dim: int, count_only: bool, nondegenerate: bool) -> None:
    """Enumerates the tuples of matrices describing the nerve of [r|n1,...,nr]."""
    r = len(widths.split(","))
    _run(state, lambda: _enumerate(state, f"{THETA_PREFIX}[{r}|{widths}]", dim, count_only, nondegenerate, False))


def _verify(state: CliState, suite: str, spec: Optional[str], dim: Optional[int], max_m: Optional[int],
            n: Optional[int]):
    options = OmegaConf.to_container(state.config.verification)
    for key, value, what in (("max_mat_dim", dim, "dimension"), ("max_oracle_dim", dim, "dimension"),
                             ("max_m", max_m, "m"), ("max_polygon", n, "polygon size")):
        if value is not None:
            if key == "max_oracle_dim" and suite != VerificationSuite.PHI_ORACLE.value:
                continue
            _check_budget(state, value, what)
            options[key] = value
    categories = None
    if spec is not None:
        found = parse_category_spec(spec)
        if len(found) != 1:
            message = f"The suites run over a single category, '{spec}' names {len(found)}."
            LOGGER.error(message)
            raise ValueError(message)
        categories = {spec: found[0]}
    report = run_suite(VerificationSuite(suite), VerificationConfig(**options), categories)
    return _report_result(report), None


@cli.command()
@click.argument("suite", type=click.Choice([suite.value for suite in VerificationSuite]))
@click.option("--cat", "spec", default=None, help="Run the suite over this category only.")
@click.option("--dim", type=int, default=None, help="Largest dimension scanned.")
@click.option("--max-m", type=int, default=None, help="Largest m for the free 2-cell relations.")
@click.option("--n", type=int, default=None, help="Largest polygon size for the bijection.")
@click.pass_obj
def verify(state: CliState, suite: str, spec: Optional[str], dim: Optional[int], max_m: Optional[int],
           n: Optional[int]) -> None:
    """Runs one exhaustive verification suite and reports the first counterexample."""
    _run(state, lambda: _verify(state, suite, spec, dim, max_m, n))


def _bijection(state: CliState, n: int, k: Optional[int], check: bool):
    _check_budget(state, n, "polygon size")
    triangulations = enumerate_triangulations(n)
    ks: Iterable[int] = range(n) if k is None else [k]
    counts, diagnostics = {}, []
    for k_ in ks:
        constrained = filter_constrained(triangulations, k_)
        counts[k_] = len(constrained)
        for triangulation in constrained:
            shuffle = triangulation_to_shuffle(triangulation, n, k_)
            _emit_record(state,
                         {"k": k_, "triangulation": triangulation_to_json(triangulation), "shuffle": shuffle_to_json(shuffle)},
                         f"k={k_}  {triangulation}  {shuffle}")
            if check and shuffle_to_triangulation(shuffle, n, k_) != triangulation:
                diagnostics.append(f"k={k_}: the round trip moves {triangulation}")
        if check and len(enumerate_shuffles(k_, n - 1 - k_)) != counts[k_]:
            diagnostics.append(f"k={k_}: {counts[k_]} triangulations but a different number of shuffles")
    status = CommandStatus.VIOLATION if diagnostics else CommandStatus.OK
    return CommandResult(status, {"n": n, "counts": counts}, diagnostics), None


@cli.command()
@click.option("--n", type=int, required=True, help="The polygon has n + 1 vertices.")
@click.option("--k", type=int, default=None, help="The cut; all 0 <= k <= n - 1 when omitted.")
@click.option("--verify", "check", is_flag=True, help="Check the round trip and the counts.")
@click.pass_obj
def bijection(state: CliState, n: int, k: Optional[int], check: bool) -> None:
    """Lists the constrained triangulations of the (n+1)-gon with their shuffles."""
    _run(state, lambda: _bijection(state, n, k, check))


def _reconstruct(input_path: str):
    category, n, k, paths = read_paths_file(input_path)
    simplex = reconstruct_matrix(n, k, paths)
    payload = {"matrix": matsimplex_to_json(simplex), "labels": simplex.labelled_entries()}
    return CommandResult(CommandStatus.OK, payload), str(simplex)


@cli.command()
@click.option("--input", "input_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.pass_obj
def reconstruct(state: CliState, input_path: str) -> None:
    """Glues the labelled paths of a JSON file back into a matrix."""
    _run(state, lambda: _reconstruct(input_path))


def _appendix_example():
    result = worked_example()
    payload = {
        "paths": {name: labeled_path_to_json(shuffle, path) for name, (shuffle, path) in result.paths.items()},
        "rows": [list(row) for row in result.rows],
        "matrix": matsimplex_to_json(result.matrix),
    }
    if not result.matches:
        return CommandResult(CommandStatus.VIOLATION, payload, [f"reconstructed rows {result.rows} differ from the expected ones"]), None
    return CommandResult(CommandStatus.OK, payload), "\n".join(" ".join(row) for row in result.rows)


@cli.command("appendix-example")
@click.pass_obj
def appendix_example(state: CliState) -> None:
    """Reconstructs the 2 x 3 grid matrix from three labelled triangulations of a 4-simplex."""
    _run(state, _appendix_example)


def _freecell(state: CliState, check_relations: bool, max_m: int, list_nondegenerate: bool, dim: Optional[int]):
    if not check_relations and not list_nondegenerate:
        message = "Nothing to do: pass --check-relations or --list-nondegenerate."
        LOGGER.error(message)
        raise ValueError(message)
    payload, diagnostics = {}, []
    if check_relations:
        _check_budget(state, max_m, "m")
        relations = 0
        for m in range(1, max_m + 1):
            report = verify_face_relations(m)
            if not report:
                diagnostics.extend(report.diagnostics)
                break
            relations += report.payload["relations"]
        payload["relations"] = relations
    if list_nondegenerate:
        if dim is None:
            message = "--list-nondegenerate needs --dim."
            LOGGER.error(message)
            raise ValueError(message)
        _check_budget(state, dim, "dimension")
        names = {sigma(SigmaIndex(dim, primed)): str(SigmaIndex(dim, primed)) for primed in (False, True)}
        for simplex in freecell_nondegenerate(dim):
            _emit_record(state, {"name": names.get(simplex), "simplex": matsimplex_to_json(simplex)},
                         f"{names.get(simplex)}  {simplex}")
    status = CommandStatus.VIOLATION if diagnostics else CommandStatus.OK
    return CommandResult(status, payload, diagnostics), None


@cli.command()
@click.option("--check-relations", is_flag=True, help="Verify every face relation of σ and σ'.")
@click.option("--max-m", type=int, default=MAX_FREECELL_M, show_default=True)
@click.option("--list-nondegenerate", is_flag=True, help="List the non-degenerate simplices of Mat([1]).")
@click.option("--dim", type=int, default=None)
@click.pass_obj
def freecell(state: CliState, check_relations: bool, max_m: int, list_nondegenerate: bool, dim: Optional[int]) -> None:
    """The free 2-cell: closed-form simplices and their face relations."""
    _run(state, lambda: _freecell(state, check_relations, max_m, list_nondegenerate, dim))


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
