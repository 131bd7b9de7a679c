import logging
from math import comb
from typing import Callable, Mapping, Optional

import numpy as np
from tqdm import tqdm

from thetanerve.benchmark.verification_config import VerificationConfig
from thetanerve.categories.fincat import FinCategory, FunctorData, ordinal, product, validate_functor
from thetanerve.categories.two_category import suspension
from thetanerve.constants.enums import VerificationSuite
from thetanerve.models.duskin.duskin_config import DuskinNerveConfig
from thetanerve.models.duskin.model import DuskinNerve
from thetanerve.models.duskin.phi import phi_extended, phi_inverse_extended
from thetanerve.models.freecell.model import check_two_skeleton, check_uniqueness, verify_face_relations
from thetanerve.models.matset.coskeleton import coskeletal_fill
from thetanerve.models.matset.matset_config import MatSetConfig
from thetanerve.models.matset.model import MatrixSimplicialSet, face, is_nondegenerate
from thetanerve.paths.bijection import shuffle_to_triangulation, triangulation_to_shuffle
from thetanerve.paths.shuffles import enumerate_shuffles
from thetanerve.paths.triangulations import catalan, enumerate_triangulations, filter_constrained
from thetanerve.utils.validation import ValidationReport

LOGGER = logging.getLogger(__name__)


def default_categories() -> dict[str, FinCategory]:
    """The targets scanned when no category is named: [0], [1], [2] and the square [1]x[1]."""
    return {
        "ordinal:0": ordinal(0),
        "ordinal:1": ordinal(1),
        "ordinal:2": ordinal(2),
        "square": product(ordinal(1), ordinal(1)),
    }


def _mutate(functor: FunctorData, rng: np.random.Generator) -> Optional[FunctorData]:
    # send one morphism to a morphism with other endpoints, which no functor can do
    target = functor.target
    i = int(rng.integers(len(functor.mor_map)))
    f = functor.mor_map[i]
    endpoints = (target.source(f), target.target(f))
    candidates = [g for g in range(target.n_morphisms) if (target.source(g), target.target(g)) != endpoints]
    if not candidates:
        return None
    mor_map = list(functor.mor_map)
    mor_map[i] = candidates[int(rng.integers(len(candidates)))]
    return FunctorData(functor.source, target, functor.obj_map, mor_map)


def evaluate_simplicial_identities(categories: Mapping[str, FinCategory],
                                   config: VerificationConfig) -> ValidationReport:
    """
    Checks the five simplicial identities on Mat(D) up to ``max_mat_dim`` for every category.

    Next to the identities, every simplex is compared with its retraction
    witness (a simplex is degenerate iff ``s_i d_i x = x`` for some ``i``) and
    one random mutation of every proper simplex is required to fail
    ``validate_functor``.

    Parameters
    ----------
    categories : Mapping[str, FinCategory]
        The target categories, by display name.
    config : VerificationConfig
        The suite budgets.

    Returns
    -------
    A ValidationReport with the number of simplices checked per category.
    """
    max_dim, show_progress = config.config["max_mat_dim"], config.config["show_progress"]
    rng = np.random.default_rng(seed=config.config["seed"])
    checked = {}
    for name, category in categories.items():
        model = MatrixSimplicialSet(category, MatSetConfig(max_dim=max_dim + 1, show_progress=show_progress))
        report = model.check_simplicial_identities(max_dim)
        if not report:
            return ValidationReport.failure(f"{name}: {report.diagnostics[0]}")
        for n in range(max_dim + 1):
            for simplex in model.simplices(n):
                if (model.retraction_witness(simplex) is None) != is_nondegenerate(simplex):
                    return ValidationReport.failure(f"{name}: retraction witness and degeneracy test disagree on {simplex}")
                if not simplex.is_proper:
                    continue
                if not validate_functor(simplex.body):
                    return ValidationReport.failure(f"{name}: the enumerated simplex {simplex} is not a functor")
                mutant = _mutate(simplex.body, rng)
                if mutant is not None and validate_functor(mutant):
                    return ValidationReport.failure(f"{name}: a mutation of {simplex} passed as a functor")
        checked[name] = report.payload["checked"]
    return ValidationReport.ok(checked=checked)


def evaluate_coskeletal(categories: Mapping[str, FinCategory], config: VerificationConfig) -> ValidationReport:
    """
    Every compatible sphere of 3-simplices has exactly one filler and `coskeletal_fill` finds it.

    The spheres are enumerated independently of the 4-simplices; their number
    must equal the number of 4-simplices and filling the boundary of every
    4-simplex must give it back.

    Returns
    -------
    A ValidationReport with the number of spheres per category.
    """
    spheres_per_category = {}
    for name, category in categories.items():
        model = MatrixSimplicialSet(category, MatSetConfig(show_progress=config.config["show_progress"]))
        top = set(model.simplices(4))
        fillers = set()
        spheres = 0
        for sphere in tqdm(model.compatible_spheres(4), desc=f"Spheres of {name}", disable=not model.show_progress):
            spheres += 1
            try:
                fillers.add(coskeletal_fill(list(sphere)))
            except ValueError as error:
                return ValidationReport.failure(f"{name}: a compatible sphere has no filler ({error})")
        if spheres != len(top) or fillers != top:
            return ValidationReport.failure(f"{name}: {spheres} spheres and {len(fillers)} fillers for {len(top)} 4-simplices")
        for simplex in top:
            if coskeletal_fill([face(simplex, i) for i in range(5)]) != simplex:
                return ValidationReport.failure(f"{name}: the boundary of {simplex} has a second filler")
        spheres_per_category[name] = spheres
    return ValidationReport.ok(spheres=spheres_per_category)


def evaluate_phi_oracle(categories: Mapping[str, FinCategory], config: VerificationConfig) -> ValidationReport:
    """
    Compares Mat(D) with the brute-force nerve of the suspension of D up to ``max_oracle_dim``.

    Counts must agree, phi must hit every nerve simplex, invert through
    `phi_inverse_extended` and commute with faces.

    Returns
    -------
    A ValidationReport with the per-dimension counts per category.
    """
    max_dim = config.config["max_oracle_dim"]
    counts = {}
    for name, category in categories.items():
        matrices = MatrixSimplicialSet(category)
        nerve = DuskinNerve(suspension(category), DuskinNerveConfig(max_dim=max_dim, show_progress=config.config["show_progress"]))
        counts[name] = []
        for n in range(max_dim + 1):
            mats, oracle = matrices.simplices(n), nerve.simplices(n)
            if len(mats) != len(oracle):
                return ValidationReport.failure(f"{name}: {len(mats)} matrices but {len(oracle)} nerve simplices in dimension {n}")
            images = {}
            for simplex in mats:
                image = phi_extended(category, simplex)
                if phi_inverse_extended(category, image) != simplex:
                    return ValidationReport.failure(f"{name}: phi is not inverted on {simplex}")
                if n >= 1 and any(image.face(i) != phi_extended(category, face(simplex, i)) for i in range(n + 1)):
                    return ValidationReport.failure(f"{name}: phi does not commute with the faces of {simplex}")
                images[image] = simplex
            if set(images) != set(oracle):
                return ValidationReport.failure(f"{name}: the image of phi differs from the nerve in dimension {n}")
            counts[name].append(len(mats))
    return ValidationReport.ok(counts=counts)


def evaluate_freecell_relations(config: VerificationConfig) -> ValidationReport:
    """
    Runs the face relations and the 2-skeleton formula for ``m = 1 .. max_m`` and
    checks that ``σ_n, σ'_n`` are the only non-degenerate simplices up to ``2 max_m + 1``.

    Returns
    -------
    A ValidationReport with the number of face relations checked.
    """
    max_m = config.config["max_m"]
    relations = 0
    for m in range(1, max_m + 1):
        report = verify_face_relations(m).merge(check_two_skeleton(m))
        if not report:
            return ValidationReport.failure(f"m={m}: {report.diagnostics[0]}")
        relations += report.payload["relations"]
    for n in range(2 * max_m + 2):
        report = check_uniqueness(n)
        if not report:
            return report
    return ValidationReport.ok(relations=relations, max_m=max_m)


def evaluate_bijection(config: VerificationConfig) -> ValidationReport:
    """
    Checks the triangulation and shuffle bijection exhaustively for ``n = 2 .. max_polygon``.

    For each ``k`` the constrained triangulations and the shuffles are both
    counted by ``binomial(n - 1, k)`` and the two maps are mutually inverse.

    Returns
    -------
    A ValidationReport whose ``counts`` holds the per-k counts for every n.
    """
    counts = {}
    for n in range(2, config.config["max_polygon"] + 1):
        triangulations = enumerate_triangulations(n)
        if len(triangulations) != catalan(n - 1):
            return ValidationReport.failure(f"n={n}: {len(triangulations)} triangulations instead of {catalan(n - 1)}")
        counts[n] = []
        for k in range(n):
            constrained = filter_constrained(triangulations, k)
            shuffles = enumerate_shuffles(k, n - 1 - k)
            if not len(constrained) == len(shuffles) == comb(n - 1, k):
                return ValidationReport.failure(f"n={n}, k={k}: {len(constrained)} triangulations, {len(shuffles)} shuffles")
            for triangulation in constrained:
                if shuffle_to_triangulation(triangulation_to_shuffle(triangulation, n, k), n, k) != triangulation:
                    return ValidationReport.failure(f"n={n}, k={k}: the round trip moves {triangulation}")
            for shuffle in shuffles:
                if triangulation_to_shuffle(shuffle_to_triangulation(shuffle, n, k), n, k) != shuffle:
                    return ValidationReport.failure(f"n={n}, k={k}: the round trip moves {shuffle}")
            counts[n].append(len(shuffles))
    return ValidationReport.ok(counts=counts)


def run_suite(suite: VerificationSuite,
              config: VerificationConfig,
              categories: Optional[Mapping[str, FinCategory]] = None) -> ValidationReport:
    """
    Runs one verification suite.

    Parameters
    ----------
    suite : VerificationSuite
        The suite to run.
    config : VerificationConfig
        The suite budgets.
    categories : Mapping[str, FinCategory], optional
        The categories for the suites over Mat(D). Defaults to [0], [1], [2]
        and the square for the identities, [1] and [2] for the coskeletal
        suite and [0], [1], [2] for the oracle.

    Raises
    ------
    ValueError
        If the suite is unknown.
    """
    suite = VerificationSuite(suite)
    defaults = default_categories()
    runners: dict[VerificationSuite, Callable[[], ValidationReport]] = {
        VerificationSuite.SIMPLICIAL_IDENTITIES: lambda: evaluate_simplicial_identities(categories or defaults, config),
        VerificationSuite.COSKELETAL: lambda: evaluate_coskeletal(
            categories or {name: defaults[name] for name in ("ordinal:1", "ordinal:2")}, config),
        VerificationSuite.PHI_ORACLE: lambda: evaluate_phi_oracle(
            categories or {name: defaults[name] for name in ("ordinal:0", "ordinal:1", "ordinal:2")}, config),
        VerificationSuite.FREECELL_RELATIONS: lambda: evaluate_freecell_relations(config),
        VerificationSuite.BIJECTION: lambda: evaluate_bijection(config),
    }
    LOGGER.info(f"Running the {suite.value} suite.")
    report = runners[suite]()
    if report:
        LOGGER.info(f"Suite {suite.value} passed.")
    else:
        LOGGER.info(f"Suite {suite.value} found a violation: {report.diagnostics[0]}")
    return report
