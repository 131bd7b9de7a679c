import json
import logging
from pathlib import Path
from typing import Any, Optional, Union

import numpy as np

from thetanerve.categories.fincat import FinCategory, FunctorData, ordinal, product, validate_functor
from thetanerve.categories.two_category import TwoCategory
from thetanerve.constants.budgets import BUILTIN_SQUARE, ORDINAL_PREFIX, THETA_PREFIX
from thetanerve.models.duskin.simplex import DuskinSimplex
from thetanerve.models.matset.model import MatSimplex, empty_column, empty_row, matrix_from_grid
from thetanerve.models.theta2.model import TupleSimplex, parse_theta2_object, theta2_object
from thetanerve.paths.monotone import LabeledPath
from thetanerve.paths.shuffles import Shuffle
from thetanerve.paths.triangulations import Triangulation

LOGGER = logging.getLogger(__name__)

SCHEMA_DIR = Path(__file__).resolve().parent.parent / "schemas"


def _fail(message: str):
    LOGGER.error(message)
    raise ValueError(message)


def load_schema(name: str) -> dict:
    """Loads one of the shipped JSON schema documents, e.g. ``"matsimplex"``."""
    path = SCHEMA_DIR / f"{name}.schema.json"
    if not path.is_file():
        _fail(f"No schema named '{name}' in {SCHEMA_DIR}.")
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def parse_category_spec(text: str) -> list[FinCategory]:
    """Parses ``ordinal:m``, ``square`` or ``theta:[r|n1,...,nr]`` into the list of target categories.

    Raises
    ------
    ValueError
        If the text matches none of the forms.
    """
    text = text.strip()
    if text == BUILTIN_SQUARE:
        return [product(ordinal(1), ordinal(1))]
    if text.startswith(ORDINAL_PREFIX):
        value = text[len(ORDINAL_PREFIX):]
        if not value.isdigit():
            _fail(f"Cannot parse the ordinal in '{text}', expected ordinal:m with m >= 0.")
        return [ordinal(int(value))]
    if text.startswith(THETA_PREFIX):
        r, widths = parse_theta2_object(text[len(THETA_PREFIX):])
        return theta2_object(r, widths)
    _fail(f"Unknown category '{text}'; use ordinal:m, square or theta:[r|n1,...,nr].")


def _triples(table: np.ndarray) -> list[list[int]]:
    """The defined entries of a partial composition table as ``[g, f, g∘f]``, in lexicographic order."""
    return [[int(g), int(f), int(table[g, f])] for g, f in np.argwhere(table >= 0)]


def _indexed(items: list, what: str) -> list:
    items = sorted(items, key=lambda item: int(item["id"]))
    if [int(item["id"]) for item in items] != list(range(len(items))):
        _fail(f"The {what} ids must run over 0..{len(items) - 1} without gaps.")
    return items


def _object_count(data: dict) -> int:
    objects = [int(a) for a in data["objects"]]
    if objects != list(range(len(objects))):
        _fail(f"Objects must be listed as 0..{len(objects) - 1}, got {objects}.")
    return len(objects)


def _partial_table(size: int, triples: list, what: str) -> np.ndarray:
    table = np.full((size, size), -1, dtype=np.int64)
    for triple in triples:
        g, f, h = (int(x) for x in triple)
        if not (0 <= g < size and 0 <= f < size and 0 <= h < size):
            _fail(f"The {what} triple {list(triple)} leaves the range 0..{size - 1}.")
        table[g, f] = h
    return table


def fincat_to_json(category: FinCategory) -> dict[str, Any]:
    """Objects as integers, morphisms as ``{id, src, tgt}`` and composition as ``[g, f, g∘f]`` triples."""
    return {
        "objects": list(range(category.n_objects)),
        "morphisms": [{"id": f, "src": category.source(f), "tgt": category.target(f)}
                      for f in range(category.n_morphisms)],
        "identities": category.identities.tolist(),
        "composition": _triples(category.compose_table),
        "object_labels": list(category.object_labels),
        "morphism_labels": list(category.morphism_labels),
    }


def fincat_from_json(data: Union[dict, str]) -> FinCategory:
    """A category from its JSON encoding, or from a built-in name such as ``"ordinal:2"``."""
    if isinstance(data, str):
        categories = parse_category_spec(data)
        if len(categories) != 1:
            _fail(f"'{data}' names {len(categories)} categories, expected one.")
        return categories[0]
    try:
        n_objects = _object_count(data)
        morphisms = _indexed(data["morphisms"], "morphism")
        return FinCategory(n_objects,
                           [int(f["src"]) for f in morphisms],
                           [int(f["tgt"]) for f in morphisms],
                           data["identities"],
                           _partial_table(len(morphisms), data["composition"], "composition"),
                           object_labels=data.get("object_labels"),
                           morphism_labels=data.get("morphism_labels"))
    except (KeyError, TypeError) as error:
        _fail(f"The category is missing or misuses the field {error}.")


def functor_to_json(functor: FunctorData) -> dict[str, Any]:
    return {
        "source": fincat_to_json(functor.source),
        "target": fincat_to_json(functor.target),
        "obj_map": list(functor.obj_map),
        "mor_map": list(functor.mor_map),
    }


def functor_from_json(data: dict) -> FunctorData:
    """A functor from its encoding; ``source`` and ``target`` may also be built-in names.

    Raises
    ------
    ValueError
        If a field is missing or the maps do not preserve endpoints, identities and composites.
    """
    try:
        functor = FunctorData(fincat_from_json(data["source"]),
                              fincat_from_json(data["target"]),
                              data["obj_map"],
                              data["mor_map"])
    except (KeyError, TypeError) as error:
        _fail(f"The functor is missing or misuses the field {error}.")
    report = validate_functor(functor)
    if not report:
        _fail(f"The maps do not form a functor: {report.diagnostics[0]}")
    return functor


def two_category_to_json(two_category: TwoCategory) -> dict[str, Any]:
    """The fincat encoding one level up.

    1-cells are ``{id, src, tgt}`` between objects and 2-cells ``{id, src, tgt}``
    between 1-cells; ``composition``, ``vertical`` and ``horizontal`` hold the
    ``[g, f, g∘f]`` triples of the three partial compositions.
    """
    c = two_category
    return {
        "objects": list(range(c.n_objects)),
        "one_cells": [{"id": cell, "src": p, "tgt": q} for cell, (p, q) in enumerate(c.one_cell_hom)],
        "two_cells": [{"id": alpha, "src": c.two_source(alpha), "tgt": c.two_target(alpha)}
                      for alpha in range(c.n_two_cells)],
        "identities": c.one_identities.tolist(),
        "two_identities": c.two_identities.tolist(),
        "composition": _triples(c.one_compose_table),
        "vertical": _triples(c.vertical_table),
        "horizontal": _triples(c.horizontal_table),
        "object_labels": list(c.object_labels),
    }


def two_category_from_json(data: dict) -> TwoCategory:
    """Rebuilds the hom-categories and composition rules of a 2-category from its encoding.

    Raises
    ------
    ValueError
        If a field or a composite is missing, or the data break a strict 2-category law.
    """
    try:
        n_objects = _object_count(data)
        one_cells = _indexed(data["one_cells"], "1-cell")
        two_cells = _indexed(data["two_cells"], "2-cell")

        one_pair = [(int(cell["src"]), int(cell["tgt"])) for cell in one_cells]
        ones_by_pair: dict[tuple[int, int], list[int]] = {}
        one_local = []
        for cell, pair in enumerate(one_pair):
            one_local.append(len(ones_by_pair.setdefault(pair, [])))
            ones_by_pair[pair].append(cell)

        two_ends = [(int(alpha["src"]), int(alpha["tgt"])) for alpha in two_cells]
        twos_by_pair: dict[tuple[int, int], list[int]] = {}
        two_local = []
        for alpha, (f, g) in enumerate(two_ends):
            if one_pair[f] != one_pair[g]:
                _fail(f"2-cell {alpha} runs between 1-cells of different hom-categories.")
            two_local.append(len(twos_by_pair.setdefault(one_pair[f], [])))
            twos_by_pair[one_pair[f]].append(alpha)

        vertical = _partial_table(len(two_cells), data["vertical"], "vertical")
        two_identities = [int(alpha) for alpha in data["two_identities"]]
        homs = {}
        for pair, cells in ones_by_pair.items():
            twos = twos_by_pair.get(pair, [])
            compose = np.full((len(twos), len(twos)), -1, dtype=np.int64)
            for beta in twos:
                for alpha in twos:
                    gamma = vertical[beta, alpha]
                    if gamma >= 0:
                        compose[two_local[beta], two_local[alpha]] = two_local[gamma]
            homs[pair] = FinCategory(len(cells),
                                     [one_local[two_ends[alpha][0]] for alpha in twos],
                                     [one_local[two_ends[alpha][1]] for alpha in twos],
                                     [two_local[two_identities[cell]] for cell in cells],
                                     compose)

        one_composition = {(g, f): h for g, f, h in _triples(_partial_table(len(one_cells), data["composition"], "composition"))}
        horizontal = {(g, f): h for g, f, h in _triples(_partial_table(len(two_cells), data["horizontal"], "horizontal"))}

        def compose_one_cells(p, q, r, g, f):
            return one_local[one_composition[(ones_by_pair[(q, r)][g], ones_by_pair[(p, q)][f])]]

        def compose_two_cells(p, q, r, beta, alpha):
            return two_local[horizontal[(twos_by_pair[(q, r)][beta], twos_by_pair[(p, q)][alpha])]]

        return TwoCategory(n_objects,
                           homs,
                           compose_one_cells,
                           compose_two_cells,
                           units=[one_local[int(cell)] for cell in data["identities"]],
                           object_labels=data.get("object_labels"))
    except (KeyError, TypeError, IndexError) as error:
        _fail(f"The 2-category is missing a field or a composite: {error!r}.")


def matsimplex_to_json(simplex: MatSimplex) -> dict[str, Any]:
    """``horz_arrows[a][b - 1]`` is the arrow ``(a, b) -> (a, b - 1)``; ``vert_arrows[a][b]`` is ``(a, b) -> (a + 1, b)``.

    The empty row and column also carry their dimension ``n``.
    """
    k, l = simplex.k, simplex.l
    if not simplex.is_proper:
        return {"k": k, "l": l, "n": simplex.dim, "entries": [], "vert_arrows": [], "horz_arrows": []}
    return {
        "k": k,
        "l": l,
        "entries": simplex.entries(),
        "vert_arrows": [[simplex.vertical_arrow(a, b) for b in range(l + 1)] for a in range(k)],
        "horz_arrows": [[simplex.horizontal_arrow(a, b) for b in range(1, l + 1)] for a in range(k + 1)],
    }


def _empty_size(data: dict, other: str) -> int:
    # {k: -1, n} has l = n and {l: -1, n} has k = n
    if "n" not in data:
        return int(data[other])
    n = int(data["n"])
    if other in data and int(data[other]) != n:
        _fail(f"An empty matrix with n = {n} cannot have {other} = {data[other]}.")
    return n


def matsimplex_from_json(category: FinCategory, data: dict) -> MatSimplex:
    try:
        if "k" in data and int(data["k"]) == -1:
            return empty_row(category, _empty_size(data, "l"))
        if "l" in data and int(data["l"]) == -1:
            return empty_column(category, _empty_size(data, "k"))
        k, l = int(data["k"]), int(data["l"])
        return matrix_from_grid(category,
                                k,
                                l,
                                data["entries"],
                                data["vert_arrows"],
                                [[None] + list(row) for row in data["horz_arrows"]])
    except (KeyError, IndexError, TypeError) as error:
        _fail(f"Malformed matrix simplex: {error!r}.")


def duskin_to_json(simplex: DuskinSimplex) -> dict[str, Any]:
    return {
        "dim": simplex.dim,
        "objects": list(simplex.objects),
        "one_cells": list(simplex.one_cells),
        "two_cells": list(simplex.two_cells),
    }


def duskin_from_json(data: dict, two_category: Optional[TwoCategory] = None) -> DuskinSimplex:
    """A nerve simplex from its 2-skeleton; checked against ``two_category`` when one is given."""
    try:
        simplex = DuskinSimplex(int(data["dim"]), data["objects"], data["one_cells"], data["two_cells"])
    except (KeyError, TypeError) as error:
        _fail(f"The nerve simplex is missing or misuses the field {error}.")
    if two_category is not None:
        report = simplex.validate_in(two_category)
        if not report:
            _fail(f"Not a simplex of the nerve: {report.diagnostics[0]}")
    return simplex


def tuple_to_json(simplex: TupleSimplex) -> dict[str, Any]:
    return {"types": list(simplex.types), "parts": [matsimplex_to_json(part) for part in simplex.parts]}


def shuffle_to_json(shuffle: Shuffle) -> dict[str, Any]:
    return {"k": shuffle.k, "l": shuffle.l, "steps": shuffle.word}


def triangulation_to_json(triangulation: Triangulation) -> dict[str, Any]:
    return {"n": triangulation.n, "triangles": [list(t) for t in triangulation.sorted_triangles()]}


def labeled_path_to_json(shuffle: Shuffle, path: LabeledPath) -> dict[str, Any]:
    return {
        "steps": shuffle.word,
        "objects": list(path.objects),
        "arrows": list(path.arrows),
        "labels": path.object_labels(),
    }


def read_paths_file(path: Union[str, Path]) -> tuple[FinCategory, int, int, list[tuple[Shuffle, LabeledPath]]]:
    """Reads a reconstruction request.

    The file holds ``{"category": .., "n": .., "k": .., "paths": [{"steps": "HVH",
    "objects": [..], "arrows": [..]}, ..]}`` where ``category`` is a built-in
    name or a table object.

    Raises
    ------
    ValueError
        If the file is not valid JSON or a field is missing or malformed.
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as error:
        _fail(f"Cannot read the paths file '{path}': {error}")
    try:
        category = fincat_from_json(data["category"])
        n, k = int(data["n"]), int(data["k"])
        paths = []
        for entry in data["paths"]:
            shuffle = Shuffle.from_steps(k, n - 1 - k, entry["steps"])
            paths.append((shuffle, LabeledPath(category, entry["objects"], entry["arrows"])))
    except (KeyError, TypeError) as error:
        _fail(f"The paths file '{path}' is missing or misuses the field {error}.")
    return category, n, k, paths
