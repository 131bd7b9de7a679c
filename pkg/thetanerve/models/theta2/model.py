import logging
import re
from dataclasses import dataclass
from itertools import combinations_with_replacement, product as cartesian
from typing import Iterator, Sequence

from tqdm import tqdm

from thetanerve.categories.fincat import FinCategory, iter_functors, matrix_domain, ordinal
from thetanerve.categories.two_category import multi_suspension
from thetanerve.constants.budgets import MAX_PHI_DIM
from thetanerve.models.base_models import BaseSimplicialSet
from thetanerve.models.duskin.phi import collapse_object, matrices_to_nerve, nerve_to_matrix
from thetanerve.models.duskin.simplex import DuskinSimplex
from thetanerve.models.matset.model import (MatSimplex, degeneracy, empty_column, empty_row, face,
                                            iter_simplices)
from thetanerve.models.theta2.theta2_config import Theta2Config

LOGGER = logging.getLogger(__name__)

_THETA_PATTERN = re.compile(r"^\[\s*(\d+)\s*\|\s*(\d+(?:\s*,\s*\d+)*)\s*\]$")


@dataclass(frozen=True)
class TupleSimplex:
    """An n-simplex of the nerve of a multi-point suspension as one matrix per factor.

    All parts have the same dimension and their types are nondecreasing.
    """
    parts: tuple[MatSimplex, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            message = "A tuple simplex needs at least one part."
            LOGGER.error(message)
            raise ValueError(message)
        if any(part.dim != self.parts[0].dim for part in self.parts):
            message = "All parts of a tuple simplex must share one dimension."
            LOGGER.error(message)
            raise ValueError(message)
        if not type_vector_in_image(self.types):
            message = f"Types {self.types} are not nondecreasing."
            LOGGER.error(message)
            raise ValueError(message)

    @property
    def dim(self) -> int:
        return self.parts[0].dim

    @property
    def n(self) -> int:
        return self.dim

    @property
    def types(self) -> tuple[int, ...]:
        return tuple(part.k for part in self.parts)


def type_vector_in_image(types: Sequence[int]) -> bool:
    """Whether a vector of types comes from one simplex of the multi-point suspension, i.e. is nondecreasing."""
    return all(a <= b for a, b in zip(types, types[1:]))


def theta2_object(r: int, widths: Sequence[int]) -> list[FinCategory]:
    """The factors ``[n_1], .., [n_r]`` of the Θ₂ object ``[r | n_1, .., n_r]``.

    Raises
    ------
    ValueError
        If ``widths`` does not have ``r`` entries or one is negative.
    """
    widths = list(widths)
    if r < 1 or len(widths) != r:
        message = f"[{r}|...] needs exactly {r} widths, got {len(widths)}."
        LOGGER.error(message)
        raise ValueError(message)
    if any(width < 0 for width in widths):
        message = f"Widths must be non-negative, got {widths}."
        LOGGER.error(message)
        raise ValueError(message)
    return [ordinal(width) for width in widths]


def parse_theta2_object(text: str) -> tuple[int, list[int]]:
    """Parses ``"[3|2,0,1]"`` into ``(3, [2, 0, 1])``."""
    match = _THETA_PATTERN.match(text.strip())
    if not match:
        message = f"Cannot parse the Θ₂ object '{text}', expected the form [r|n1,...,nr]."
        LOGGER.error(message)
        raise ValueError(message)
    return int(match.group(1)), [int(width) for width in match.group(2).split(",")]


def _type_block(category: FinCategory, n: int, k: int) -> list[MatSimplex]:
    if k == -1:
        return [empty_row(category, n)]
    if k == n:
        return [empty_column(category, n)]
    return [MatSimplex(k, n - 1 - k, body) for body in iter_functors(matrix_domain(k, n - 1 - k), category)]


def iter_tuple_simplices(categories: Sequence[FinCategory], n: int, show_progress: bool = False) -> Iterator[TupleSimplex]:
    """Streams the tuples by type vector ``k_1 <= .. <= k_r``, then by the matrix order of each part."""
    if not categories:
        message = "At least one category is required."
        LOGGER.error(message)
        raise ValueError(message)
    blocks: dict[tuple[int, int], list[MatSimplex]] = {}
    type_vectors = list(combinations_with_replacement(range(-1, n + 1), len(categories)))
    for types in tqdm(type_vectors, desc=f"Type vectors n={n}", disable=not show_progress):
        choices = []
        for index, (category, k) in enumerate(zip(categories, types)):
            if (index, k) not in blocks:
                blocks[(index, k)] = _type_block(category, n, k)
            choices.append(blocks[(index, k)])
        for parts in cartesian(*choices):
            yield TupleSimplex(parts)


def tuple_simplices(categories: Sequence[FinCategory], n: int) -> list[TupleSimplex]:
    return list(iter_tuple_simplices(categories, n))


def pullback_simplices(categories: Sequence[FinCategory], n: int) -> list[TupleSimplex]:
    """The same set as `tuple_simplices`, computed as the fiber product over type vectors.

    Every tuple of n-simplices of the separate Mat(D_i) is formed and kept iff its type vector is in the image of the type map.
    """
    return [TupleSimplex(parts)
            for parts in cartesian(*[list(iter_simplices(category, n)) for category in categories])
            if type_vector_in_image([part.k for part in parts])]


def tuple_face(simplex: TupleSimplex, i: int) -> TupleSimplex:
    return TupleSimplex([face(part, i) for part in simplex.parts])


def tuple_degeneracy(simplex: TupleSimplex, i: int) -> TupleSimplex:
    return TupleSimplex([degeneracy(part, i) for part in simplex.parts])


def is_tuple_nondegenerate(simplex: TupleSimplex) -> bool:
    return not any(tuple_degeneracy(tuple_face(simplex, i), i) == simplex for i in range(simplex.dim))


def count_nondegenerate(categories: Sequence[FinCategory], n: int) -> int:
    """The number of n-tuples that are not a degeneracy of an (n-1)-tuple."""
    return sum(1 for simplex in iter_tuple_simplices(categories, n) if is_tuple_nondegenerate(simplex))


def tuple_phi(categories: Sequence[FinCategory], simplex: TupleSimplex) -> DuskinSimplex:
    """The nerve simplex of the multi-point suspension described by a tuple, in dimension at most 3."""
    if simplex.dim > MAX_PHI_DIM:
        message = f"tuple_phi is defined up to dimension {MAX_PHI_DIM}, got {simplex.dim}; use tuple_phi_extended."
        LOGGER.error(message)
        raise ValueError(message)
    return matrices_to_nerve(multi_suspension(categories), simplex.parts)


def tuple_phi_extended(categories: Sequence[FinCategory], simplex: TupleSimplex) -> DuskinSimplex:
    if simplex.dim <= MAX_PHI_DIM:
        return tuple_phi(categories, simplex)
    return DuskinSimplex.from_faces([tuple_phi_extended(categories, tuple_face(simplex, i))
                                     for i in range(simplex.dim + 1)])


def tuple_phi_inverse(categories: Sequence[FinCategory], simplex: DuskinSimplex) -> TupleSimplex:
    """Reads one matrix per factor off a nerve simplex of the multi-point suspension."""
    two_category = multi_suspension(categories)
    return TupleSimplex([nerve_to_matrix(two_category, simplex, factor) for factor in range(len(categories))])


class TupleSimplicialSet(BaseSimplicialSet):
    """The simplicial set of nondecreasing-type tuples of matrices over ``D_1 .. D_r``.

    Example
    -------
    ```python
    from thetanerve.models.theta2 import TupleSimplicialSet, theta2_object

    model = TupleSimplicialSet(theta2_object(2, [1, 1]))
    print(len(model.simplices(2)))  # 42
    ```

    Parameters
    ----------
    categories : Sequence[FinCategory]
        The factors ``D_1 .. D_r``.
    configurer : Theta2Config, optional, default=default_configurer
        The model configuration.
    """
    default_configurer = Theta2Config()

    def __init__(self, categories: Sequence[FinCategory], configurer: Theta2Config = default_configurer) -> None:
        super().__init__()
        self.categories = tuple(categories)
        self.config = configurer.config
        self.show_progress = self.config["show_progress"]

    def iter_simplices(self, n: int) -> Iterator[TupleSimplex]:
        if n > self.config["max_dim"]:
            message = f"Dimension {n} exceeds the configured budget max_dim={self.config['max_dim']}."
            LOGGER.error(message)
            raise ValueError(message)
        return iter_tuple_simplices(self.categories, n, self.show_progress)

    def simplices(self, n: int) -> list[TupleSimplex]:
        result = list(self.iter_simplices(n))
        LOGGER.info(f"{len(self.categories)}-tuples of matrices: {len(result)} simplices in dimension {n}.")
        return result

    def nondegenerate_simplices(self, n: int) -> list[TupleSimplex]:
        return [simplex for simplex in self.iter_simplices(n) if is_tuple_nondegenerate(simplex)]

    def face(self, simplex: TupleSimplex, i: int) -> TupleSimplex:
        return tuple_face(simplex, i)

    def degeneracy(self, simplex: TupleSimplex, i: int) -> TupleSimplex:
        return tuple_degeneracy(simplex, i)
