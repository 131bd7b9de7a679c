import logging
from typing import Callable, Sequence

from thetanerve.models.matset.model import (MatSimplex, empty_column, empty_row, face,
                                            matrix_from_grid)

LOGGER = logging.getLogger(__name__)


def _fail(message: str):
    LOGGER.error(message)
    raise ValueError(message)


def check_sphere(boundary: Sequence[MatSimplex]) -> None:
    """Checks ``d_i t_j = d_{j-1} t_i`` for all ``i < j``.

    Raises
    ------
    ValueError
        On the first incompatible pair, or if dimensions or categories differ.
    """
    n = len(boundary) - 1
    if any(t.dim != n - 1 for t in boundary):
        _fail(f"A sphere in dimension {n} needs {n + 1} simplices of dimension {n - 1}.")
    if any(t.category != boundary[0].category for t in boundary):
        _fail("The faces of a sphere must live over the same category.")
    for j in range(n + 1):
        for i in range(j):
            if face(boundary[j], i) != face(boundary[i], j - 1):
                _fail(f"Incompatible boundary: d_{i} of face {j} differs from d_{j - 1} of face {i}.")


def infer_type(boundary: Sequence[MatSimplex]) -> int:
    """The ``k`` for which the face types read ``k - 1`` up to index ``k`` and ``k`` after it."""
    n = len(boundary) - 1
    types = [t.k for t in boundary]
    for k in range(-1, n + 1):
        if all(t == (k - 1 if i <= k else k) for i, t in enumerate(types)):
            return k
    _fail(f"The face types {types} do not extend any χ_k.")


def _witnessed(label: str, excluded: set[int], n: int, read: Callable[[int], int]) -> int:
    # read the value off every face avoiding the excluded vertices; all must agree
    values = {i: read(i) for i in range(n + 1) if i not in excluded}
    if not values:
        _fail(f"No face avoids the vertices of {label}.")
    first = values[min(values)]
    for i, value in values.items():
        if value != first:
            _fail(f"Faces {min(values)} and {i} disagree on {label}.")
    return first


def coskeletal_fill(boundary: Sequence[MatSimplex]) -> MatSimplex:
    """The unique n-simplex with the given faces, for n >= 4.

    Each entry and unit arrow of the filler is read from every face that
    avoids its vertices, and the readings are required to agree. The result is
    validated as a functor and its faces are compared with the input.

    Parameters
    ----------
    boundary : Sequence[MatSimplex]
        The faces ``t_0 .. t_n``, each of dimension ``n - 1``.

    Returns
    -------
    MatSimplex
        The filler.

    Raises
    ------
    ValueError
        If ``n < 4``, the boundary is incompatible or no type fits.
    """
    n = len(boundary) - 1
    if n < 4:
        _fail(f"Coskeletal filling needs n >= 4, got {n}.")
    check_sphere(boundary)
    category = boundary[0].category
    k = infer_type(boundary)
    if k == -1:
        return empty_row(category, n)
    if k == n:
        return empty_column(category, n)
    l = n - 1 - k

    def position(i: int, a: int, b: int) -> tuple[int, int]:
        # where cell (a, b) of the filler sits inside face i
        if i <= k:
            return a - (i < a), b
        return a, b - (i - k - 1 < b)

    def read_entry(a, b):
        return lambda i: boundary[i].entry(*position(i, a, b))

    def read_vertical(a, b):
        return lambda i: boundary[i].vertical_arrow(*position(i, a, b))

    def read_horizontal(a, b):
        def read(i):
            if i <= k:
                return boundary[i].horizontal_arrow(a - (i < a), b)
            return boundary[i].horizontal_arrow(a, b - (i - k - 1 < b - 1))
        return read

    entries = [[_witnessed(f"entry ({a}, {b})", {a, k + 1 + b}, n, read_entry(a, b))
                for b in range(l + 1)] for a in range(k + 1)]
    vertical = [[_witnessed(f"vertical arrow at ({a}, {b})", {a, a + 1, k + 1 + b}, n, read_vertical(a, b))
                 for b in range(l + 1)] for a in range(k)]
    horizontal = [[None] + [_witnessed(f"horizontal arrow at ({a}, {b})", {a, k + b, k + 1 + b}, n, read_horizontal(a, b))
                            for b in range(1, l + 1)] for a in range(k + 1)]

    filler = matrix_from_grid(category, k, l, entries, vertical, horizontal)
    for i, expected in enumerate(boundary):
        if face(filler, i) != expected:
            _fail(f"The filler's face {i} does not reproduce the boundary.")
    return filler
