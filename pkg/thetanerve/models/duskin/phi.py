import logging
from typing import Sequence

from thetanerve.categories.fincat import FinCategory
from thetanerve.categories.two_category import SuspensionTwoCategory, suspension
from thetanerve.constants.budgets import MAX_PHI_DIM
from thetanerve.models.duskin.simplex import DuskinSimplex, vertex_pairs, vertex_triples
from thetanerve.models.matset.coskeleton import coskeletal_fill
from thetanerve.models.matset.model import MatSimplex, empty_column, empty_row, face, matrix_from_grid

LOGGER = logging.getLogger(__name__)


def matrices_to_nerve(two_category: SuspensionTwoCategory, parts: Sequence[MatSimplex]) -> DuskinSimplex:
    """The nerve simplex of a suspension described by one matrix per factor.

    Vertex ``v`` goes to ``x_p`` with ``p`` the number of parts whose type is
    below ``v``. Factor ``i`` contributes to the cells spanning ``u <= k_i < w``:
    its entry ``(u, w - k_i - 1)`` to the edge ``(u, w)`` and, on a triangle
    ``(u, v, w)``, the vertical arrow when ``v <= k_i`` and the horizontal one
    otherwise.

    Raises
    ------
    ValueError
        If the parts disagree in dimension, live over the wrong factors or
        have decreasing types.
    """
    if len(parts) != two_category.r:
        message = f"Expected {two_category.r} matrices, got {len(parts)}."
        LOGGER.error(message)
        raise ValueError(message)
    n = parts[0].dim
    types = [part.k for part in parts]
    if any(part.dim != n for part in parts) or any(a > b for a, b in zip(types, types[1:])):
        message = f"Parts must share one dimension and have nondecreasing types, got types {types}."
        LOGGER.error(message)
        raise ValueError(message)
    if any(part.category != factor for part, factor in zip(parts, two_category.factors)):
        message = "Each matrix must live over the matching factor of the suspension."
        LOGGER.error(message)
        raise ValueError(message)

    objects = [sum(1 for k in types if k < v) for v in range(n + 1)]

    def edge(u: int, w: int) -> int:
        p, q = objects[u], objects[w]
        if p == q:
            return two_category.identity_one_cell(p)
        return two_category.encode_one_cell(p, q, [parts[i].entry(u, w - types[i] - 1) for i in range(p, q)])

    def triangle(u: int, v: int, w: int) -> int:
        p, q = objects[u], objects[w]
        if p == q:
            return two_category.identity_two_cell(two_category.identity_one_cell(p))
        components = []
        for i in range(p, q):
            part, k = parts[i], types[i]
            if v <= k:
                components.append(part.arrow(u, w - k - 1, v, w - k - 1))
            else:
                components.append(part.arrow(u, w - k - 1, u, v - k - 1))
        return two_category.encode_two_cell(p, q, components)

    return DuskinSimplex(n,
                         objects,
                         [edge(u, w) for u, w in vertex_pairs(n)],
                         [triangle(u, v, w) for u, v, w in vertex_triples(n)])


def collapse_object(p: int, factor: int) -> int:
    """Collapse onto the suspension of one factor: ``x_p`` goes to x (0) when ``p <= factor`` and to y (1) otherwise."""
    return 0 if p <= factor else 1


def nerve_to_matrix(two_category: SuspensionTwoCategory, simplex: DuskinSimplex, factor: int) -> MatSimplex:
    """The matrix over factor ``factor`` carried by a nerve simplex of a suspension.

    Its type is the last vertex sitting at or before ``x_factor``; entries and
    unit arrows are the ``factor`` components of the corresponding 1-cells and
    2-cells.

    Raises
    ------
    ValueError
        If the vertices are not monotone or the cells do not form a functor.
    """
    objects, n = simplex.objects, simplex.dim
    if any(a > b for a, b in zip(objects, objects[1:])):
        message = f"The vertices {objects} of a suspension simplex must be nondecreasing."
        LOGGER.error(message)
        raise ValueError(message)
    category = two_category.factors[factor]
    k = sum(1 for p in objects if collapse_object(p, factor) == 0) - 1
    if k == -1:
        return empty_row(category, n)
    if k == n:
        return empty_column(category, n)
    l = n - 1 - k

    def one_component(u, w):
        p, _, components = two_category.decode_one_cell(simplex.edge(u, w))
        return components[factor - p]

    def two_component(u, v, w):
        p, _, components = two_category.decode_two_cell(simplex.triangle(u, v, w))
        return components[factor - p]

    entries = [[one_component(a, k + 1 + b) for b in range(l + 1)] for a in range(k + 1)]
    vertical = [[two_component(a, a + 1, k + 1 + b) for b in range(l + 1)] for a in range(k)]
    horizontal = [[None] + [two_component(a, k + b, k + 1 + b) for b in range(1, l + 1)] for a in range(k + 1)]
    return matrix_from_grid(category, k, l, entries, vertical, horizontal)


def _check_phi_dim(dim: int) -> None:
    if dim > MAX_PHI_DIM:
        message = f"phi is defined by cases up to dimension {MAX_PHI_DIM}, got {dim}; use phi_extended."
        LOGGER.error(message)
        raise ValueError(message)


def phi(category: FinCategory, simplex: MatSimplex) -> DuskinSimplex:
    """The nerve simplex of the suspension of ``category`` matching a matrix of dimension at most 3.

    Example
    -------
    ```python
    from thetanerve.categories import ordinal
    from thetanerve.models.matset import matrix_from_entries
    from thetanerve.models.duskin import phi

    t = phi(ordinal(1), matrix_from_entries(ordinal(1), [[1]]))
    print(t.objects, t.one_cells)
    ```

    Raises
    ------
    ValueError
        If the dimension exceeds 3.
    """
    _check_phi_dim(simplex.dim)
    return matrices_to_nerve(suspension(category), [simplex])


def phi_inverse(category: FinCategory, simplex: DuskinSimplex) -> MatSimplex:
    """Inverse of `phi` in dimensions up to 3."""
    _check_phi_dim(simplex.dim)
    return nerve_to_matrix(suspension(category), simplex, 0)


def phi_extended(category: FinCategory, simplex: MatSimplex) -> DuskinSimplex:
    """`phi` in every dimension: from dimension 4 on the image is assembled from the images of the faces."""
    if simplex.dim <= MAX_PHI_DIM:
        return phi(category, simplex)
    return DuskinSimplex.from_faces([phi_extended(category, face(simplex, i)) for i in range(simplex.dim + 1)])


def phi_inverse_extended(category: FinCategory, simplex: DuskinSimplex) -> MatSimplex:
    """`phi_inverse` in every dimension: from dimension 4 on the matrix is the coskeletal filler of the preimages of the faces."""
    if simplex.dim <= MAX_PHI_DIM:
        return phi_inverse(category, simplex)
    return coskeletal_fill([phi_inverse_extended(category, simplex.face(i)) for i in range(simplex.dim + 1)])
