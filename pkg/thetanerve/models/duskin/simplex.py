import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional, Sequence

from thetanerve.categories.two_category import TwoCategory
from thetanerve.models.matset.matset_utils import check_vertex_map, coface
from thetanerve.utils.validation import ValidationReport

LOGGER = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def vertex_pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n + 1), 2))


@lru_cache(maxsize=None)
def vertex_triples(n: int) -> tuple[tuple[int, int, int], ...]:
    return tuple(combinations(range(n + 1), 3))


@lru_cache(maxsize=None)
def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: i for i, pair in enumerate(vertex_pairs(n))}


@lru_cache(maxsize=None)
def _triple_index(n: int) -> dict[tuple[int, int, int], int]:
    return {triple: i for i, triple in enumerate(vertex_triples(n))}


@dataclass(frozen=True)
class DuskinSimplex:
    """An n-simplex of the Duskin nerve, stored as its 2-skeleton.

    ``objects[v]`` labels vertex ``v``, ``one_cells`` holds one 1-cell per
    vertex pair ``i < j`` and ``two_cells`` one 2-cell per triple ``i < j < k``,
    both in lexicographic order. The 2-cell on ``(i, j, k)`` goes
    ``e_ik => e_jk ∘ e_ij``. Since the nerve is 3-coskeletal this data
    determines the simplex in every dimension.
    """
    dim: int
    objects: tuple[int, ...]
    one_cells: tuple[int, ...]
    two_cells: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(int(x) for x in self.objects))
        object.__setattr__(self, "one_cells", tuple(int(x) for x in self.one_cells))
        object.__setattr__(self, "two_cells", tuple(int(x) for x in self.two_cells))
        n = self.dim
        if (n < 0 or len(self.objects) != n + 1 or len(self.one_cells) != len(vertex_pairs(n))
                or len(self.two_cells) != len(vertex_triples(n))):
            message = f"Cell counts do not match a {n}-simplex."
            LOGGER.error(message)
            raise ValueError(message)

    def edge(self, i: int, j: int) -> int:
        return self.one_cells[_pair_index(self.dim)[(i, j)]]

    def triangle(self, i: int, j: int, k: int) -> int:
        return self.two_cells[_triple_index(self.dim)[(i, j, k)]]

    @classmethod
    def from_faces(cls, faces: Sequence["DuskinSimplex"]) -> "DuskinSimplex":
        """Assembles an n-simplex, n >= 3, from its n+1 faces.

        Every cell is read off each face that contains it and the readings must agree.

        Raises
        ------
        ValueError
            If ``n < 3`` or two faces disagree on a shared cell.
        """
        n = len(faces) - 1
        if n < 3 or any(t.dim != n - 1 for t in faces):
            message = "from_faces needs n + 1 faces of dimension n - 1 with n >= 3."
            LOGGER.error(message)
            raise ValueError(message)

        def read(vertices, getter):
            values = {getter(faces[i], *[v - (i < v) for v in vertices])
                      for i in range(n + 1) if i not in vertices}
            if len(values) != 1:
                message = f"Faces disagree on the cell spanned by {vertices}."
                LOGGER.error(message)
                raise ValueError(message)
            return values.pop()

        objects = [read((v,), lambda t, a: t.objects[a]) for v in range(n + 1)]
        one_cells = [read(pair, DuskinSimplex.edge) for pair in vertex_pairs(n)]
        two_cells = [read(triple, DuskinSimplex.triangle) for triple in vertex_triples(n)]
        return cls(n, objects, one_cells, two_cells)

    def restrict(self, vertex_map: Sequence[int], two_category: Optional[TwoCategory] = None) -> "DuskinSimplex":
        """Pulls back along a monotone map ``[m] -> [n]``.

        Collapsed edges become identity 1-cells and collapsed triangles identity
        2-cells, which needs ``two_category`` when ``vertex_map`` is not injective.
        """
        vertex_map = check_vertex_map(vertex_map, self.dim)
        m = len(vertex_map) - 1
        injective = len(set(vertex_map)) == len(vertex_map)
        if not injective and two_category is None:
            message = "Restricting along a non-injective map needs the 2-category for identities."
            LOGGER.error(message)
            raise ValueError(message)

        objects = [self.objects[v] for v in vertex_map]

        def edge(u, v):
            a, b = vertex_map[u], vertex_map[v]
            return self.edge(a, b) if a != b else two_category.identity_one_cell(self.objects[a])

        one_cells = [edge(u, v) for u, v in vertex_pairs(m)]
        two_cells = []
        for u, v, w in vertex_triples(m):
            a, b, c = vertex_map[u], vertex_map[v], vertex_map[w]
            if a < b < c:
                two_cells.append(self.triangle(a, b, c))
            else:
                two_cells.append(two_category.identity_two_cell(edge(u, w)))
        return DuskinSimplex(m, objects, one_cells, two_cells)

    def face(self, i: int) -> "DuskinSimplex":
        if self.dim == 0 or not 0 <= i <= self.dim:
            message = f"Face d_{i} is not defined on a {self.dim}-simplex."
            LOGGER.error(message)
            raise ValueError(message)
        return self.restrict(coface(self.dim, i))

    def validate_in(self, two_category: TwoCategory) -> ValidationReport:
        """Checks endpoints, triangle boundaries and the relation on every tetrahedron."""
        c = two_category
        for (i, j) in vertex_pairs(self.dim):
            if c.one_cell_endpoints(self.edge(i, j)) != (self.objects[i], self.objects[j]):
                return ValidationReport.failure(f"edge ({i}, {j}) has the wrong endpoints")
        for (i, j, k) in vertex_triples(self.dim):
            theta = self.triangle(i, j, k)
            if c.two_source(theta) != self.edge(i, k) or \
                    c.two_target(theta) != c.compose_one_cells(self.edge(j, k), self.edge(i, j)):
                return ValidationReport.failure(f"triangle ({i}, {j}, {k}) has the wrong boundary")
        for quadruple in combinations(range(self.dim + 1), 4):
            if not _pasting_holds(c, self.restrict(quadruple)):
                return ValidationReport.failure(f"the tetrahedron {quadruple} violates the pasting relation")
        return ValidationReport.ok()


def _pasting_holds(two_category: TwoCategory, tetrahedron: DuskinSimplex) -> bool:
    # (e23 ◁ θ012) · θ023 == (θ123 ▷ e01) · θ013, both in hom(σ0, σ3)
    t, c = tetrahedron, two_category
    lhs = c.vertical(c.whisker_left(t.edge(2, 3), t.triangle(0, 1, 2)), t.triangle(0, 2, 3))
    rhs = c.vertical(c.whisker_right(t.triangle(1, 2, 3), t.edge(0, 1)), t.triangle(0, 1, 3))
    return lhs == rhs
