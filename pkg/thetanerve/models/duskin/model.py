import logging
from collections import defaultdict
from typing import Sequence

from tqdm import tqdm

from thetanerve.categories.two_category import TwoCategory
from thetanerve.constants.budgets import MAX_ORACLE_DIM
from thetanerve.models.base_models import BaseSimplicialSet
from thetanerve.models.duskin.duskin_config import DuskinNerveConfig
from thetanerve.models.duskin.simplex import DuskinSimplex, _pasting_holds
from thetanerve.models.matset.matset_utils import codegeneracy

LOGGER = logging.getLogger(__name__)


def pasting_relation_holds(two_category: TwoCategory, faces: Sequence[DuskinSimplex]) -> bool:
    """Whether four triangles, given as faces ``d_0 .. d_3`` of a tetrahedron, satisfy the pasting relation.

    Parameters
    ----------
    two_category : TwoCategory
        The 2-category the triangles live in.
    faces : Sequence[DuskinSimplex]
        The 2-simplices ``d_0 t .. d_3 t``.

    Returns
    -------
    bool
        True iff ``(e23 ◁ θ012) · θ023 = (θ123 ▷ e01) · θ013``.

    Raises
    ------
    ValueError
        If the triangles are malformed or their boundaries do not fit together;
        this is distinct from the relation failing.
    """
    if len(faces) != 4 or any(t.dim != 2 for t in faces):
        message = "A tetrahedron needs exactly four 2-simplices."
        LOGGER.error(message)
        raise ValueError(message)
    for index, t in enumerate(faces):
        report = t.validate_in(two_category)
        if not report:
            message = f"Face {index} is not a 2-simplex of the nerve: {report.diagnostics[0]}"
            LOGGER.error(message)
            raise ValueError(message)
    for j in range(4):
        for i in range(j):
            if faces[j].face(i) != faces[i].face(j - 1):
                message = f"Incompatible boundaries: d_{i} of face {j} differs from d_{j - 1} of face {i}."
                LOGGER.error(message)
                raise ValueError(message)
    return _pasting_holds(two_category, DuskinSimplex.from_faces(faces))


class DuskinNerve(BaseSimplicialSet):
    """The Duskin nerve of a strict finite 2-category, enumerated by brute force.

    Dimensions 0 to 2 are read off the cells directly, dimension 3 matches
    triangles along shared edges and keeps the quadruples satisfying the
    pasting relation, and dimension 4 assembles compatible spheres of
    3-simplices (the nerve is 3-coskeletal, so nothing else is required).

    Example
    -------
    ```python
    from thetanerve.categories import ordinal, suspension
    from thetanerve.models.duskin import DuskinNerve

    nerve = DuskinNerve(suspension(ordinal(1)))
    print(len(nerve.simplices(4)))  # 32
    ```

    Parameters
    ----------
    two_category : TwoCategory
        The 2-category.
    configurer : DuskinNerveConfig, optional, default=default_configurer
        The model configuration.
    """
    default_configurer = DuskinNerveConfig()

    def __init__(self, two_category: TwoCategory, configurer: DuskinNerveConfig = default_configurer) -> None:
        super().__init__()
        self.two_category = two_category
        self.config = configurer.config
        self.show_progress = self.config["show_progress"]
        self._cache: dict[int, list[DuskinSimplex]] = {}

    def simplices(self, n: int) -> list[DuskinSimplex]:
        """All n-simplices, ``0 <= n <= max_dim``, in a deterministic order.

        Raises
        ------
        ValueError
            If ``n`` is negative or beyond the configured budget.
        """
        if not 0 <= n <= min(self.config["max_dim"], MAX_ORACLE_DIM):
            message = f"The nerve oracle enumerates dimensions 0..{self.config['max_dim']}, got {n}."
            LOGGER.error(message)
            raise ValueError(message)
        if n not in self._cache:
            builder = [self._points, self._edges, self._triangles, self._tetrahedra, self._four_simplices][n]
            self._cache[n] = builder()
            LOGGER.info(f"Duskin nerve of {self.two_category} has {len(self._cache[n])} simplices in dimension {n}.")
        return list(self._cache[n])

    def face(self, simplex: DuskinSimplex, i: int) -> DuskinSimplex:
        return simplex.face(i)

    def degeneracy(self, simplex: DuskinSimplex, i: int) -> DuskinSimplex:
        if not 0 <= i <= simplex.dim:
            message = f"Degeneracy s_{i} is not defined on a {simplex.dim}-simplex."
            LOGGER.error(message)
            raise ValueError(message)
        return simplex.restrict(codegeneracy(simplex.dim, i), self.two_category)

    def restrict(self, simplex: DuskinSimplex, vertex_map: Sequence[int]) -> DuskinSimplex:
        return simplex.restrict(vertex_map, self.two_category)

    def _points(self) -> list[DuskinSimplex]:
        return [DuskinSimplex(0, (p,), (), ()) for p in range(self.two_category.n_objects)]

    def _edges(self) -> list[DuskinSimplex]:
        c = self.two_category
        return [DuskinSimplex(1, c.one_cell_endpoints(cell), (cell,), ()) for cell in range(c.n_one_cells)]

    def _triangles(self) -> list[DuskinSimplex]:
        c = self.two_category
        into = defaultdict(list)
        for theta in range(c.n_two_cells):
            into[c.two_target(theta)].append(theta)

        triangles = []
        for f in range(c.n_one_cells):
            p, q = c.one_cell_endpoints(f)
            for g in range(c.n_one_cells):
                q2, r = c.one_cell_endpoints(g)
                if q2 != q:
                    continue
                for theta in into[c.compose_one_cells(g, f)]:
                    triangles.append(DuskinSimplex(2, (p, q, r), (f, c.two_source(theta), g), (theta,)))
        return triangles

    def _tetrahedra(self) -> list[DuskinSimplex]:
        c = self.two_category
        triangles = self.simplices(2)
        by_first_edge = defaultdict(list)
        by_outer_edges = defaultdict(list)
        by_boundary = defaultdict(list)
        for t in triangles:
            by_first_edge[t.edge(0, 1)].append(t)
            by_outer_edges[(t.edge(0, 1), t.edge(1, 2))].append(t)
            by_boundary[(t.edge(0, 1), t.edge(1, 2), t.edge(0, 2))].append(t)

        tetrahedra = []
        for t3 in tqdm(triangles, desc="Tetrahedra", disable=not self.show_progress):
            e01, e02, e12 = t3.edge(0, 1), t3.edge(0, 2), t3.edge(1, 2)
            for t0 in by_first_edge[e12]:
                e13, e23 = t0.edge(0, 2), t0.edge(1, 2)
                for t1 in by_outer_edges[(e02, e23)]:
                    e03 = t1.edge(0, 2)
                    for t2 in by_boundary[(e01, e13, e03)]:
                        candidate = DuskinSimplex(
                            3,
                            t3.objects + (t0.objects[2],),
                            (e01, e02, e03, e12, e13, e23),
                            (t3.two_cells[0], t2.two_cells[0], t1.two_cells[0], t0.two_cells[0]),
                        )
                        if _pasting_holds(c, candidate):
                            tetrahedra.append(candidate)
        return tetrahedra

    def _four_simplices(self) -> list[DuskinSimplex]:
        spheres = self.compatible_spheres(4, self.simplices(3))
        return [DuskinSimplex.from_faces(sphere)
                for sphere in tqdm(spheres, desc="4-simplices", disable=not self.show_progress)]


def nerve_simplices(two_category: TwoCategory, n: int) -> list[DuskinSimplex]:
    """The n-simplices of the Duskin nerve for ``0 <= n <= 4``, see `DuskinNerve`."""
    return DuskinNerve(two_category).simplices(n)
