import logging
from dataclasses import dataclass
from typing import Optional

from thetanerve.constants.enums import Step
from thetanerve.paths.shuffles import Shuffle
from thetanerve.paths.triangulations import Triangle, Triangulation

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolygonState:
    """The sub-polygon left after some peels.

    ``vertices`` lists the global polygon vertices still present, in order;
    the first ``k + 1`` of them lie on the x side and the rest on the y side.
    """
    vertices: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 3 or not 0 <= self.k <= len(self.vertices) - 2:
            message = f"A polygon state needs at least 3 vertices and 0 <= k <= n - 1, got {self.vertices}, k={self.k}."
            LOGGER.error(message)
            raise ValueError(message)

    @property
    def n(self) -> int:
        return len(self.vertices) - 1

    @property
    def l(self) -> int:
        return self.n - 1 - self.k

    def global_vertex(self, local: int) -> int:
        return self.vertices[local]

    def local_vertex(self, vertex: int) -> int:
        return self.vertices.index(vertex)

    def base_step(self) -> Step:
        """The only step left in a triangle: H when its apex sits on the y side."""
        return Step.HORIZONTAL if self.k == 0 else Step.VERTICAL

    def peel(self, step: Step) -> tuple[Triangle, Optional["PolygonState"]]:
        """Removes the triangle on the outer edge ``(v_0, v_n)``.

        An H step cuts off ``v_n`` with the triangle ``(v_0, v_{n-1}, v_n)``;
        a V step cuts off ``v_0`` with ``(v_0, v_1, v_n)``. On a triangle the
        returned state is the remaining edge and is not a valid polygon, so
        the second element is then None.

        Raises
        ------
        ValueError
            If the step would leave a side empty.
        """
        step = Step(step)
        v = self.vertices
        if self.n == 2:
            if step is not self.base_step():
                message = f"The last triangle {v} with k={self.k} only admits the step {self.base_step().value}."
                LOGGER.error(message)
                raise ValueError(message)
            return (v[0], v[1], v[2]), None
        if step is Step.HORIZONTAL:
            if self.l < 1:
                message = f"No horizontal step is left in {v} with k={self.k}."
                LOGGER.error(message)
                raise ValueError(message)
            return (v[0], v[-2], v[-1]), PolygonState(v[:-1], self.k)
        if self.k < 1:
            message = f"No vertical step is left in {v} with k={self.k}."
            LOGGER.error(message)
            raise ValueError(message)
        return (v[0], v[1], v[-1]), PolygonState(v[1:], self.k - 1)


def _check_shape(n: int, k: int) -> None:
    if n < 2 or not 0 <= k <= n - 1:
        message = f"The bijection needs n >= 2 and 0 <= k <= n - 1, got n={n}, k={k}."
        LOGGER.error(message)
        raise ValueError(message)


def triangulation_to_shuffle(triangulation: Triangulation, n: int, k: int) -> Shuffle:
    """Peels the triangle on the outer edge ``(v_0, v_n)`` until none is left.

    The apex ``v_{n-1}`` gives an H step and the apex ``v_1`` a V step;
    the steps are emitted in peel order, which is the path order.

    Raises
    ------
    ValueError
        If the triangulation is not of the (n+1)-gon or violates the constraint for k.
    """
    _check_shape(n, k)
    if triangulation.n != n:
        message = f"Expected a triangulation of the {n + 1}-gon, got one of the {triangulation.n + 1}-gon."
        LOGGER.error(message)
        raise ValueError(message)
    if not triangulation.satisfies(k):
        message = f"The triangulation {triangulation} has a triangle inside one side of the cut after vertex {k}."
        LOGGER.error(message)
        raise ValueError(message)
    state, steps = PolygonState(range(n + 1), k), []
    while state is not None:
        v = state.vertices
        if state.n == 2:
            step = state.base_step()
        else:
            apex = triangulation.apex(v[0], v[-1], v[1:-1])
            if apex == v[-2]:
                step = Step.HORIZONTAL
            elif apex == v[1]:
                step = Step.VERTICAL
            else:
                message = f"The triangle on ({v[0]}, {v[-1]}) has apex {apex}, which is neither neighbour."
                LOGGER.error(message)
                raise ValueError(message)
        _, state = state.peel(step)
        steps.append(step)
    return Shuffle.from_steps(k, n - 1 - k, steps)


def shuffle_to_triangulation(shuffle: Shuffle, n: int, k: int) -> Triangulation:
    """Replays a shuffle's steps as peels and collects the triangles cut off.

    Raises
    ------
    ValueError
        If the shuffle is not a (k, n-1-k) shuffle.
    """
    _check_shape(n, k)
    if (shuffle.k, shuffle.l) != (k, n - 1 - k):
        message = f"Expected a ({k}, {n - 1 - k}) shuffle, got a ({shuffle.k}, {shuffle.l}) one."
        LOGGER.error(message)
        raise ValueError(message)
    state, triangles = PolygonState(range(n + 1), k), []
    for step in shuffle.steps:
        triangle, state = state.peel(step)
        triangles.append(triangle)
    return Triangulation(n, frozenset(triangles))
