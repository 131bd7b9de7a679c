import logging
from typing import Sequence

LOGGER = logging.getLogger(__name__)

def coface(n: int, i: int) -> tuple[int, ...]:
    """The injection ``[n-1] -> [n]`` that skips ``i``."""
    return tuple(j if j < i else j + 1 for j in range(n))

def codegeneracy(n: int, i: int) -> tuple[int, ...]:
    """The surjection ``[n+1] -> [n]`` that hits ``i`` twice."""
    return tuple(j if j <= i else j - 1 for j in range(n + 2))

def chi(k: int, n: int) -> tuple[int, ...]:
    """The n-simplex of Δ[1] sending vertices ``0..k`` to 0 and the rest to 1."""
    return tuple(0 if v <= k else 1 for v in range(n + 1))

def check_vertex_map(vertex_map: Sequence[int], n: int) -> tuple[int, ...]:
    """Validates a monotone map ``[m] -> [n]`` given by its values.

    Raises
    ------
    ValueError
        If the map is empty, leaves ``[n]`` or is not monotone.
    """
    vertex_map = tuple(int(v) for v in vertex_map)
    if not vertex_map:
        message = "A vertex map needs at least one vertex."
        LOGGER.error(message)
        raise ValueError(message)
    if min(vertex_map) < 0 or max(vertex_map) > n:
        message = f"Vertex map {vertex_map} leaves [{n}]."
        LOGGER.error(message)
        raise ValueError(message)
    if any(a > b for a, b in zip(vertex_map, vertex_map[1:])):
        message = f"Vertex map {vertex_map} is not monotone."
        LOGGER.error(message)
        raise ValueError(message)
    return vertex_map
