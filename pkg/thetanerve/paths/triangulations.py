import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

LOGGER = logging.getLogger(__name__)

Triangle = tuple[int, int, int]


@dataclass(frozen=True)
class Triangulation:
    """A triangulation of the convex (n+1)-gon with vertices ``0..n``, stored as its triangles."""
    n: int
    triangles: frozenset[Triangle]

    def __post_init__(self):
        object.__setattr__(self, "triangles", frozenset(tuple(sorted(t)) for t in self.triangles))
        problem = _triangulation_problem(self.n, self.triangles)
        if problem:
            message = f"Invalid triangulation of the {self.n + 1}-gon: {problem}."
            LOGGER.error(message)
            raise ValueError(message)

    def sorted_triangles(self) -> list[Triangle]:
        return sorted(self.triangles)

    @property
    def diagonals(self) -> set[tuple[int, int]]:
        return {edge for edge, count in _edge_counts(self.triangles).items() if count == 2}

    def apex(self, a: int, b: int, inner: Iterable[int]) -> int:
        """The third vertex of the triangle on edge ``(a, b)`` lying among ``inner``."""
        inner = set(inner)
        apexes = [c for t in self.triangles if a in t and b in t for c in t if c not in (a, b) and c in inner]
        if len(apexes) != 1:
            message = f"Edge ({a}, {b}) lies in {len(apexes)} triangles inside the current polygon."
            LOGGER.error(message)
            raise ValueError(message)
        return apexes[0]

    def satisfies(self, k: int) -> bool:
        return ConstraintK(k).admits(self)

    def __str__(self) -> str:
        return " ".join(f"({a},{b},{c})" for a, b, c in self.sorted_triangles())


@dataclass(frozen=True)
class ConstraintK:
    """No triangle may lie entirely in ``{0..k}`` or entirely in ``{k+1..n}``."""
    k: int

    def admits(self, triangulation: Triangulation) -> bool:
        if not 0 <= self.k <= triangulation.n - 1:
            return False
        return all(t[0] <= self.k < t[2] for t in triangulation.triangles)


def _edge_counts(triangles: Iterable[Triangle]) -> Counter:
    counts = Counter()
    for a, b, c in triangles:
        counts.update([(a, b), (a, c), (b, c)])
    return counts


def _triangulation_problem(n: int, triangles: frozenset[Triangle]) -> str:
    if n < 2:
        return "n must be at least 2"
    if len(triangles) != n - 1:
        return f"{len(triangles)} triangles instead of {n - 1}"
    if any(not (0 <= a < b < c <= n) for a, b, c in triangles):
        return "a triangle is not an increasing triple of polygon vertices"
    boundary = {(i, i + 1) for i in range(n)} | {(0, n)}
    for edge, count in _edge_counts(triangles).items():
        if edge in boundary and count != 1:
            return f"boundary edge {edge} is used {count} times"
        if edge not in boundary and count != 2:
            return f"diagonal {edge} is used {count} times"
    diagonals = [edge for edge in _edge_counts(triangles) if edge not in boundary]
    for (a, b), (c, d) in combinations(diagonals, 2):
        if a < c < b < d or c < a < d < b:
            return f"diagonals ({a}, {b}) and ({c}, {d}) cross"
    return ""


@lru_cache(maxsize=None)
def _triangulate(vertices: tuple[int, ...]) -> tuple[frozenset[Triangle], ...]:
    if len(vertices) < 3:
        return (frozenset(),)
    result = []
    first, last = vertices[0], vertices[-1]
    for position in range(1, len(vertices) - 1):
        triangle = frozenset({(first, vertices[position], last)})
        for left in _triangulate(vertices[:position + 1]):
            for right in _triangulate(vertices[position:]):
                result.append(triangle | left | right)
    return tuple(result)


def enumerate_triangulations(n: int) -> list[Triangulation]:
    """All triangulations of the (n+1)-gon, grouped by the apex of the triangle on edge ``(0, n)``.

    Raises
    ------
    ValueError
        If ``n < 2``.
    """
    if n < 2:
        message = f"Triangulations are enumerated for n >= 2, got {n}."
        LOGGER.error(message)
        raise ValueError(message)
    return [Triangulation(n, triangles) for triangles in _triangulate(tuple(range(n + 1)))]


def filter_constrained(triangulations: Sequence[Triangulation], k: int) -> list[Triangulation]:
    constraint = ConstraintK(k)
    return [t for t in triangulations if constraint.admits(t)]


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    """Catalan numbers by the recurrence ``C_{n+1} = sum C_i C_{n-i}``."""
    if n <= 0:
        return 1
    return sum(catalan(i) * catalan(n - 1 - i) for i in range(n))
