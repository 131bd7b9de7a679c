from abc import ABC, abstractmethod
from collections import defaultdict
import logging
from typing import Hashable, Iterator, Optional, Protocol, Sequence, TypeVar, runtime_checkable

from tqdm import tqdm

from thetanerve.constants.enums import LoggingType, LoggingLevel
from thetanerve.utils.logger import Logger
from thetanerve.utils.validation import ValidationReport

LOGGER = logging.getLogger(__name__)

Simplex = TypeVar("Simplex", bound=Hashable)

@runtime_checkable
class SimplicialSetProtocol(Protocol):
    def simplices(self, n: int) -> list:
        ...
    def face(self, simplex, i: int):
        ...
    def degeneracy(self, simplex, i: int):
        ...

class BaseSimplicialSet(ABC, Logger):
    """Base class for every concrete simplicial set in the package.

    Subclasses provide the n-simplices and the face and degeneracy maps; the
    simplicial identities, degeneracy detection and sphere enumeration are
    derived here so each model is checked by the same code.

    Parameters
    ----------
    logging_type : LoggingType
        The logging type
    level : LoggingLevel
        The logging level
    """

    def __init__(self, logging_type = LoggingType.CONSOLE, level = LoggingLevel.INFO):

        super().__init__(logging_type, level)
        self.show_progress = False

    @abstractmethod
    def simplices(self, n: int) -> list:
        pass

    @abstractmethod
    def face(self, simplex, i: int):
        pass

    @abstractmethod
    def degeneracy(self, simplex, i: int):
        pass

    def retraction_witness(self, simplex) -> Optional[int]:
        """An index ``i`` with ``s_i d_i x = x``, or None if ``x`` is non-degenerate."""
        for i in range(simplex.dim):
            if self.degeneracy(self.face(simplex, i), i) == simplex:
                return i
        return None

    def nondegenerate_simplices(self, n: int) -> list:
        return [simplex for simplex in self.simplices(n) if self.retraction_witness(simplex) is None]

    def check_simplicial_identities(self, max_dim: int, min_dim: int = 0) -> ValidationReport:
        """Checks the five simplicial identities on every simplex up to ``max_dim``.

        Parameters
        ----------
        max_dim : int
            The largest dimension of the simplices the identities are applied to.
        min_dim : int, optional, default=0
            The smallest such dimension.

        Returns
        -------
        ValidationReport
            The first violated identity, or a report with the number of simplices checked.
        """
        d, s = self.face, self.degeneracy
        checked = 0
        for n in range(min_dim, max_dim + 1):
            for x in tqdm(self.simplices(n), desc=f"Simplicial identities n={n}", disable=not self.show_progress):
                checked += 1
                for j in range(n + 1):
                    for i in range(j):
                        if n >= 2 and d(d(x, j), i) != d(d(x, i), j - 1):
                            return ValidationReport.failure(f"d_{i} d_{j} != d_{j - 1} d_{i} on {x}")

                    y = s(x, j)
                    if d(y, j) != x or d(y, j + 1) != x:
                        return ValidationReport.failure(f"d_{j} s_{j} or d_{j + 1} s_{j} is not the identity on {x}")
                    if n >= 1:
                        for i in range(j):
                            if d(y, i) != s(d(x, i), j - 1):
                                return ValidationReport.failure(f"d_{i} s_{j} != s_{j - 1} d_{i} on {x}")
                        for i in range(j + 2, n + 2):
                            if d(y, i) != s(d(x, i - 1), j):
                                return ValidationReport.failure(f"d_{i} s_{j} != s_{j} d_{i - 1} on {x}")
                    for i in range(j + 1):
                        if s(y, i) != s(s(x, i), j + 1):
                            return ValidationReport.failure(f"s_{i} s_{j} != s_{j + 1} s_{i} on {x}")
        return ValidationReport.ok(checked=checked)

    def compatible_spheres(self, n: int, lower: Optional[Sequence] = None) -> Iterator[tuple]:
        """Streams the tuples ``(t_0, .., t_n)`` of (n-1)-simplices with ``d_i t_j = d_{j-1} t_i`` for ``i < j``.

        The candidates for ``t_j`` are looked up by their last face, which has
        to equal ``d_j t_n``; the remaining relations are checked as the tuple grows.

        Parameters
        ----------
        n : int
            The dimension of the sphere to fill, at least 2.
        lower : Sequence, optional
            The (n-1)-simplices to draw from; all of them by default.
        """
        if n < 2:
            message = f"Spheres are only enumerated from dimension 2 on, got {n}."
            LOGGER.error(message)
            raise ValueError(message)
        lower = list(lower) if lower is not None else self.simplices(n - 1)
        faces: dict[tuple, object] = {}

        def face(x, i):
            key = (x, i)
            if key not in faces:
                faces[key] = self.face(x, i)
            return faces[key]

        by_last_face = defaultdict(list)
        for x in lower:
            by_last_face[face(x, n - 1)].append(x)

        chosen: list = [None] * (n + 1)

        def extend(j: int) -> Iterator[tuple]:
            if j == n:
                yield tuple(chosen)
                return
            for x in by_last_face.get(face(chosen[n], j), ()):
                if all(face(chosen[i], j - 1) == face(x, i) for i in range(j)):
                    chosen[j] = x
                    yield from extend(j + 1)

        for top in lower:
            chosen[n] = top
            yield from extend(0)
