import logging
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence, Union

from thetanerve.constants.enums import Step

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Shuffle:
    """A non-degenerate (k+l)-simplex of ``Δ[k] x Δ[l]``, i.e. a staircase through a matrix.

    ``alpha[i]`` is the row and ``beta[i]`` the column visited at step ``i``;
    the path starts at ``(0, l)`` and ends at ``(k, 0)`` with
    ``alpha[i] + l - beta[i] = i`` throughout.
    """
    k: int
    l: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "beta", tuple(self.beta))
        k, l = self.k, self.l
        problem = None
        if k < 0 or l < 0:
            problem = f"shape ({k}, {l}) has a negative side"
        elif len(self.alpha) != k + l + 1 or len(self.beta) != k + l + 1:
            problem = f"a ({k}, {l}) shuffle visits {k + l + 1} cells"
        elif any(a + l - b != i for i, (a, b) in enumerate(zip(self.alpha, self.beta))):
            problem = "the ordinate summation property fails"
        elif self.alpha[0] != 0 or self.beta[0] != l or self.alpha[-1] != k or self.beta[-1] != 0:
            problem = "the path does not run from (0, l) to (k, 0)"
        elif any(not ((a2 - a1, b1 - b2) in ((1, 0), (0, 1)))
                 for a1, a2, b1, b2 in zip(self.alpha, self.alpha[1:], self.beta, self.beta[1:])):
            problem = "a step does not move exactly one coordinate by one"
        if problem:
            message = f"Invalid shuffle: {problem}."
            LOGGER.error(message)
            raise ValueError(message)

    @classmethod
    def from_steps(cls, k: int, l: int, steps: Union[str, Sequence[Step]]) -> "Shuffle":
        """Builds a shuffle from ``H`` (column down by one) and ``V`` (row up by one) steps."""
        alpha, beta = [0], [l]
        for step in steps:
            step = Step(step)
            if step is Step.VERTICAL:
                alpha.append(alpha[-1] + 1)
                beta.append(beta[-1])
            else:
                alpha.append(alpha[-1])
                beta.append(beta[-1] - 1)
        return cls(k, l, alpha, beta)

    @property
    def steps(self) -> tuple[Step, ...]:
        return tuple(Step.VERTICAL if a2 > a1 else Step.HORIZONTAL
                     for a1, a2 in zip(self.alpha, self.alpha[1:]))

    @property
    def word(self) -> str:
        return "".join(step.value for step in self.steps)

    @property
    def positions(self) -> list[tuple[int, int]]:
        return list(zip(self.alpha, self.beta))

    def __str__(self) -> str:
        return self.word


def enumerate_shuffles(k: int, l: int) -> list[Shuffle]:
    """All ``binomial(k + l, k)`` shuffles, ordered by the positions of their vertical steps."""
    if k < 0 or l < 0:
        message = f"Shuffles need k, l >= 0, got ({k}, {l})."
        LOGGER.error(message)
        raise ValueError(message)
    shuffles = []
    for vertical in combinations(range(k + l), k):
        steps = [Step.VERTICAL if i in vertical else Step.HORIZONTAL for i in range(k + l)]
        shuffles.append(Shuffle.from_steps(k, l, steps))
    assert len(shuffles) == comb(k + l, k)
    return shuffles
