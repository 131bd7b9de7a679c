import logging
from thetanerve.constants.budgets import (DEFAULT_SEED, MAX_FREECELL_M, MAX_ORACLE_DIM, MAX_POLYGON)

LOGGER = logging.getLogger(__name__)

class VerificationConfig():
    """Configuration class for the verification suites.

    Parameters
    ----------
    max_mat_dim : int, optional, default=5
        The largest dimension of Mat(D) scanned by the simplicial-identity suite.
    max_oracle_dim : int, optional, default=4
        The largest dimension compared against the brute-force Duskin nerve.
    max_m : int, optional, default=4
        The largest ``m`` for the free 2-cell face relations and 2-skeleton.
    max_polygon : int, optional, default=7
        The largest ``n`` for the triangulation and shuffle bijection.
    seed : int, optional, default=42
        The seed of the randomized functor mutations.
    show_progress : bool, optional, default=False
        Whether to show tqdm progress bars.

    Returns
    -------
    VerificationConfig
        The configuration object
    """
    def __init__(self,
                 max_mat_dim: int = 5,
                 max_oracle_dim: int = MAX_ORACLE_DIM,
                 max_m: int = MAX_FREECELL_M,
                 max_polygon: int = MAX_POLYGON,
                 seed: int = DEFAULT_SEED,
                 show_progress: bool = False
                ):

        if max_mat_dim < 0:
            message = f"max_mat_dim must be non-negative, got {max_mat_dim}."
            LOGGER.error(message)
            raise ValueError(message)
        if not 0 <= max_oracle_dim <= MAX_ORACLE_DIM:
            message = f"max_oracle_dim must lie in 0..{MAX_ORACLE_DIM}, got {max_oracle_dim}."
            LOGGER.error(message)
            raise ValueError(message)
        if max_m < 1:
            message = f"max_m must be at least 1, got {max_m}."
            LOGGER.error(message)
            raise ValueError(message)
        if max_polygon < 2:
            message = f"max_polygon must be at least 2, got {max_polygon}."
            LOGGER.error(message)
            raise ValueError(message)

        self.config = {
            "max_mat_dim": max_mat_dim,
            "max_oracle_dim": max_oracle_dim,
            "max_m": max_m,
            "max_polygon": max_polygon,
            "seed": seed,
            "show_progress": show_progress,
        }
