import logging
from thetanerve.constants.budgets import MAX_MAT_DIM

LOGGER = logging.getLogger(__name__)

class MatSetConfig():
    """Configuration class for the matrix simplicial set.

    Parameters
    ----------
    max_dim : int, optional, default=10
        The largest dimension `simplices` is allowed to enumerate.
    show_progress : bool, optional, default=False
        Whether to show tqdm progress bars during enumeration.

    Returns
    -------
    MatSetConfig
        The configuration object
    """
    def __init__(self,
                 max_dim: int = MAX_MAT_DIM,
                 show_progress: bool = False
                ):

        if max_dim < 0:
            message = f"max_dim must be non-negative, got {max_dim}."
            LOGGER.error(message)
            raise ValueError(message)

        self.config = {
            "max_dim": max_dim,
            "show_progress": show_progress,
        }
