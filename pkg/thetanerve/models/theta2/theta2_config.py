import logging
from thetanerve.constants.budgets import MAX_MAT_DIM

LOGGER = logging.getLogger(__name__)

class Theta2Config():
    """Configuration class for tuples of matrices over a multi-point suspension.

    Parameters
    ----------
    max_dim : int, optional, default=10
        The largest dimension that may be enumerated.
    show_progress : bool, optional, default=False
        Whether to show tqdm progress bars.

    Returns
    -------
    Theta2Config
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
