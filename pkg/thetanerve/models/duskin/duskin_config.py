import logging
from thetanerve.constants.budgets import MAX_ORACLE_DIM

LOGGER = logging.getLogger(__name__)

class DuskinNerveConfig():
    """Configuration class for the brute-force Duskin nerve.

    Parameters
    ----------
    max_dim : int, optional, default=4
        The largest dimension enumerated directly. The enumeration itself
        stops at 4; higher simplices are obtained by coskeletal filling.
    show_progress : bool, optional, default=False
        Whether to show tqdm progress bars.

    Returns
    -------
    DuskinNerveConfig
        The configuration object
    """
    def __init__(self,
                 max_dim: int = MAX_ORACLE_DIM,
                 show_progress: bool = False
                ):

        if not 0 <= max_dim <= MAX_ORACLE_DIM:
            message = f"max_dim must lie in 0..{MAX_ORACLE_DIM}, got {max_dim}."
            LOGGER.error(message)
            raise ValueError(message)

        self.config = {
            "max_dim": max_dim,
            "show_progress": show_progress,
        }
