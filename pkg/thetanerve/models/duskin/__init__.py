from .duskin_config import DuskinNerveConfig
from .simplex import DuskinSimplex
from .model import DuskinNerve, nerve_simplices, pasting_relation_holds
from .phi import (phi, phi_inverse, phi_extended, phi_inverse_extended, matrices_to_nerve,
                  nerve_to_matrix)
