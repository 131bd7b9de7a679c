# Default enumeration budgets; every one of them can be raised explicitly.
MAX_MAT_DIM = 10
MAX_ORACLE_DIM = 4
MAX_PHI_DIM = 3
MAX_FREECELL_M = 4
MAX_POLYGON = 7
DEFAULT_SEED = 42

BUILTIN_SQUARE = "square"
ORDINAL_PREFIX = "ordinal:"
THETA_PREFIX = "theta:"
