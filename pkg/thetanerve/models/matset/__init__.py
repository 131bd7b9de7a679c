from .matset_config import MatSetConfig
from .model import (MatSimplex, SimplexType, MatrixSimplicialSet, empty_row, empty_column, face, degeneracy,
                    restrict, type_of, is_nondegenerate, simplices, iter_simplices, matrix_from_grid,
                    matrix_from_entries)
from .coskeleton import coskeletal_fill, check_sphere, infer_type
