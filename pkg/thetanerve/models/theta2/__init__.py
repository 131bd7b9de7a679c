from .theta2_config import Theta2Config
from .model import (TupleSimplex, TupleSimplicialSet, tuple_simplices, iter_tuple_simplices, pullback_simplices,
                    tuple_face, tuple_degeneracy, theta2_object, parse_theta2_object, count_nondegenerate,
                    is_tuple_nondegenerate, type_vector_in_image, collapse_object, tuple_phi, tuple_phi_extended,
                    tuple_phi_inverse)
