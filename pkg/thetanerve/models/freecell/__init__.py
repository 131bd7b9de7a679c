from .model import (SigmaIndex, SkeletonLabel, sigma, face_relations, verify_face_relations, two_skeleton_face,
                    skeleton_label_simplex, check_two_skeleton, nondegenerate_simplices, check_uniqueness)
