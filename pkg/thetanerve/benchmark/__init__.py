from .verification_config import VerificationConfig
from .verification import (run_suite, default_categories, evaluate_simplicial_identities, evaluate_coskeletal,
                           evaluate_phi_oracle, evaluate_freecell_relations, evaluate_bijection)
