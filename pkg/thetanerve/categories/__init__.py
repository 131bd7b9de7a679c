from .fincat import (FinCategory, FunctorData, ordinal, opposite, product, matrix_domain, enumerate_functors,
                     iter_functors, validate_functor)
from .two_category import TwoCategory, SuspensionTwoCategory, suspension, multi_suspension
