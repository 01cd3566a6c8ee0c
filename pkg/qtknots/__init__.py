"""
qtknots: exact (q,t)-symmetric function computations.

Modified Macdonald polynomials, ∇ and Δ operators, elliptic Hall algebra
operators on symmetric functions, torus-link superpolynomials and the
triangular-partition enumerators 𝒟_τ and 𝔻_τ.
"""

from .errors import (
    ArithmeticInconsistencyError, DegreeLimitError, InvalidInputError, QtKnotsError, VerificationError,
    ZeroDenominatorError,
)
from .hall import create, e_kn, xkn_apply
from .knots import check_A_candidate, superpoly
from .macdonald import kostka_matrix, macH, nabla
from .partitions import Partition, parse_partition
from .settings import VERSION
from .symfunc import SymFunc, e, h, p, parse_symfunc, s
from .triangular import d_tau, delta_comb, enumerate_triangular, is_triangular

__version__ = VERSION

__all__ = [
    "ArithmeticInconsistencyError", "DegreeLimitError", "InvalidInputError", "Partition", "QtKnotsError",
    "SymFunc", "VerificationError", "ZeroDenominatorError", "__version__", "check_A_candidate", "create",
    "d_tau", "delta_comb", "e", "e_kn", "enumerate_triangular", "h", "is_triangular", "kostka_matrix",
    "macH", "nabla", "p", "parse_partition", "parse_symfunc", "s", "superpoly", "xkn_apply",
]
