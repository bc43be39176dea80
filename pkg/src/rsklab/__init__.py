"""rsklab: the row-insertion correspondence on nonnegative integer matrices,
inversion statistics, minimal Hankel constructions, and an exhaustive
verification harness for the symmetry/Hankel conjecture on minimal matrices.
"""

from .errors import CapExceededError, OracleDisagreementError
from .greene import greedy_k_increasing, greene_profile, greene_shape, max_k_increasing
from .matrices import (
    Biword,
    Matrix,
    antidiagonal_params,
    from_biword,
    hankel_from_params,
    inversion_count,
    is_hankel,
    is_symmetric,
    matrix_weight,
    to_biword,
    transpose,
)
from .minimal import (
    SplitChoice,
    candidate_count,
    minimal_hankel_candidates,
    minimal_inversion_formula,
    two_row_minimal,
)
from .partitions import (
    Partition,
    column_multiplicities,
    conjugate,
    enumerate_partitions,
    from_column_multiplicities,
    weight,
)
from .rsk import row_insert, rsk_forward, rsk_inverse, shape_of_matrix
from .search import (
    VerificationRecord,
    brute_force_minimum,
    enumerate_shape_class,
    enumerate_via_inverse_rsk,
    sweep,
    verify_partition,
)
from .tableaux import (
    Tableau,
    enumerate_ssyt,
    is_syt,
    reading_word,
    shape,
    transpose_tableau,
    validate_ssyt,
)

__version__ = "0.1.0"

__all__ = [
    "Biword",
    "CapExceededError",
    "Matrix",
    "OracleDisagreementError",
    "Partition",
    "SplitChoice",
    "Tableau",
    "VerificationRecord",
    "antidiagonal_params",
    "brute_force_minimum",
    "candidate_count",
    "column_multiplicities",
    "conjugate",
    "enumerate_partitions",
    "enumerate_shape_class",
    "enumerate_ssyt",
    "enumerate_via_inverse_rsk",
    "from_biword",
    "from_column_multiplicities",
    "greedy_k_increasing",
    "greene_profile",
    "greene_shape",
    "hankel_from_params",
    "inversion_count",
    "is_hankel",
    "is_symmetric",
    "is_syt",
    "matrix_weight",
    "max_k_increasing",
    "minimal_hankel_candidates",
    "minimal_inversion_formula",
    "reading_word",
    "row_insert",
    "rsk_forward",
    "rsk_inverse",
    "shape",
    "shape_of_matrix",
    "sweep",
    "to_biword",
    "transpose",
    "transpose_tableau",
    "two_row_minimal",
    "validate_ssyt",
    "verify_partition",
    "weight",
]
