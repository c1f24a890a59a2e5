from .snf import (
    abelian_invariants,
    certify,
    determinant,
    h2_rank_abelian,
    is_finite,
    order,
    parse_matrix_literal,
    smith_normal_form,
)
from .types import (
    AbelianGroupData,
    InfiniteGroupError,
    IntLinError,
    IntMatrix,
    MatrixLiteralError,
    MatrixShapeError,
    SmithForm,
)

__all__ = [
    "abelian_invariants",
    "certify",
    "determinant",
    "h2_rank_abelian",
    "is_finite",
    "order",
    "parse_matrix_literal",
    "smith_normal_form",
    "AbelianGroupData",
    "InfiniteGroupError",
    "IntLinError",
    "IntMatrix",
    "MatrixLiteralError",
    "MatrixShapeError",
    "SmithForm",
]
