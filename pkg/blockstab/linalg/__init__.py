from .models import Matrix, MatrixEntries, array_of, ensure_prime, ensure_same_field, entries_of, has_shape, is_prime
from .reduction import (
    IntArray,
    column_basis,
    complement_basis,
    inverse,
    kernel_basis,
    matmul,
    random_invertible,
    rank,
    row_reduce,
    solve,
)

__all__ = [
    "Matrix",
    "MatrixEntries",
    "IntArray",
    "entries_of",
    "array_of",
    "has_shape",
    "is_prime",
    "ensure_prime",
    "ensure_same_field",
    "row_reduce",
    "rank",
    "kernel_basis",
    "solve",
    "column_basis",
    "complement_basis",
    "matmul",
    "inverse",
    "random_invertible",
]
