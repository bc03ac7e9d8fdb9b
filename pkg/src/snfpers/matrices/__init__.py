"""
Dense matrices over Euclidean domains and their Smith Normal Decompositions.
"""

from snfpers.matrices.dense import (
    Dilate,
    ElementaryOp,
    Matrix,
    Side,
    Swap,
    Transvect,
    apply_elementary,
)
from snfpers.matrices.graded import GradedMatrix, graded_snd
from snfpers.matrices.snd import (
    GradedSndResult,
    KernelColumn,
    SndResult,
    is_invertible,
    kernel_columns,
    snd,
    snf_diagonal,
    verify_snd,
)

__all__ = [
    "Matrix",
    "Side",
    "Swap",
    "Dilate",
    "Transvect",
    "ElementaryOp",
    "apply_elementary",
    "SndResult",
    "GradedSndResult",
    "KernelColumn",
    "snd",
    "snf_diagonal",
    "verify_snd",
    "is_invertible",
    "kernel_columns",
    "GradedMatrix",
    "graded_snd",
]
