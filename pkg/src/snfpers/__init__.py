"""
snfpers — exact Smith Normal Decompositions, simplicial homology and
persistent-homology barcodes by graded matrix reduction.

>>> from snfpers import barcode, get_field
>>> from snfpers.catalog import square_filtration
>>> [str(b.interval) for b in barcode(square_filtration(), get_field("q")).in_dim(1)]
['[2, 5)', '[3, 4)']
"""

from snfpers.barcode import (
    Bar,
    Barcode,
    Interval,
    barcode,
    betti_at,
    p_persistent_betti,
    persistent_homology,
)
from snfpers.filtration import Filtration, from_events
from snfpers.matrices import GradedMatrix, Matrix, graded_snd, kernel_columns, snd, verify_snd
from snfpers.rings import get_field, get_ring
from snfpers.simplicial import SimplicialComplex, homology, validate_complex

__version__ = "0.1.0"

__all__ = [
    "Bar",
    "Barcode",
    "Filtration",
    "GradedMatrix",
    "Interval",
    "Matrix",
    "SimplicialComplex",
    "barcode",
    "betti_at",
    "from_events",
    "get_field",
    "get_ring",
    "graded_snd",
    "homology",
    "kernel_columns",
    "p_persistent_betti",
    "persistent_homology",
    "snd",
    "validate_complex",
    "verify_snd",
]
