"""Mixed Hodge polynomials of character varieties of free abelian groups.

Closed forms for GL_n, Sp_2n, SO_2n+1 and SO_2n, checked against the
Weyl-group average over explicit signed-permutation matrices.
"""

from .hodge import (
    MatrixGroup,
    MHPResult,
    compute,
    mhp_general,
    mhp_gl,
    mhp_so_even,
    mhp_so_odd,
    mhp_sp,
    weyl_matrix_presets,
)
from .partitions import Partition, SignedPartition
from .poly import Polynomial
from .signedperm import SignedPerm

__all__ = [
    "MatrixGroup",
    "MHPResult",
    "Partition",
    "Polynomial",
    "SignedPartition",
    "SignedPerm",
    "compute",
    "mhp_general",
    "mhp_gl",
    "mhp_so_even",
    "mhp_so_odd",
    "mhp_sp",
    "weyl_matrix_presets",
]
