"""
Combinatoria: particiones, barajadas, acción punto, Catalan y series en q
"""

from .partitions import (
    Partition,
    as_partition,
    catalan,
    gl_cohomology_poincare,
    howe_exterior_check,
    partitions_bounded,
    schur_dim,
)
from .permutations import (
    Permutation,
    dot_action,
    dot_action_via_rho,
    grassmannian_poincare,
    is_dominant,
    rho,
    shuffles,
)
from .series import (
    dims_from_poly,
    from_poly,
    gaussian_binomial,
    is_palindromic,
    monomial,
    poly_add,
    poly_from_dims,
    poly_mul,
    poly_pow,
    poly_trim,
    to_poly,
)
