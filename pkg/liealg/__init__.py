"""
Bases graduadas y constantes de estructura de W_n, W(n_0,...,n_k), WL(m|n) y gl_N
"""

from .matrix_algebras import (
    MatrixLieAlgebra,
    MatrixUnit,
    closure_ok,
    gl,
    levi,
    nilpotent_plus,
    parabolic,
)
from .modules import ModuleSpec
from .vector_fields import (
    AlgebraFamily,
    MonomialVectorField,
    all_fields_at_weight,
    basis_at_weight,
    bracket,
    bracket_combination,
    closure_check,
    field,
    jacobi_check,
    reductive_part,
    sym_module_basis,
    weighted_multisets,
)
