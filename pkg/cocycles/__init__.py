"""
Cociclos explícitos: modelo polinomial de W_1, a_{2m}, a_{3m}, ruedas y ξ_{λ,n}
"""

from .w1_model import (
    PolyChain,
    a_cocycles,
    basis_chain,
    chain_coordinates,
    cochain_from_polychain,
    is_exact,
    polychain_from_cochain,
    w1_chain_basis,
    w1_differential,
    w1_model_block,
    w1_model_cohomology,
    y_symbols,
    z_symbols,
)
from .wheels import (
    GraphCochain,
    WheelGraph,
    class_rank,
    cochain_product,
    curvature_matrix,
    linear_matrix,
    relative_block,
    shuffle_evaluate,
    wheel_cocycle,
    wheel_trace,
    xi_lambda,
)
