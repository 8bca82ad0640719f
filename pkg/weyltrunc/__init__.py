"""
Álgebras de Weyl truncadas y complejos de transgresión módulo el ideal de bandera
"""

from .transgression import (
    FlagIdeal,
    SuperMonomial,
    TransgressionComplex,
    block_generators,
    gl1_flag_cohomology,
    gl1_flag_complex,
    ideal_member,
    poincare_formula,
    predicted_catalan_basis,
    relative_flag_poincare,
    transgression_cohomology,
    truncated_polynomial_poincare,
    truncated_weyl_chain_dims,
    weyl_filtered_complex,
)
