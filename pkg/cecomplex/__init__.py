"""
Complejos de Chevalley–Eilenberg finitos y sucesiones espectrales de Hochschild–Serre
"""

from .chains import (
    CochainBasisElement,
    DualModuleCoefficients,
    SymmetricCoefficients,
    TrivialCoefficients,
    act_on_chain,
    action_matrix,
    boundary_matrix,
    chain_multiweight,
)
from .complexes import (
    SECTORS,
    CochainComplexBlock,
    build_absolute_complex,
    build_relative_complex,
    cohomology,
    finite_pair_relative_cohomology,
    finite_relative_complex,
    invariant_subspace,
    poincare,
    relative_invariance_residual,
    support,
)
from .spectral import (
    FilteredComplexBlock,
    SpectralPage,
    filtered_absolute_complex,
    filtered_relative_complex,
    hochschild_serre_pages,
)
