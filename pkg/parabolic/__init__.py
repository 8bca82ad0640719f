"""
Verificaciones finitas para la parabólica b ⊂ gl_{m+n}: anulación, Ext y degeneración
"""

from .modules import (
    ExplicitModule,
    adjoint_module,
    determinant_power,
    dual,
    irreducible_gl_module,
    levi_module,
    restrict,
    schur_module,
    tautological_module,
    tensor,
    trivial_module,
    u_block_module,
)
from .verification import (
    ParabolicSetup,
    VerificationReport,
    invariant_dimension,
    predicted_ext,
    verify_b_vanishing,
    verify_ext_prediction,
    verify_grassmannian_degeneration,
)
