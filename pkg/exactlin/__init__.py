"""
Álgebra lineal exacta y dispersa sobre los racionales
"""

from .elimination import (
    STRATEGIES,
    cohomology_dim,
    column_space_rank,
    kernel_basis,
    rank,
)
from .errors import AlgebraError, ParameterError, VerificationError
from .sparse import SparseRationalMatrix, to_rational

__version__ = "1.0.0"
