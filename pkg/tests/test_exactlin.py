"""
Pruebas de álgebra lineal exacta
"""

import random
from fractions import Fraction

import pytest
from sympy import Rational
from sympy.polys.domains import QQ

from exactlin import (
    STRATEGIES,
    AlgebraError,
    ParameterError,
    SparseRationalMatrix,
    cohomology_dim,
    column_space_rank,
    kernel_basis,
    rank,
    to_rational,
)


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_rank_examples(strategy):
    assert rank(SparseRationalMatrix.zeros(3, 3), strategy) == 0
    assert rank(SparseRationalMatrix.identity(3), strategy) == 3
    assert rank(SparseRationalMatrix.from_rows([[1, 2], [2, 4]]), strategy) == 1


def test_strategies_agree_on_rational_matrix():
    matrix = SparseRationalMatrix.from_rows([
        [Fraction(1, 2), 0, 3, 0],
        [0, 1, Fraction(-1, 3), 2],
        [1, 2, Fraction(16, 3), 4],
    ])
    assert {rank(matrix, strategy) for strategy in STRATEGIES} == {2}


def test_unknown_strategy():
    with pytest.raises(ParameterError):
        rank(SparseRationalMatrix.identity(2), "gauss")


def test_kernel_basis_examples():
    assert kernel_basis(SparseRationalMatrix.identity(2)) == []
    assert len(kernel_basis(SparseRationalMatrix.zeros(2, 3))) == 3

    row = SparseRationalMatrix.from_rows([[1, 1]])
    (vector,) = kernel_basis(row)
    assert vector.get(0, QQ.zero) == -vector.get(1, QQ.zero) != 0


def test_kernel_vectors_are_annihilated():
    matrix = SparseRationalMatrix.from_rows([[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0]])
    basis = kernel_basis(matrix)
    assert len(basis) == matrix.cols - rank(matrix)
    for vector in basis:
        assert matrix.apply(vector) == {}
    assert column_space_rank(basis, matrix.cols) == len(basis)


def test_cohomology_dim_examples():
    assert cohomology_dim(SparseRationalMatrix.zeros(1, 0), SparseRationalMatrix.zeros(0, 1)) == 1
    assert cohomology_dim(SparseRationalMatrix.zeros(1, 0), SparseRationalMatrix.identity(1)) == 0
    # k -> k² -> k de Koszul
    d_in = SparseRationalMatrix.from_rows([[1], [1]])
    d_out = SparseRationalMatrix.from_rows([[1, -1]])
    assert cohomology_dim(d_in, d_out) == 0


def test_cohomology_dim_rejects_bad_composition():
    d_in = SparseRationalMatrix.from_rows([[1], [0]])
    d_out = SparseRationalMatrix.from_rows([[1, 0]])
    with pytest.raises(AlgebraError) as error:
        cohomology_dim(d_in, d_out)
    assert error.value.code == "COMPOSITION_NOT_ZERO"


def test_cohomology_dim_shape_mismatch():
    with pytest.raises(ParameterError):
        cohomology_dim(SparseRationalMatrix.zeros(2, 1), SparseRationalMatrix.zeros(1, 3))


def test_to_rational_conversions():
    assert to_rational(3) == QQ(3)
    assert to_rational(Fraction(2, 6)) == QQ(1, 3)
    assert to_rational(Rational(-5, 4)) == QQ(-5, 4)
    with pytest.raises(ParameterError):
        to_rational(0.5)


def test_matrix_drops_zero_entries():
    matrix = SparseRationalMatrix(2, 2, [(0, 0, 1), (0, 0, -1), (1, 1, 2)])
    assert matrix.nnz() == 1
    assert matrix.transpose().get(1, 1) == QQ(2)
    with pytest.raises(ParameterError):
        SparseRationalMatrix(1, 1, [(1, 0, 1)])


def test_matmul_and_vstack():
    a = SparseRationalMatrix.from_rows([[1, 2], [0, 1]])
    b = SparseRationalMatrix.from_rows([[1, -2], [0, 1]])
    assert a.matmul(b) == SparseRationalMatrix.identity(2)
    stacked = a.vstack(b)
    assert stacked.shape == (4, 2)
    assert rank(stacked) == 2


def test_error_codes():
    error = ParameterError("fuera de rango")
    assert error.code == "INVALID_PARAMETERS"
    assert isinstance(error, ValueError)
    assert str(error).startswith("INVALID_PARAMETERS")


def random_rational_matrix(generator, rows, cols, density=0.4):
    """Matriz dispersa con entradas p/q pequeñas; a veces de rango bajo"""
    entries = [
        [Fraction(generator.randint(-5, 5), generator.randint(1, 4)) if generator.random() < density else 0 for _ in range(cols)]
        for _ in range(rows)
    ]
    if generator.random() < 0.5 and rows > 2:
        entries[-1] = [a + 2 * b for a, b in zip(entries[0], entries[1])]
    return SparseRationalMatrix.from_rows(entries)


@pytest.mark.parametrize("seed", range(12))
def test_rank_properties_on_random_matrices(seed):
    generator = random.Random(seed)
    matrix = random_rational_matrix(generator, generator.randint(1, 7), generator.randint(1, 7))
    ranks = {rank(matrix, strategy) for strategy in STRATEGIES}
    assert len(ranks) == 1
    (value,) = ranks
    assert rank(matrix.transpose()) == value
    basis = kernel_basis(matrix)
    assert value + len(basis) == matrix.cols
    assert column_space_rank(basis, matrix.cols) == len(basis)
    for vector in basis:
        assert matrix.apply(vector) == {}
