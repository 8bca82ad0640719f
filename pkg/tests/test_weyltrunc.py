"""
Pruebas de los complejos de transgresión y del ideal de bandera
"""

import pytest

from cecomplex import build_absolute_complex, build_relative_complex, hochschild_serre_pages, support
from combinat import catalan, monomial, poly_add, poly_from_dims, poly_mul, poly_pow
from exactlin import ParameterError
from liealg import AlgebraFamily
from weyltrunc import (
    FlagIdeal,
    SuperMonomial,
    TransgressionComplex,
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


def test_ideal_member_single_block():
    ideal = FlagIdeal((1,))
    assert ideal_member((2,), ideal)
    assert not ideal_member((1,), ideal)


def test_ideal_member_prefix_rule():
    ideal = FlagIdeal((1, 1))
    assert not ideal_member((1, 1), ideal)
    assert ideal_member((2, 0), ideal)


def test_ideal_member_weighted_rule():
    ideal = FlagIdeal((2,))
    assert ideal_member(SuperMonomial((0, 0), (1, 1)), ideal)
    assert not ideal_member((0, 1), ideal)


def test_relative_flag_poincare():
    assert relative_flag_poincare((1,)) == [1, 0, 1]
    assert relative_flag_poincare((2,)) == [1, 0, 1, 0, 2]
    assert relative_flag_poincare((1, 1)) == [1, 0, 2, 0, 2]


def test_gl1_flag_complex_n1():
    complex_ = gl1_flag_complex(1)
    assert [str(m) for m in complex_.monomials(1)] == ["c1"]
    assert complex_.differential(SuperMonomial((1,), (0,))) == {SuperMonomial((0,), (1,)): 1}
    assert support(complex_.cohomology()) == {0: 1, 3: 1}


@pytest.mark.parametrize("N, expected", [
    (1, {0: 1, 3: 1}),
    (2, {0: 1, 3: 1, 5: 2, 6: 2}),
    (3, {0: 1, 3: 1, 5: 2, 6: 2, 7: 5, 8: 10, 9: 5}),
])
def test_gl1_flag_cohomology(N, expected):
    dims, predicted = gl1_flag_cohomology(N)
    assert support(dims) == expected
    assert len(predicted) == sum(expected.values())


@pytest.mark.parametrize("N", [1, 2, 3, 4, 5])
def test_catalan_series(N):
    dims, _ = gl1_flag_cohomology(N)
    assert poly_from_dims(dims) == poincare_formula(N)


def test_poincare_formula():
    assert poincare_formula(1) == [1, 0, 0, 1]
    assert poincare_formula(2) == [1, 0, 0, 1, 0, 2, 2]
    step = poly_mul(monomial(9, catalan(4)), poly_pow([1, 1], 3))
    assert poincare_formula(4) == poly_add(poincare_formula(3), step)
    with pytest.raises(ParameterError):
        poincare_formula(0)


def test_predicted_basis_counts_catalan():
    # un monomio de grado 2n+1 por cada sucesión de votos de longitud n
    basis = predicted_catalan_basis(3)
    complex_ = gl1_flag_complex(3)
    top_odd = [m for m in basis if complex_.degree(m) == 7]
    assert len(top_odd) == catalan(3)


def test_transgression_cohomology():
    assert support(transgression_cohomology((1,))) == {0: 1, 3: 1}
    assert support(transgression_cohomology((1, 1))) == {0: 1, 3: 1, 5: 2, 6: 2}


def test_dual_path_single_block():
    top = TransgressionComplex((1,)).top
    direct = build_absolute_complex(AlgebraFamily.w(1), None, top).cohomology()
    assert support(direct) == support(transgression_cohomology((1,)))


@pytest.mark.slow
def test_dual_path_flag_11():
    top = TransgressionComplex((1, 1)).top
    direct = build_absolute_complex(AlgebraFamily.flag(1, 1), None, top).cohomology()
    assert support(direct) == support(transgression_cohomology((1, 1)))


@pytest.mark.slow
def test_dual_path_gl2_block():
    top = TransgressionComplex((2,)).top
    direct = build_absolute_complex(AlgebraFamily.w(2), None, top).cohomology()
    assert support(direct) == support(transgression_cohomology((2,)))


def test_truncated_polynomial_poincare():
    assert truncated_polynomial_poincare(1, 4) == [1, 0, 1, 0, 1]
    assert truncated_polynomial_poincare(2, 4) == [1, 0, 1, 0, 2]


def test_untruncated_weyl_model_is_acyclic():
    filtered = weyl_filtered_complex((1,), 6)
    first, second = hochschild_serre_pages(filtered, 2)
    assert first.totals() == filtered.block.chain_dimensions()
    assert second.totals() == {0: 1}


def test_untruncated_model_needs_bound():
    with pytest.raises(ParameterError):
        TransgressionComplex((1,), truncated=False)
    with pytest.raises(ParameterError):
        TransgressionComplex((0,))


def test_truncated_weyl_chain_dims_w1():
    dims = truncated_weyl_chain_dims(1, 1, 3)
    assert set(dims) == {0, 1, 2, 3}
    assert dims[0] == 1


def test_truncated_weyl_chains_match_wl_relative_chains():
    block = build_relative_complex(AlgebraFamily.wl(1, 1), None, None, 5)
    dims = truncated_weyl_chain_dims(1, 1, 5)
    assert dims == {0: 1, 1: 0, 2: 2, 3: 2, 4: 2, 5: 0}
    assert block.chain_dimensions() == dims
