"""
Pruebas de los complejos de Chevalley–Eilenberg y de Hochschild–Serre
"""

import pytest

from cecomplex import (
    CochainBasisElement,
    build_absolute_complex,
    build_relative_complex,
    filtered_absolute_complex,
    filtered_relative_complex,
    finite_pair_relative_cohomology,
    hochschild_serre_pages,
    relative_invariance_residual,
    support,
)
from combinat import gl_cohomology_poincare, grassmannian_poincare, partitions_bounded, poly_from_dims, poly_mul
from exactlin import ParameterError
from liealg import AlgebraFamily, ModuleSpec, field, gl, levi, parabolic
from parabolic import adjoint_module, restrict

W1 = AlgebraFamily.w(1)


def test_w1_trivial():
    block = build_absolute_complex(W1, None, 4)
    assert block.check_d_squared()
    assert support(block.cohomology()) == {0: 1, 3: 1}


def test_w1_torus_sector_matches_euler():
    euler = build_absolute_complex(W1, None, 4).cohomology()
    torus = build_absolute_complex(W1, None, 4, sector="torus").cohomology()
    assert euler == torus


@pytest.mark.parametrize("m", [1, 2])
def test_w1_symmetric_coefficients(m):
    block = build_absolute_complex(W1, ModuleSpec.sym(m), 5)
    assert support(block.cohomology()) == {2: 1, 3: 1}


@pytest.mark.slow
@pytest.mark.parametrize("m", [3, 4])
def test_w1_symmetric_coefficients_high_power(m):
    block = build_absolute_complex(W1, ModuleSpec.sym(m), 5)
    assert support(block.cohomology()) == {2: 1, 3: 1}


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_w1_relative(m):
    block = build_relative_complex(W1, None, ModuleSpec.sym(m), 4)
    assert support(block.cohomology()) == {2: 1}


@pytest.mark.slow
def test_w2_relative_sym1():
    block = build_relative_complex(AlgebraFamily.w(2), "gl", ModuleSpec.sym(1), 6)
    assert support(block.cohomology()) == {4: len(partitions_bounded(3, 2))}


@pytest.mark.slow
def test_flag_11_absolute():
    block = build_absolute_complex(AlgebraFamily.flag(1, 1), None, 7)
    assert support(block.cohomology()) == {0: 1, 3: 1, 5: 2, 6: 2}


def test_wl_11_relative():
    block = build_relative_complex(AlgebraFamily.wl(1, 1), None, None, 5)
    assert support(block.cohomology()) == {0: 1, 2: 1, 4: 1}


def test_invalid_parameters():
    with pytest.raises(ParameterError):
        build_absolute_complex(W1, None, -1)
    with pytest.raises(ParameterError):
        build_absolute_complex(W1, None, 2, sector="diagonal")
    with pytest.raises(ParameterError):
        build_relative_complex(AlgebraFamily.w(2), (field((1, 0), 0),), None, 2)


def test_relative_cochains_pass_invariance_check():
    family = AlgebraFamily.wl(1, 1)
    block = build_relative_complex(family, None, None, 2)
    for vector in block.vectors(2):
        values = {block.bases[2][i]: value for i, value in vector.items()}
        assert relative_invariance_residual(family, None, 2, values) == {}


def test_invariance_check_flags_gl_slots():
    values = {CochainBasisElement((field((1,), 0),)): 1}
    residual = relative_invariance_residual(W1, None, 1, values)
    assert (None, CochainBasisElement((field((1,), 0),))) in residual


@pytest.mark.parametrize("m, n", [(1, 1), (1, 2), pytest.param(2, 2, marks=pytest.mark.slow)])
def test_grassmannian_pairs(m, n):
    dims = finite_pair_relative_cohomology(gl(m + n), levi(m, n))
    assert poly_from_dims(dims) == grassmannian_poincare(m, n)


def test_parabolic_pair_trivial():
    assert support(finite_pair_relative_cohomology(parabolic(1, 1), levi(1, 1))) == {0: 1}


def test_parabolic_pair_adjoint():
    b = parabolic(1, 1)
    dims = finite_pair_relative_cohomology(b, levi(1, 1), restrict(adjoint_module(2), b))
    assert support(dims) == {0: 1}


def test_hochschild_serre_first_page_gl2():
    filtered = filtered_relative_complex(gl(2), levi(1, 1), parabolic(1, 1))
    assert filtered.is_well_formed()
    (first,) = hochschild_serre_pages(filtered, 1)
    assert first.entries == {(0, 0): 1, (1, 1): 1}


def test_hochschild_serre_first_page_gl3():
    filtered = filtered_relative_complex(gl(3), levi(1, 2), parabolic(1, 2))
    first = hochschild_serre_pages(filtered, 1)[0]
    assert first.entries == {(0, 0): 1, (1, 1): 1, (2, 2): 1}


def test_euler_characteristic_is_constant_across_pages():
    filtered = filtered_relative_complex(gl(3), levi(1, 2), parabolic(1, 2))
    block = filtered.block
    euler = sum((-1) ** p * block.dimension(p) for p in range(block.top + 1))
    pages = hochschild_serre_pages(filtered, 3)
    assert {page.euler_characteristic() for page in pages} == {euler}
    assert pages[-1].totals() == support(block.cohomology())


def test_absolute_filtration_is_well_formed():
    filtered = filtered_absolute_complex(W1, ModuleSpec.sym(1), 3)
    assert filtered.is_well_formed()
    assert filtered.max_level <= 3


def test_pages_reject_bad_index():
    filtered = filtered_relative_complex(gl(2), levi(1, 1), parabolic(1, 1))
    with pytest.raises(ParameterError):
        hochschild_serre_pages(filtered, 0)


@pytest.mark.parametrize("m", [1, 2])
def test_absolute_is_relative_times_gl_cohomology(m):
    p_max = 4
    absolute = build_absolute_complex(W1, ModuleSpec.sym(m), p_max).cohomology()
    relative = build_relative_complex(W1, None, ModuleSpec.sym(m), p_max).cohomology()
    product = poly_mul(poly_from_dims(support(relative)), gl_cohomology_poincare(1))
    assert {d: c for d, c in enumerate(product) if c and d <= p_max} == support(absolute)
