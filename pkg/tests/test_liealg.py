"""
Pruebas de las familias de campos vectoriales y de las álgebras de matrices
"""

import random
from math import comb

import pytest
from sympy.polys.domains import QQ

from exactlin import ParameterError
from liealg import (
    AlgebraFamily,
    ModuleSpec,
    basis_at_weight,
    bracket,
    closure_check,
    closure_ok,
    field,
    gl,
    jacobi_check,
    levi,
    nilpotent_plus,
    parabolic,
    reductive_part,
    sym_module_basis,
)


def test_basis_at_weight_examples():
    assert basis_at_weight(AlgebraFamily.w(1), 2) == (field((3,), 0),)
    assert set(basis_at_weight(AlgebraFamily.flag(1, 1), 0)) == {
        field((1, 0), 0),
        field((1, 0), 1),
        field((0, 1), 1),
    }
    assert set(basis_at_weight(AlgebraFamily.wl(1, 1), 1)) == {
        field((2, 0), 1),
        field((1, 1), 1),
        field((0, 2), 1),
    }


def test_bracket_examples():
    d = field((0,), 0)
    euler = field((1,), 0)
    assert bracket(d, euler) == {d: QQ(1)}
    assert bracket(euler, euler) == {}
    # [∂, x²∂] = 2x∂
    assert bracket(d, field((2,), 0)) == {euler: QQ(2)}


def test_closure_check():
    assert closure_check(AlgebraFamily.flag(1, 1), 3)
    assert closure_check(AlgebraFamily.wl(1, 1), 3)


def test_closure_check_detects_corrupted_rule():
    family = AlgebraFamily.flag(1, 1)
    extra = field((0, 1), 0)
    assert not closure_check(family, 3, member=lambda f: family.contains(f) or f == extra)


def test_jacobi_on_low_weights():
    elements = [f for w in (-1, 0, 1) for f in basis_at_weight(AlgebraFamily.w(2), w)]
    assert jacobi_check(elements)
    flag = [f for w in (-1, 0, 1) for f in basis_at_weight(AlgebraFamily.flag(1, 1), w)]
    assert jacobi_check(flag)


def test_sym_module_basis():
    d = field((0,), 0)
    assert sym_module_basis(1, 1, -1) == [(d,)]
    assert sym_module_basis(1, 2, -2) == [(d, d)]
    assert len(sym_module_basis(1, 2, 0)) == 2


def test_reductive_part():
    assert len(reductive_part(AlgebraFamily.w(2))) == 4
    assert len(reductive_part(AlgebraFamily.flag(1, 1))) == 2
    assert len(reductive_part(AlgebraFamily.wl(1, 2))) == 5


def test_family_validation():
    with pytest.raises(ParameterError):
        AlgebraFamily("X", (1,))
    with pytest.raises(ParameterError):
        AlgebraFamily("WL", (1,))
    with pytest.raises(ParameterError):
        AlgebraFamily.w(0)
    with pytest.raises(ParameterError):
        basis_at_weight(AlgebraFamily.w(1), -2)


def test_module_spec():
    assert str(ModuleSpec.trivial()) == "k"
    assert ModuleSpec.sym(2).slots == 2
    with pytest.raises(ParameterError):
        ModuleSpec.sym(0)
    with pytest.raises(ParameterError):
        ModuleSpec("adjoint", 1)


@pytest.mark.parametrize("m, n", [(1, 1), (1, 2), (2, 2)])
def test_matrix_algebras_close(m, n):
    assert closure_ok(gl(m + n))
    assert closure_ok(levi(m, n))
    assert closure_ok(parabolic(m, n))
    assert closure_ok(nilpotent_plus(m, n))
    assert len(parabolic(m, n).units) == m * m + n * n + m * n


FAMILIES = [
    AlgebraFamily.w(1),
    AlgebraFamily.w(3),
    AlgebraFamily.flag(1, 1),
    AlgebraFamily.flag(1, 2),
    AlgebraFamily.flag(2, 1),
    AlgebraFamily.flag(1, 1, 1),
    AlgebraFamily.wl(1, 1),
    AlgebraFamily.wl(2, 1),
]


@pytest.mark.parametrize("family", [AlgebraFamily.flag(1, 2), AlgebraFamily.flag(1, 1, 1), AlgebraFamily.wl(1, 1)])
def test_jacobi_on_sampled_triples(family):
    elements = [f for w in range(-1, 5) for f in basis_at_weight(family, w)]
    generator = random.Random(7)
    for _ in range(200):
        assert jacobi_check(generator.sample(elements, 3))


@pytest.mark.parametrize("family", FAMILIES)
def test_euler_field_belongs_to_every_family(family):
    n = family.dimension
    euler = [field(tuple(1 if k == i else 0 for k in range(n)), i) for i in range(n)]
    assert all(family.contains(f) for f in euler)
    assert set(euler) <= set(basis_at_weight(family, 0))


def expected_count(family, w):
    """Número de campos x^α∂_i de peso w permitidos por la familia"""
    if family.kind == "W":
        (n,) = family.shape
        return n * comb(n + w, n - 1)
    if family.kind == "Flag":
        total, reach = 0, 0
        for size in family.shape:
            reach += size
            total += size * comb(reach + w, reach - 1)
        return total
    m, n = family.shape
    linear = m * comb(m + w, m - 1) if w <= 0 else 0
    return linear + n * comb(m + n + w, m + n - 1)


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("w", [-1, 0, 1, 2, 3])
def test_basis_at_weight_count(family, w):
    assert len(basis_at_weight(family, w)) == expected_count(family, w)
