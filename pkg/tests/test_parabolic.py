"""
Pruebas de los módulos explícitos y de las verificaciones sobre la parabólica
"""

import pytest

from exactlin import AlgebraError, ParameterError
from liealg import gl, parabolic
from parabolic import (
    ExplicitModule,
    ParabolicSetup,
    adjoint_module,
    determinant_power,
    dual,
    invariant_dimension,
    irreducible_gl_module,
    levi_module,
    predicted_ext,
    restrict,
    schur_module,
    tautological_module,
    tensor,
    trivial_module,
    u_block_module,
    verify_b_vanishing,
    verify_ext_prediction,
    verify_grassmannian_degeneration,
)

COEFFICIENTS = {"trivial": trivial_module, "tautological": tautological_module, "adjoint": adjoint_module}


@pytest.mark.parametrize("m, n", [(1, 1), (1, 2), (2, 2)])
def test_setup_is_consistent(m, n):
    assert ParabolicSetup(m, n).is_consistent()


def test_setup_rejects_empty_block():
    with pytest.raises(ParameterError):
        ParabolicSetup(0, 1)


@pytest.mark.parametrize("partition, size, dimension", [
    ((1,), 2, 2),
    ((2,), 2, 3),
    ((1, 1), 2, 1),
    ((2,), 3, 6),
    ((1, 1), 3, 3),
])
def test_schur_module_dimensions(partition, size, dimension):
    module = schur_module(partition, size)
    assert module.dimension == dimension
    assert module.validate(gl(size).basis)


def test_schur_module_of_empty_partition_is_trivial():
    assert schur_module((), 2).dimension == 1


def test_basic_modules_respect_brackets():
    basis = gl(2).basis
    for module in (trivial_module(2), tautological_module(2), adjoint_module(2), determinant_power(2, -1)):
        assert module.validate(basis)
    assert dual(tautological_module(2)).validate(basis)
    assert tensor(tautological_module(2), dual(tautological_module(2))).validate(basis)


def test_broken_module_is_rejected():
    taut = tautological_module(2)
    actions = dict(taut.actions)
    actions[next(iter(actions))] = adjoint_module(2).actions[next(iter(actions))]
    with pytest.raises(AlgebraError) as error:
        ExplicitModule(2, actions, "roto").validate(gl(2).basis)
    assert error.value.code == "MODULE_ACTION_INVALID"


def test_missing_action():
    module = restrict(tautological_module(2), parabolic(1, 1))
    with pytest.raises(AlgebraError):
        module.validate(gl(2).basis)


def test_invariant_dimension():
    assert invariant_dimension(adjoint_module(2), gl(2)) == 1
    assert invariant_dimension(tensor(dual(tautological_module(2)), tautological_module(2)), gl(2)) == 1
    assert invariant_dimension(tautological_module(2), gl(2)) == 0


def test_irreducible_modules():
    assert irreducible_gl_module((0, 0)).dimension == 1
    assert irreducible_gl_module((1, 0)).dimension == 2
    assert irreducible_gl_module((1, 1)).dimension == 1
    assert irreducible_gl_module((0, -1)).validate(gl(2).basis)
    with pytest.raises(ParameterError):
        irreducible_gl_module((0, 1))


def test_levi_and_u_block_modules_are_b_modules():
    b = parabolic(1, 1)
    assert levi_module((-1, 1), 1, 1).validate(b.basis)
    assert u_block_module((1,), 1, 1).validate(b.basis)
    assert restrict(tautological_module(2), b).validate(b.basis)


def test_vanishing_examples():
    setup = ParabolicSetup(1, 1)
    report = verify_b_vanishing(setup, (), trivial_module(2))
    assert report.computed == {0: 1}
    report = verify_b_vanishing(setup, (1,), tautological_module(2))
    assert report.computed == {0: 1}
    report = verify_b_vanishing(setup, (1,), trivial_module(2))
    assert report.computed == {}
    assert report.passed


@pytest.mark.parametrize("partition", [(), (1,), (2,)])
@pytest.mark.parametrize("name", sorted(COEFFICIENTS))
def test_vanishing_grid_11(partition, name):
    assert verify_b_vanishing(ParabolicSetup(1, 1), partition, COEFFICIENTS[name](2)).passed


@pytest.mark.slow
@pytest.mark.parametrize("partition", [(), (1,), (2,)])
@pytest.mark.parametrize("name", sorted(COEFFICIENTS))
def test_vanishing_grid_12(partition, name):
    assert verify_b_vanishing(ParabolicSetup(1, 2), partition, COEFFICIENTS[name](3)).passed


def test_vanishing_rejects_long_partition():
    with pytest.raises(ParameterError):
        verify_b_vanishing(ParabolicSetup(1, 1), (1, 1), trivial_module(2))


def test_predicted_ext_examples():
    assert predicted_ext((0, 0), (0, 0), 1, 1) == (0, 1)
    assert predicted_ext((0, 0), (-1, 1), 1, 1) == (1, 1)
    assert predicted_ext((0, 0), (5, 5), 1, 1) is None
    assert predicted_ext((0, 0, 0), (0, 0, 0), 1, 2) == (0, 1)


def test_predicted_ext_validation():
    with pytest.raises(ParameterError):
        predicted_ext((0, 1), (0, 0), 1, 1)
    with pytest.raises(ParameterError):
        predicted_ext((0, 0), (0, 0, 0), 1, 1)


@pytest.mark.parametrize("highest, levi_weight, expected", [
    ((0, 0), (0, 0), {0: 1}),
    ((0, 0), (-1, 1), {1: 1}),
    ((1, 0), (1, 0), {0: 1}),
    ((1, 0), (-1, 2), {1: 1}),
    ((1, 0), (0, 1), {}),
])
def test_ext_prediction(highest, levi_weight, expected):
    report = verify_ext_prediction(highest, levi_weight, 1, 1)
    assert report.computed == expected
    assert report.passed


@pytest.mark.parametrize("m, n, name", [
    (1, 1, "trivial"),
    (1, 1, "adjoint"),
    (1, 2, "trivial"),
    pytest.param(1, 2, "adjoint", marks=pytest.mark.slow),
])
def test_grassmannian_degeneration(m, n, name):
    report = verify_grassmannian_degeneration(m, n, COEFFICIENTS[name](m + n))
    diagonal = {(k, k): 1 for k in range(min(m, n) * max(m, n) + 1)}
    assert report.computed == diagonal
    assert report.details["invariants"] == 1


def test_degeneration_size_limit():
    with pytest.raises(ParameterError):
        verify_grassmannian_degeneration(2, 3, trivial_module(5))


def test_report_serialization():
    report = verify_grassmannian_degeneration(1, 1, trivial_module(2))
    document = report.to_dict()
    assert document["computed"] == {"0,0": 1, "1,1": 1}
    assert document["passed"] is True
