"""
Verificaciones exactas sobre la parabólica b ⊂ gl_{m+n}

Cada verificación devuelve un VerificationReport si el enunciado se cumple
en la instancia y lanza VerificationError con el código correspondiente si no.
"""

from dataclasses import dataclass, field
from functools import cached_property

from cecomplex import filtered_relative_complex, finite_pair_relative_cohomology, hochschild_serre_pages
from combinat import as_partition, dot_action, grassmannian_poincare, is_dominant, shuffles
from exactlin import ParameterError, SparseRationalMatrix, VerificationError, rank
from liealg import MatrixLieAlgebra, MatrixUnit, gl, levi, nilpotent_plus, parabolic

from .modules import dual, irreducible_gl_module, levi_module, restrict, schur_module, tensor, u_block_module


@dataclass(frozen=True)
class ParabolicSetup:
    """
    Descomposición gl_{m+n} = n⁺ ⊕ b con b = gl_m ⊕ gl_n ⊕ V*⊗U

    Args:
        m (int): dim V
        n (int): dim U
    """

    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ParameterError(f"se necesita m, n >= 1, se recibió ({self.m}, {self.n})")

    @cached_property
    def gl(self):
        return gl(self.m + self.n)

    @cached_property
    def levi(self):
        return levi(self.m, self.n)

    @cached_property
    def b(self):
        return parabolic(self.m, self.n)

    @cached_property
    def n_plus(self):
        return nilpotent_plus(self.m, self.n)

    @cached_property
    def n_minus(self):
        units = frozenset(MatrixUnit(self.m + i, j) for i in range(self.n) for j in range(self.m))
        return MatrixLieAlgebra(self.m + self.n, units, f"n-({self.m},{self.n})")

    def is_consistent(self):
        """dim b = m² + n² + mn y gl_{m+n} = b ⊕ n⁺"""
        m, n = self.m, self.n
        if len(self.b.units) != m * m + n * n + m * n:
            return False
        if self.b.units & self.n_plus.units:
            return False
        if self.b.units | self.n_plus.units != self.gl.units:
            return False
        return self.levi.units | self.n_minus.units == self.b.units


@dataclass
class VerificationReport:
    """Resultado de una verificación que se cumplió"""

    name: str
    params: dict
    computed: dict
    expected: dict
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.computed == self.expected

    def to_dict(self):
        return {
            "name": self.name,
            "params": self.params,
            "computed": _string_keys(self.computed),
            "expected": _string_keys(self.expected),
            "details": self.details,
            "passed": self.passed,
        }


def _string_keys(values):
    return {",".join(str(x) for x in k) if isinstance(k, tuple) else str(k): v for k, v in values.items()}


def invariant_dimension(module, algebra):
    """dim M^g: núcleo de las acciones apiladas de la base del álgebra"""
    stacked = SparseRationalMatrix.zeros(0, module.dimension)
    for unit in algebra.basis:
        stacked = stacked.vstack(module.action(unit))
    return module.dimension - rank(stacked)


def _support(dims):
    return {degree: dim for degree, dim in dims.items() if dim}


def verify_b_vanishing(setup, partition, module):
    """
    H(b, gl_m⊕gl_n; Hom(S^λU, L)) se concentra en grado 0 con dim Hom_{gl_{m+n}}(S^λ(V⊕U), L)

    Args:
        setup (ParabolicSetup): Par (m, n)
        partition: λ con length(λ) <= n
        module (ExplicitModule): L, módulo de gl_{m+n}

    Returns:
        VerificationReport: Informe con la cohomología y el recuento de invariantes

    Raises:
        VerificationError: VANISHING_VIOLATED si la instancia contradice el enunciado
    """
    parts = as_partition(partition).parts
    if len(parts) > setup.n:
        raise ParameterError(f"length({parts}) > n = {setup.n}")
    hom = tensor(dual(u_block_module(parts, setup.m, setup.n)), restrict(module, setup.b))
    dims = finite_pair_relative_cohomology(setup.b, setup.levi, hom)
    invariants = invariant_dimension(tensor(dual(schur_module(parts, setup.m + setup.n)), module), setup.gl)

    report = VerificationReport(
        "b-vanishing",
        {"m": setup.m, "n": setup.n, "lambda": list(parts), "L": module.name},
        _support(dims),
        _support({0: invariants}),
        {"cohomology": _string_keys(dims), "invariants": invariants},
    )
    if not report.passed:
        raise VerificationError("VANISHING_VIOLATED", f"{report.params}: {dims} frente a H^0 = {invariants}")
    return report


def predicted_ext(highest, levi_weight, m, n):
    """
    Grado y dimensión de Ext predichos por la acción punto de las barajadas

    Args:
        highest (tuple): λ dominante para gl_{m+n}
        levi_weight (tuple): μ dominante para gl_m⊕gl_n
        m (int): dim V
        n (int): dim U

    Returns:
        tuple: (longitud de ω, 1) si ω·λ = μ para alguna barajada ω; None si no
    """
    highest, levi_weight = tuple(highest), tuple(levi_weight)
    if len(highest) != m + n or len(levi_weight) != m + n:
        raise ParameterError(f"los pesos deben tener longitud {m + n}")
    if not is_dominant(highest):
        raise ParameterError(f"{highest} no es dominante para gl_{m + n}")
    if not (is_dominant(levi_weight[:m]) and is_dominant(levi_weight[m:])):
        raise ParameterError(f"{levi_weight} no es dominante para gl_{m}+gl_{n}")
    for permutation, length in shuffles(m, n):
        if dot_action(permutation, highest) == levi_weight:
            return length, 1
    return None


def verify_ext_prediction(highest, levi_weight, m, n):
    """
    Compara H(b, gl_m⊕gl_n; Hom(L(λ), L_I(μ))) con predicted_ext

    Raises:
        VerificationError: EXT_PREDICTION_VIOLATED si no coinciden
    """
    prediction = predicted_ext(highest, levi_weight, m, n)
    setup = ParabolicSetup(m, n)
    source = restrict(irreducible_gl_module(highest), setup.b)
    hom = tensor(dual(source), levi_module(levi_weight, m, n))
    dims = finite_pair_relative_cohomology(setup.b, setup.levi, hom)
    expected = {prediction[0]: prediction[1]} if prediction else {}

    report = VerificationReport(
        "ext-prediction",
        {"lambda": list(highest), "mu": list(levi_weight), "m": m, "n": n},
        _support(dims),
        expected,
        {"cohomology": _string_keys(dims), "prediction": list(prediction) if prediction else None},
    )
    if not report.passed:
        raise VerificationError("EXT_PREDICTION_VIOLATED", f"{report.params}: {dims} frente a {prediction}")
    return report


def verify_grassmannian_degeneration(m, n, module):
    """
    E_1 de Hochschild–Serre de (gl_{m+n}, gl_m⊕gl_n; L) filtrado por b

    Se comprueba que E_1 vive en la diagonal p = q con dimensiones
    (coeficientes de la grassmanniana) · dim L^{gl_{m+n}}, y que la
    característica de Euler de E_1 es la del complejo relativo.

    Raises:
        VerificationError: DEGENERATION_VIOLATED si falla alguna de las dos cosas
    """
    if m + n > 4:
        raise ParameterError(f"m + n = {m + n} supera el tamaño admitido (4)")
    setup = ParabolicSetup(m, n)
    filtered = filtered_relative_complex(setup.gl, setup.levi, setup.b, module)
    first_page = hochschild_serre_pages(filtered, 1)[0]
    invariants = invariant_dimension(module, setup.gl)
    grassmannian = grassmannian_poincare(m, n)
    expected = {
        (k, k): grassmannian[2 * k] * invariants
        for k in range(len(grassmannian) // 2 + 1)
        if 2 * k < len(grassmannian) and grassmannian[2 * k] * invariants
    }
    block = filtered.block
    euler = sum((-1) ** p * block.dimension(p) for p in range(block.top + 1))

    report = VerificationReport(
        "grassmannian-degeneration",
        {"m": m, "n": n, "L": module.name},
        dict(first_page.entries),
        expected,
        {"euler_characteristic": euler, "invariants": invariants},
    )
    if not report.passed or first_page.euler_characteristic() != euler:
        raise VerificationError(
            "DEGENERATION_VIOLATED", f"{report.params}: E_1 = {first_page.entries} frente a {expected}"
        )
    return report
