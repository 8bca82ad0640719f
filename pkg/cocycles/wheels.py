"""
Cociclos de grafos rueda y la familia ξ_{λ,n}

Un campo constante ∂_i es un vértice fuente (sin entradas) y un campo
cuadrático x^α ∂_k es un vértice interno con dos entradas. La rueda Γ_r
alterna r fuentes y r vértices internos; contraer sus aristas da la traza
de un producto de r matrices de gl_n. Con argumentos del módulo S^s W_n*,
s de las fuentes se sustituyen por la parte lineal del argumento.
"""

import sys
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations

from sympy import Matrix, factorial, zeros
from sympy.polys.domains import QQ

from cecomplex import CochainBasisElement, build_relative_complex, relative_invariance_residual
from combinat import Permutation, as_partition
from exactlin import ParameterError, column_space_rank, to_rational
from liealg import AlgebraFamily, ModuleSpec


@dataclass(frozen=True)
class WheelGraph:
    """
    Rueda Γ_r: ciclo de longitud 2r que alterna fuentes y vértices internos

    La fuente t alimenta al vértice interno t y el vértice interno t alimenta
    al vértice interno t + 1 (módulo r).
    """

    r: int

    def __post_init__(self):
        if self.r < 1:
            raise ParameterError(f"la rueda necesita r >= 1, se recibió {self.r}")

    @property
    def vertices(self):
        return tuple(kind for _ in range(self.r) for kind in ("source", "internal"))

    @property
    def edges(self):
        """Aristas (origen, destino) con vértices numerados 0..2r-1"""
        result = []
        for t in range(self.r):
            source, internal = 2 * t, 2 * t + 1
            result.append((source, internal))
            result.append((internal, (internal + 2) % (2 * self.r)))
        return tuple(result)

    def is_well_formed(self):
        """Una arista saliente por vértice; 0 entradas en las fuentes y 2 en los internos"""
        outgoing = [0] * (2 * self.r)
        incoming = [0] * (2 * self.r)
        for start, end in self.edges:
            outgoing[start] += 1
            incoming[end] += 1
        if any(count != 1 for count in outgoing):
            return False
        expected = {"source": 0, "internal": 2}
        return all(incoming[k] == expected[kind] for k, kind in enumerate(self.vertices))

    def __str__(self):
        return f"Γ_{self.r}"


@dataclass
class GraphCochain:
    """
    Cocadena relativa de (W_n, gl_n) con coeficientes en S^power W_n*

    Args:
        n (int): Número de coordenadas
        degree (int): Grado exterior
        power (int): Potencia simétrica de los coeficientes
        values (dict): {CochainBasisElement: QQ}, sólo valores no nulos
        graphs (tuple): Ruedas de las que procede
    """

    n: int
    degree: int
    power: int
    values: dict = field(default_factory=dict)
    graphs: tuple = ()

    def is_zero(self):
        return not self.values

    def vector(self, block):
        """Coordenadas sobre block.bases[degree]"""
        return {
            position: self.values[element]
            for position, element in enumerate(block.bases[self.degree])
            if element in self.values
        }

    def is_closed(self, block):
        return not block.differentials[self.degree].apply(self.vector(block))

    def invariance_residual(self):
        """Residuos no nulos de la invariancia bajo gl_n (vacío si es relativa)"""
        coeffs = ModuleSpec.sym(self.power) if self.power else ModuleSpec.trivial()
        return relative_invariance_residual(AlgebraFamily.w(self.n), coeffs, self.degree, self.values)

    def normalized(self, block):
        """Escala la cocadena para que su primer valor en la base del bloque sea 1"""
        vector = self.vector(block)
        if not vector:
            return self
        leading = vector[min(vector)]
        values = {element: value / leading for element, value in self.values.items()}
        return GraphCochain(self.n, self.degree, self.power, values, self.graphs)

    def __str__(self):
        names = "·".join(str(g) for g in self.graphs) or "0"
        return f"c[{names}] en C^{self.degree}(W_{self.n}, gl_{self.n}; S^{self.power})"


@lru_cache(maxsize=None)
def relative_block(n, m, p_max):
    """Complejo relativo C(W_n, gl_n; S^m W_n*) hasta el grado p_max, con caché"""
    coeffs = ModuleSpec.sym(m) if m else ModuleSpec.trivial()
    return build_relative_complex(AlgebraFamily.w(n), None, coeffs, p_max)


def linear_matrix(f, n):
    """Matriz de gl_n de un campo lineal x_j ∂_k: la unidad E_kj"""
    matrix = zeros(n, n)
    if f.weight == 0:
        matrix[f.direction, f.exponent.index(1)] = 1
    return matrix


def curvature_matrix(constant, quadratic, n):
    """
    Parte lineal de [∂_i, x^α ∂_k]: contracción de una fuente con una entrada

    Es α_i x^{α-e_i} ∂_k; el valor es 2 si α = 2e_i y 1 si α = e_i + e_l.
    """
    i = constant.direction
    alpha = quadratic.exponent
    matrix = zeros(n, n)
    if alpha[i]:
        l = next(k for k, a in enumerate(alpha) if a - (1 if k == i else 0))
        matrix[quadratic.direction, l] = alpha[i]
    return matrix


def _sign(perm):
    return -1 if Permutation(tuple(k + 1 for k in perm)).length() % 2 else 1


def _trace(matrices, n):
    product = Matrix.eye(n)
    for matrix in matrices:
        product = product * matrix
    return product.trace()


def wheel_trace(r, s, exterior, module, n):
    """
    Contracción de la rueda Γ_r con s fuentes sustituidas por argumentos del módulo

    El exterior tiene que ser exactamente k = r - s constantes seguidas de k
    cuadráticos y el módulo s campos lineales; en otro caso el valor es 0.

    Returns:
        QQ: Valor sobre (exterior | module)
    """
    k = r - s
    if len(exterior) != 2 * k or len(module) != s:
        return QQ.zero
    constants, quadratics = exterior[:k], exterior[k:]
    if any(c.weight != -1 for c in constants) or any(q.weight != 1 for q in quadratics):
        return QQ.zero
    if any(w.weight != 0 for w in module):
        return QQ.zero

    linear = [linear_matrix(w, n) for w in module]
    total = 0
    for beta in permutations(range(k)):
        for gamma in permutations(range(k)):
            curvatures = [curvature_matrix(constants[beta[t]], quadratics[gamma[t]], n) for t in range(k)]
            if any(c.is_zero_matrix for c in curvatures):
                continue
            factors = curvatures + linear
            words = sum(_trace([factors[j] for j in order], n) for order in permutations(range(r)))
            total += _sign(beta) * _sign(gamma) * words
    if k * (k - 1) // 2 % 2:
        total = -total
    return to_rational(total) / to_rational(factorial(k))


def _subset_sign(chosen):
    """Signo de la barajada que pone las posiciones elegidas delante"""
    return -1 if sum(position - index for index, position in enumerate(chosen)) % 2 else 1


def shuffle_evaluate(factors, exterior, module):
    """
    Valor del producto de cocadenas sobre (exterior | module)

    Args:
        factors (list): (grado, potencia, evaluador) con evaluador(exterior, module) -> QQ
        exterior (tuple): Ranuras exteriores ordenadas
        module (tuple): Ranuras simétricas ordenadas

    Returns:
        QQ: Σ sobre barajadas del exterior (con signo) y particiones del módulo
    """
    if not factors:
        return QQ.one if not exterior and not module else QQ.zero
    (degree, power, evaluate), rest = factors[0], factors[1:]
    total = QQ.zero
    for chosen in combinations(range(len(exterior)), degree):
        remaining = tuple(x for k, x in enumerate(exterior) if k not in chosen)
        head = tuple(exterior[k] for k in chosen)
        sign = _subset_sign(chosen)
        for picked in combinations(range(len(module)), power):
            sub_module = tuple(module[k] for k in picked)
            value = evaluate(head, sub_module)
            if not value:
                continue
            others = tuple(w for k, w in enumerate(module) if k not in picked)
            tail = shuffle_evaluate(rest, remaining, others)
            if tail:
                total += sign * value * tail
    return total


def _evaluate_on(basis, factors):
    values = {}
    for element in basis:
        value = shuffle_evaluate(factors, element.exterior, tuple(element.module))
        if value:
            values[element] = value
    return values


def wheel_cocycle(r, n):
    """
    Cocadena c_{Γ_r} ∈ C^{2r}(W_n, gl_n; k)

    Args:
        r (int): Tamaño de la rueda
        n (int): Número de coordenadas

    Returns:
        GraphCochain: Nula si r > n (no hay r constantes distintas)
    """
    if r < 1 or n < 1:
        raise ParameterError(f"wheel_cocycle necesita r >= 1 y n >= 1, se recibió ({r}, {n})")
    graph = WheelGraph(r)
    block = relative_block(n, 0, 2 * r)

    def evaluate(exterior, module):
        return wheel_trace(r, 0, exterior, module, n)

    values = _evaluate_on(block.bases[2 * r], [(2 * r, 0, evaluate)])
    return GraphCochain(n, 2 * r, 0, values, (graph,))


def cochain_product(block, first, second):
    """
    Producto exterior de dos cocadenas, evaluado sobre la base del bloque

    Args:
        block (CochainComplexBlock): Bloque relativo que contiene el grado suma
        first (GraphCochain): Primer factor
        second (GraphCochain): Segundo factor

    Returns:
        GraphCochain: Cocadena de grado y potencia suma
    """
    degree = first.degree + second.degree
    power = first.power + second.power
    if degree > block.top:
        raise ParameterError(f"el bloque llega al grado {block.top}, se pidió {degree}")
    factors = [
        (first.degree, first.power, lambda e, m: first.values.get(CochainBasisElement(e, m), QQ.zero)),
        (second.degree, second.power, lambda e, m: second.values.get(CochainBasisElement(e, m), QQ.zero)),
    ]
    values = _evaluate_on(block.bases[degree], factors)
    return GraphCochain(first.n, degree, power, values, first.graphs + second.graphs)


def _splittings(parts, total):
    """Tuplas (s_1..s_l) con 0 <= s_i <= parts[i] y suma total"""
    if not parts:
        return [()] if total == 0 else []
    result = []
    for s in range(min(parts[0], total), -1, -1):
        for tail in _splittings(parts[1:], total - s):
            result.append((s,) + tail)
    return result


def xi_lambda(partition, n, m):
    """
    Cocadena ξ_{λ,n} ∈ C^{2n}(W_n, gl_n; S^m W_n*)

    Es la componente de S-grado m de Π_i tr((L + Ω)^{λ_i}), donde Ω es la
    curvatura de la proyección a gl_n y L la parte lineal del argumento del
    módulo. Se normaliza para que su primer valor no nulo sea 1.

    Args:
        partition: Diagrama λ con |λ| = m + n
        n (int): Número de coordenadas
        m (int): Potencia simétrica

    Returns:
        GraphCochain: Cocadena relativa de grado 2n
    """
    parts = as_partition(partition).parts
    if sum(parts) != m + n:
        raise ParameterError(f"|λ| = {sum(parts)} no coincide con m + n = {m + n}")
    if len(parts) > n:
        print(
            f"[ADVERTENCIA] LENGTH_EXCEEDED: l({parts}) = {len(parts)} > {n}; la cocadena puede ser nula",
            file=sys.stderr,
        )
    block = relative_block(n, m, 2 * n)
    values = {}
    for split in _splittings(parts, m):
        factors = [
            (2 * (r - s), s, lambda e, w, r=r, s=s: wheel_trace(r, s, e, w, n))
            for r, s in zip(parts, split)
        ]
        for element, value in _evaluate_on(block.bases[2 * n], factors).items():
            values[element] = values.get(element, QQ.zero) + value
    values = {element: value for element, value in values.items() if value}
    graphs = tuple(WheelGraph(r) for r in parts)
    return GraphCochain(n, 2 * n, m, values, graphs).normalized(block)


def class_rank(block, degree, cochains):
    """
    Rango de las clases de las cocadenas dadas en H^degree del bloque

    Returns:
        int: rango(bordes + cocadenas) - rango(bordes)
    """
    dimension = block.ambient_dimension(degree)
    boundaries = [image for image in block.images(degree - 1) if image] if degree else []
    vectors = [c.vector(block) for c in cochains]
    return column_space_rank(boundaries + vectors, dimension) - column_space_rank(boundaries, dimension)
