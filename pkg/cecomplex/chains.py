"""
Cadenas de Chevalley–Eilenberg: bases, borde y acción de subálgebras

Las cocadenas de grado p con valores en M* se identifican con funcionales
sobre Λ^p g ⊗ M, así que el diferencial de cocadenas es la transpuesta del
borde de cadenas construido aquí.
"""

from dataclasses import dataclass
from itertools import combinations

from sympy.polys.domains import QQ

from exactlin import AlgebraError, SparseRationalMatrix
from liealg import weighted_multisets


@dataclass(frozen=True)
class CochainBasisElement:
    """
    Elemento de base: ranuras exteriores (estrictamente crecientes) y clave del módulo

    La cocadena asociada es el funcional dual a exterior ⊗ module.
    """

    exterior: tuple
    module: object = ()

    def __str__(self):
        slots = " ^ ".join(str(x) for x in self.exterior) or "1"
        if self.module == ():
            return slots
        if isinstance(self.module, tuple):
            return slots + " | " + " . ".join(str(x) for x in self.module)
        return f"{slots} | e{self.module}"


class TrivialCoefficients:
    """Coeficientes en el cuerpo base"""

    power = 0

    def act(self, x, key):
        return {}

    def keys(self):
        return [()]


class SymmetricCoefficients:
    """
    Módulo de cadenas S^m g con la acción adjunta (las cocadenas viven en S^m g*)
    """

    def __init__(self, power):
        self.power = power

    def act(self, x, key):
        result = {}
        for t, slot in enumerate(key):
            for c, coefficient in x.bracket(slot).items():
                new = tuple(sorted(key[:t] + (c,) + key[t + 1:], key=_sort_key))
                result[new] = result.get(new, QQ.zero) + coefficient
        return {k: v for k, v in result.items() if v}


class DualModuleCoefficients:
    """
    Módulo de cadenas M* para un módulo explícito M

    Las cocadenas con valores en M son funcionales sobre Λ^p g ⊗ M*, y
    x·e^a = -Σ_b ρ(x)[a, b] e^b.
    """

    def __init__(self, module):
        self.module = module
        self.power = 0

    def act(self, x, key):
        action = self.module.actions.get(x)
        if action is None:
            raise AlgebraError("MODULE_ACTION_INVALID", f"el módulo no define la acción de {x}")
        return {b: -value for b, value in action.row(key).items()}

    def keys(self):
        return list(range(self.module.dimension))


def _sort_key(element):
    return element.sort_key()


def insert_sorted(rest, element):
    """
    Posición de inserción de `element` en la tupla ordenada `rest`

    Returns:
        tuple: (posición, nueva tupla) o None si el elemento ya está
    """
    key = element.sort_key()
    position = 0
    for item in rest:
        item_key = item.sort_key()
        if item_key == key:
            return None
        if item_key > key:
            break
        position += 1
    return position, rest[:position] + (element,) + rest[position:]


def exterior_tuples(pool, count, total):
    """
    Tuplas estrictamente crecientes de `count` elementos de `pool` con peso total `total`

    `pool` debe estar ordenado por peso.
    """
    result = []
    if not pool:
        return [()] if count == 0 and total == 0 else result
    max_weight = pool[-1].weight

    def extend(start, remaining, weight_left, prefix):
        if remaining == 0:
            if weight_left == 0:
                result.append(tuple(prefix))
            return
        for index in range(start, len(pool) - remaining + 1):
            element = pool[index]
            if element.weight * remaining > weight_left:
                break
            if weight_left - element.weight > max_weight * (remaining - 1):
                continue
            prefix.append(element)
            extend(index + 1, remaining - 1, weight_left - element.weight, prefix)
            prefix.pop()

    extend(0, count, total, [])
    return result


def weight_zero_chain_basis(exterior_pool, module_pool, degree, power, multiweight=None):
    """
    Base de las cadenas de peso de Euler cero en grado `degree`

    Args:
        exterior_pool (list): Campos disponibles para las ranuras exteriores, ordenados
        module_pool (list): Campos para las ranuras simétricas, ordenados
        degree (int): Número de ranuras exteriores
        power (int): Número de ranuras simétricas
        multiweight (tuple): Si se da, sólo cadenas con ese multipeso bajo el toro

    Returns:
        list: CochainBasisElement en orden fijo
    """
    if power:
        max_weight = module_pool[-1].weight if module_pool else -1
        groups = {}
        for total in range(-power, power * max_weight + 1):
            multisets = weighted_multisets(module_pool, power, total)
            if multisets:
                groups[total] = multisets
    else:
        groups = {0: [()]}

    basis = []
    for total in sorted(groups):
        exteriors = exterior_tuples(exterior_pool, degree, -total)
        if not exteriors:
            continue
        for exterior in exteriors:
            for module in groups[total]:
                element = CochainBasisElement(exterior, module)
                if multiweight is not None and chain_multiweight(element, len(multiweight)) != tuple(multiweight):
                    continue
                basis.append(element)
    return basis


def chain_multiweight(element, size):
    total = [0] * size
    for slot in element.exterior + tuple(element.module):
        for k, value in enumerate(slot.multiweight):
            total[k] += value
    return tuple(total)


def finite_chain_basis(complement, degree, coefficients):
    """Base de Λ^degree(complemento) ⊗ módulo para álgebras de dimensión finita"""
    return [
        CochainBasisElement(exterior, key)
        for exterior in combinations(complement, degree)
        for key in coefficients.keys()
    ]


def boundary_matrix(source, target_index, coefficients, excluded=frozenset()):
    """
    Borde de cadenas ∂: C_{p+1} -> C_p

    ∂(x_0 ∧ ... ∧ x_p ⊗ n) = Σ_{i<j} (-1)^{i+j} [x_i, x_j] ∧ ... ⊗ n
                           + Σ_i (-1)^{i+1} (... x̂_i ...) ⊗ x_i·n

    Los términos con una ranura exterior en `excluded` (la subálgebra
    relativa) se descartan.

    Returns:
        SparseRationalMatrix: Matriz dim C_p x dim C_{p+1}
    """
    entries = []

    def lookup(element):
        row = target_index.get(element)
        if row is None:
            raise AlgebraError("WEIGHT_OVERFLOW", f"la cadena {element} cae fuera de la rebanada generada")
        return row

    for col, element in enumerate(source):
        xs = element.exterior
        for i in range(len(xs)):
            for j in range(i + 1, len(xs)):
                sign = -1 if (i + j) % 2 else 1
                rest = xs[:i] + xs[i + 1:j] + xs[j + 1:]
                for c, coefficient in xs[i].bracket(xs[j]).items():
                    if c in excluded:
                        continue
                    placed = insert_sorted(rest, c)
                    if placed is None:
                        continue
                    position, exterior = placed
                    value = coefficient if (sign * (-1) ** position) > 0 else -coefficient
                    entries.append((lookup(CochainBasisElement(exterior, element.module)), col, value))
            rest = xs[:i] + xs[i + 1:]
            sign = 1 if i % 2 else -1
            for key, coefficient in coefficients.act(xs[i], element.module).items():
                entries.append((lookup(CochainBasisElement(rest, key)), col, sign * coefficient))
    return SparseRationalMatrix(len(target_index), len(source), entries)


def act_on_chain(h, element, coefficients, excluded=frozenset()):
    """
    h · (x_1 ∧ ... ∧ x_p ⊗ n) como derivación en todas las ranuras

    Las componentes que caen en `excluded` se descartan, porque las
    cocadenas relativas se anulan allí.

    Returns:
        dict: {CochainBasisElement: QQ}
    """
    result = {}
    xs = element.exterior
    for i, x in enumerate(xs):
        rest = xs[:i] + xs[i + 1:]
        for c, coefficient in h.bracket(x).items():
            if c in excluded:
                continue
            placed = insert_sorted(rest, c)
            if placed is None:
                continue
            position, exterior = placed
            target = CochainBasisElement(exterior, element.module)
            value = coefficient if (position - i) % 2 == 0 else -coefficient
            result[target] = result.get(target, QQ.zero) + value
    for key, coefficient in coefficients.act(h, element.module).items():
        target = CochainBasisElement(xs, key)
        result[target] = result.get(target, QQ.zero) + coefficient
    return {k: v for k, v in result.items() if v}


def action_matrix(h, source, target_index, coefficients, excluded=frozenset()):
    """
    Matriz de la acción de h desde las cadenas `source` hacia la base indexada

    Los términos que no están en `target_index` se ignoran: sólo interesan
    las coordenadas donde vive la cocadena que se pone a prueba.

    Returns:
        SparseRationalMatrix: Matriz len(target_index) x len(source)
    """
    entries = []
    for col, element in enumerate(source):
        for target, value in act_on_chain(h, element, coefficients, excluded).items():
            row = target_index.get(target)
            if row is not None:
                entries.append((row, col, value))
    return SparseRationalMatrix(len(target_index), len(source), entries)
