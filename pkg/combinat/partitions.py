"""
Particiones, diagramas de Young y dimensiones de módulos de Schur
"""

from dataclasses import dataclass

from sympy import binomial

from .series import poly_mul


@dataclass(frozen=True)
class Partition:
    """
    Diagrama de Young λ como tupla no creciente de partes positivas

    La tupla vacía es la partición de 0.
    """

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"las partes deben ser positivas: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"las partes deben ser no crecientes: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts):
        return cls(tuple(parts))

    @property
    def size(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def transpose(self):
        if not self.parts:
            return Partition()
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def boxes(self):
        """Casillas (fila, columna) empezando en 0"""
        return [(i, j) for i, part in enumerate(self.parts) for j in range(part)]

    def hooks(self):
        conjugate = self.transpose().parts
        return [(self.parts[i] - j) + (conjugate[j] - i) - 1 for i, j in self.boxes()]

    def contents(self):
        return [j - i for i, j in self.boxes()]

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def partitions_bounded(total, max_part):
    """
    Todas las particiones de `total` con partes <= max_part

    Args:
        total (int): Entero a particionar
        max_part (int): Cota para cada parte

    Returns:
        list: Particiones en orden lexicográfico decreciente
    """
    result = []

    def extend(remaining, bound, prefix):
        if remaining == 0:
            result.append(Partition(tuple(prefix)))
            return
        for part in range(min(remaining, bound), 0, -1):
            prefix.append(part)
            extend(remaining - part, part, prefix)
            prefix.pop()

    if total < 0:
        return result
    extend(total, max_part, [])
    return result


def catalan(n):
    """
    n-ésimo número de Catalan, binomial(2n, n) / (n + 1)

    Args:
        n (int): Índice

    Returns:
        int: C(n) exacto
    """
    return int(binomial(2 * n, n)) // (n + 1)


def schur_dim(partition, n):
    """
    Dimensión de S^λ(k^n) por la fórmula de ganchos y contenidos

    Args:
        partition (Partition): Diagrama λ
        n (int): Dimensión del espacio

    Returns:
        int: Dimensión; 0 si length(λ) > n
    """
    partition = as_partition(partition)
    if partition.length > n:
        return 0
    numerator = 1
    denominator = 1
    for content, hook in zip(partition.contents(), partition.hooks()):
        numerator *= n + content
        denominator *= hook
    return numerator // denominator


def howe_exterior_check(k, a, b):
    """
    Comprueba dim Λ^k(A⊗B) = Σ_{|λ|=k} dim S^{λᵗ}(A)·dim S^λ(B)

    Args:
        k (int): Grado exterior
        a (int): dim A
        b (int): dim B

    Returns:
        bool: True si ambos lados coinciden
    """
    left = int(binomial(a * b, k))
    right = sum(schur_dim(lam.transpose(), a) * schur_dim(lam, b) for lam in partitions_bounded(k, k))
    return left == right


def gl_cohomology_poincare(n):
    """
    Polinomio de Poincaré de H(gl_n; k) = Λ(e_1, e_3, ..., e_{2n-1})

    Returns:
        list: Coeficientes en q desde el grado 0
    """
    result = [1]
    for i in range(1, n + 1):
        result = poly_mul(result, [1] + [0] * (2 * i - 2) + [1])
    return result


def as_partition(value):
    if isinstance(value, Partition):
        return value
    return Partition(tuple(value))
