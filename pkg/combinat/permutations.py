"""
Permutaciones, barajadas (shuffles) y acción punto sobre pesos enteros
"""

from dataclasses import dataclass
from itertools import combinations

from sympy import Rational

from exactlin import VerificationError

from .series import gaussian_binomial, poly_trim


@dataclass(frozen=True)
class Permutation:
    """
    Permutación ω de {1..N} dada por sus imágenes (ω(1), ..., ω(N))
    """

    images: tuple

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"no es una biyección de {{1..{len(images)}}}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, size):
        return cls(tuple(range(1, size + 1)))

    @property
    def size(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def length(self):
        """Número de inversiones"""
        images = self.images
        return sum(1 for i in range(len(images)) for j in range(i + 1, len(images)) if images[i] > images[j])

    def compose(self, other):
        """
        Producto ω₁∘ω₂ con la convención de imágenes posicionales: i ↦ ω₂(ω₁(i))

        Con esta convención la acción punto es una acción de grupo:
        dot_action(ω₁∘ω₂, λ) = dot_action(ω₁, dot_action(ω₂, λ)).
        """
        return Permutation(tuple(other(self(i)) for i in range(1, self.size + 1)))

    def inverse(self):
        images = [0] * self.size
        for i, image in enumerate(self.images, start=1):
            images[image - 1] = i
        return Permutation(tuple(images))


def shuffles(m, n):
    """
    Barajadas (m, n): permutaciones crecientes en {1..m} y en {m+1..m+n}

    Args:
        m (int): Tamaño del primer bloque
        n (int): Tamaño del segundo bloque

    Returns:
        list: Pares (Permutation, longitud); hay binomial(m+n, m)
    """
    if m < 0 or n < 0:
        raise ValueError("m y n deben ser no negativos")
    total = m + n
    result = []
    for first in combinations(range(1, total + 1), m):
        chosen = set(first)
        rest = tuple(i for i in range(1, total + 1) if i not in chosen)
        permutation = Permutation(tuple(first) + rest)
        result.append((permutation, permutation.length()))
    return result


def grassmannian_poincare(m, n):
    """
    Polinomio de Poincaré de la grassmanniana, Σ q^{2·l(ω)} sobre barajadas

    Returns:
        list: Coeficientes en q desde el grado 0

    Raises:
        VerificationError: BASIS_MISMATCH si no coincide con el binomial gaussiano en q²
    """
    coefficients = [0] * (2 * m * n + 1)
    for _, length in shuffles(m, n):
        coefficients[2 * length] += 1
    coefficients = poly_trim(coefficients)
    if coefficients != gaussian_binomial(m + n, m, step=2):
        raise VerificationError("BASIS_MISMATCH", f"barajadas de ({m},{n}) frente al binomial gaussiano")
    return coefficients


def dot_action(permutation, weight):
    """
    Acción punto ω·λ = (λ_{ω(1)} + 1 - ω(1), ..., λ_{ω(N)} + N - ω(N))

    Args:
        permutation (Permutation): ω
        weight (tuple): λ, de longitud N

    Returns:
        tuple: ω·λ
    """
    weight = tuple(weight)
    if len(weight) != permutation.size:
        raise ValueError("la longitud del peso no coincide con la permutación")
    return tuple(weight[permutation(i) - 1] + i - permutation(i) for i in range(1, permutation.size + 1))


def rho(size):
    """Semisuma de raíces positivas de gl_N, ((N-1)/2, (N-3)/2, ..., (1-N)/2)"""
    return tuple(Rational(size + 1 - 2 * j, 2) for j in range(1, size + 1))


def dot_action_via_rho(permutation, weight):
    """ω(λ + ρ) - ρ calculado con ρ semientero"""
    shift = rho(permutation.size)
    shifted = [Rational(w) + r for w, r in zip(weight, shift)]
    moved = [shifted[permutation(i) - 1] for i in range(1, permutation.size + 1)]
    result = [value - r for value, r in zip(moved, shift)]
    return tuple(int(value) for value in result)


def is_dominant(weight):
    return all(weight[i] >= weight[i + 1] for i in range(len(weight) - 1))
