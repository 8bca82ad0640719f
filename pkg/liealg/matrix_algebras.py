"""
Álgebras de matrices: gl_N, la parabólica b ⊂ gl_{m+n}, el Levi gl_m⊕gl_n y n⁺
"""

from dataclasses import dataclass
from functools import cached_property

from sympy.polys.domains import QQ

@dataclass(frozen=True)
class MatrixUnit:
    """Unidad matricial E_ij (índices desde 0)"""

    row: int
    col: int

    weight = 0

    def sort_key(self):
        return (0, self.row, self.col)

    def torus_weight(self, size):
        return tuple((1 if k == self.row else 0) - (1 if k == self.col else 0) for k in range(size))

    def bracket(self, other):
        """[E_ij, E_kl] = δ_jk E_il - δ_li E_kj"""
        result = {}
        if self.col == other.row:
            key = MatrixUnit(self.row, other.col)
            result[key] = result.get(key, QQ.zero) + QQ.one
        if other.col == self.row:
            key = MatrixUnit(other.row, self.col)
            result[key] = result.get(key, QQ.zero) - QQ.one
        return {k: v for k, v in result.items() if v}

    def __str__(self):
        return f"E{self.row + 1}{self.col + 1}"

@dataclass(frozen=True)
class MatrixLieAlgebra:
    """
    Subálgebra de gl_size generada por unidades matriciales

    Args:
        size (int): N
        units (frozenset): Unidades E_ij que forman la base
        name (str): Nombre para mostrar
    """

    size: int
    units: frozenset
    name: str

    @cached_property
    def basis(self):
        return tuple(sorted(self.units, key=MatrixUnit.sort_key))

    def contains(self, unit):
        return unit in self.units

    def __str__(self):
        return self.name

def gl(size):
    units = frozenset(MatrixUnit(i, j) for i in range(size) for j in range(size))
    return MatrixLieAlgebra(size, units, f"gl_{size}")

def levi(m, n):
    """gl_m ⊕ gl_n como bloques diagonales de gl_{m+n}"""
    units = {MatrixUnit(i, j) for i in range(m) for j in range(m)}
    units |= {MatrixUnit(m + i, m + j) for i in range(n) for j in range(n)}
    return MatrixLieAlgebra(m + n, frozenset(units), f"gl_{m}+gl_{n}")

def parabolic(m, n):
    """
    b = gl_m ⊕ gl_n ⊕ V*⊗U: bloques diagonales más el bloque inferior izquierdo

    V son las m primeras coordenadas y U las n últimas; U es un b-submódulo de V⊕U.
    """
    units = set(levi(m, n).units)
    units |= {MatrixUnit(m + i, j) for i in range(n) for j in range(m)}
    return MatrixLieAlgebra(m + n, frozenset(units), f"b({m},{n})")

def nilpotent_plus(m, n):
    """n⁺: bloque superior derecho, complemento de b en gl_{m+n}"""
    units = frozenset(MatrixUnit(i, m + j) for i in range(m) for j in range(n))
    return MatrixLieAlgebra(m + n, units, f"n+({m},{n})")

def closure_ok(algebra):
    """Comprueba que las unidades de la base son cerradas bajo el corchete"""
    for a in algebra.basis:
        for b in algebra.basis:
            if any(c not in algebra.units for c in a.bracket(b)):
                return False
    return True
