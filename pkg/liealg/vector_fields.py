"""
Campos vectoriales formales: W_n, álgebras de bandera W(n_0,...,n_k) y WL(m|n)

Las álgebras nunca se materializan completas; sólo se generan las rebanadas
de peso que se piden.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from sympy.polys.domains import QQ

from exactlin import ParameterError

FAMILY_KINDS = ("W", "Flag", "WL")


@dataclass(frozen=True)
class MonomialVectorField:
    """
    Campo x^α ∂/∂x_i

    Args:
        exponent (tuple): Multi-índice α sobre las N coordenadas
        direction (int): Índice i de la derivada, empezando en 0
    """

    exponent: tuple
    direction: int

    @property
    def dimension(self):
        return len(self.exponent)

    @property
    def weight(self):
        return sum(self.exponent) - 1

    @property
    def multiweight(self):
        """Peso bajo el toro diagonal: α - e_i"""
        return tuple(a - (1 if k == self.direction else 0) for k, a in enumerate(self.exponent))

    def sort_key(self):
        return (self.weight, self.direction, self.exponent)

    def bracket(self, other):
        return bracket(self, other)

    def __str__(self):
        names = _coordinate_names(self.dimension)
        factors = []
        for name, power in zip(names, self.exponent):
            if power == 1:
                factors.append(name)
            elif power > 1:
                factors.append(f"{name}^{power}")
        coefficient = "".join(factors)
        return f"{coefficient}d{names[self.direction]}"


def _coordinate_names(n):
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{k + 1}" for k in range(n)]


def field(exponent, direction):
    return MonomialVectorField(tuple(exponent), direction)


def bracket(a, b):
    """
    Corchete [x^α∂_i, x^β∂_j] = β_i x^{α+β-e_i}∂_j - α_j x^{α+β-e_j}∂_i

    Args:
        a (MonomialVectorField): Primer campo
        b (MonomialVectorField): Segundo campo

    Returns:
        dict: Combinación dispersa {MonomialVectorField: QQ}
    """
    if a.dimension != b.dimension:
        raise ParameterError("los campos tienen distinto número de coordenadas")
    alpha, i = a.exponent, a.direction
    beta, j = b.exponent, b.direction
    result = {}
    if beta[i]:
        exponent = tuple(x + y - (1 if k == i else 0) for k, (x, y) in enumerate(zip(alpha, beta)))
        key = MonomialVectorField(exponent, j)
        result[key] = result.get(key, QQ.zero) + QQ(beta[i])
    if alpha[j]:
        exponent = tuple(x + y - (1 if k == j else 0) for k, (x, y) in enumerate(zip(alpha, beta)))
        key = MonomialVectorField(exponent, i)
        result[key] = result.get(key, QQ.zero) - QQ(alpha[j])
    return {k: v for k, v in result.items() if v}


def bracket_combination(u, v):
    """Corchete bilineal de combinaciones {elemento: QQ}"""
    result = {}
    for a, x in u.items():
        for b, y in v.items():
            for c, z in a.bracket(b).items():
                result[c] = result.get(c, QQ.zero) + x * y * z
    return {k: c for k, c in result.items() if c}


@dataclass(frozen=True)
class AlgebraFamily:
    """
    Familia de álgebras de campos vectoriales

    kind = "W" con shape (n,); "Flag" con shape (n_0, ..., n_k);
    "WL" con shape (m, n): las m primeras coordenadas forman la parte lineal.
    """

    kind: str
    shape: tuple

    def __post_init__(self):
        shape = tuple(int(s) for s in self.shape)
        if self.kind not in FAMILY_KINDS:
            raise ParameterError(f"familia desconocida: {self.kind}")
        if not shape or any(s < 1 for s in shape):
            raise ParameterError(f"tamaños de bloque inválidos: {shape}")
        if self.kind == "W" and len(shape) != 1:
            raise ParameterError("W_n se describe con un único tamaño")
        if self.kind == "WL" and len(shape) != 2:
            raise ParameterError("WL(m|n) se describe con dos tamaños (m, n)")
        object.__setattr__(self, "shape", shape)

    @classmethod
    def w(cls, n):
        return cls("W", (n,))

    @classmethod
    def flag(cls, *blocks):
        return cls("Flag", tuple(blocks))

    @classmethod
    def wl(cls, m, n):
        return cls("WL", (m, n))

    @property
    def dimension(self):
        return sum(self.shape)

    @property
    def blocks(self):
        """Rangos de coordenadas de cada bloque"""
        ranges = []
        start = 0
        for size in self.shape:
            ranges.append(range(start, start + size))
            start += size
        return ranges

    def block_of(self, coordinate):
        for index, block in enumerate(self.blocks):
            if coordinate in block:
                return index
        raise ParameterError(f"coordenada {coordinate} fuera de rango")

    def contains(self, f):
        """Regla de pertenencia de la familia"""
        if f.dimension != self.dimension:
            return False
        if self.kind == "W":
            return True
        block = self.block_of(f.direction)
        limit = self.blocks[block].stop
        if any(power for k, power in enumerate(f.exponent) if k >= limit):
            return False
        if self.kind == "WL" and block == 0 and f.weight > 0:
            return False
        return True

    def __str__(self):
        if self.kind == "W":
            return f"W_{self.shape[0]}"
        if self.kind == "WL":
            return f"WL({self.shape[0]}|{self.shape[1]})"
        return "W(" + ",".join(str(s) for s in self.shape) + ")"


def _exponents(dimension, degree):
    for combo in combinations_with_replacement(range(dimension), degree):
        exponent = [0] * dimension
        for k in combo:
            exponent[k] += 1
        yield tuple(exponent)


@lru_cache(maxsize=None)
def all_fields_at_weight(dimension, w):
    """Todos los campos monomiales de W_N de peso w, en orden fijo"""
    if w < -1:
        return ()
    fields = [MonomialVectorField(e, i) for e in _exponents(dimension, w + 1) for i in range(dimension)]
    return tuple(sorted(fields, key=MonomialVectorField.sort_key))


@lru_cache(maxsize=None)
def basis_at_weight(family, w):
    """
    Base de la rebanada de peso w de la familia

    Args:
        family (AlgebraFamily): Familia de álgebras
        w (int): Peso de Euler (>= -1)

    Returns:
        tuple: Campos monomiales de peso w que cumplen la regla de la familia
    """
    if w < -1:
        raise ParameterError(f"peso inválido {w}")
    return tuple(f for f in all_fields_at_weight(family.dimension, w) if family.contains(f))


def closure_check(family, w_max, member=None):
    """
    Comprueba que la regla de pertenencia define una subálgebra hasta el peso w_max

    Args:
        family (AlgebraFamily): Familia
        w_max (int): Peso máximo de los corchetes
        member (callable): Regla alternativa de pertenencia (por defecto family.contains)

    Returns:
        bool: True si todo corchete entre elementos cae en la familia
    """
    member = member or family.contains
    elements = [f for w in range(-1, w_max + 2) for f in all_fields_at_weight(family.dimension, w) if member(f)]
    for a in elements:
        for b in elements:
            if a.weight + b.weight > w_max:
                continue
            if any(not member(c) for c in bracket(a, b)):
                return False
    return True


def jacobi_check(elements):
    """
    Identidad de Jacobi sobre todas las ternas de la lista

    Returns:
        bool: True si [a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0 para toda terna
    """
    for a in elements:
        for b in elements:
            ab = a.bracket(b)
            for c in elements:
                total = {}
                terms = (
                    bracket_combination({a: QQ.one}, b.bracket(c)),
                    bracket_combination({b: QQ.one}, c.bracket(a)),
                    bracket_combination({c: QQ.one}, ab),
                )
                for term in terms:
                    for key, value in term.items():
                        total[key] = total.get(key, QQ.zero) + value
                if any(total.values()):
                    return False
    return True


def reductive_part(family):
    """
    Subálgebra gl canónica: x_j ∂_i con i, j en el mismo bloque

    Para W_n es gl_n, para W(n_0,...,n_k) es gl_{n_0}⊕...⊕gl_{n_k} y para
    WL(m|n) es gl_m⊕gl_n.
    """
    linear = basis_at_weight(family, 0)
    return tuple(f for f in linear if family.block_of(f.direction) == family.block_of(f.exponent.index(1)))


def sym_module_basis(n, m, w):
    """
    Base de la componente de peso w de S^m W_n

    Args:
        n (int): Número de coordenadas
        m (int): Potencia simétrica (>= 1)
        w (int): Peso total

    Returns:
        list: Tuplas ordenadas de m campos cuyos pesos suman w
    """
    if m < 1:
        raise ParameterError("la potencia simétrica debe ser >= 1")
    family = AlgebraFamily.w(n)
    max_weight = w + m
    pool = [f for weight in range(-1, max_weight + 1) for f in basis_at_weight(family, weight)]
    return weighted_multisets(pool, m, w)


def weighted_multisets(pool, count, total):
    """Multiconjuntos (tuplas no decrecientes en el orden de pool) de `count` elementos de peso total `total`"""
    result = []

    def extend(start, remaining, weight_left, prefix):
        if remaining == 0:
            if weight_left == 0:
                result.append(tuple(prefix))
            return
        for index in range(start, len(pool)):
            element = pool[index]
            if element.weight * remaining > weight_left:
                break
            prefix.append(element)
            extend(index, remaining - 1, weight_left - element.weight, prefix)
            prefix.pop()

    extend(0, count, total, [])
    return result
