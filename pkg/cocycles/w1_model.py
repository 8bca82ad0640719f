"""
Modelo polinomial de las cocadenas de W_1 con coeficientes en S^m W_1*

Una cocadena de grado p se identifica con un polinomio en y_1..y_p, z_1..z_m,
antisimétrico en las y y simétrico en las z. El monomio y^r z^s corresponde
al funcional que vale r! s! a_r b_s sobre los campos Σ a_r x^r ∂.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from sympy import Poly, Rational, expand, factorial, symbols

from cecomplex import CochainBasisElement, CochainComplexBlock
from combinat import Permutation
from exactlin import ParameterError, SparseRationalMatrix, VerificationError, column_space_rank, to_rational
from liealg import field


def y_symbols(count):
    return symbols(f"y1:{count + 1}")


def z_symbols(count):
    return symbols(f"z1:{count + 1}")


@dataclass(frozen=True)
class PolyChain:
    """
    Cocadena de C^p(W_1; S^m W_1*) como polinomio exacto

    Args:
        p (int): Número de variables antisimétricas y
        m (int): Número de variables simétricas z
        expr: Expresión de sympy ya expandida
    """

    p: int
    m: int
    expr: object

    @classmethod
    def from_expr(cls, p, m, expr):
        return cls(p, m, expand(expr))

    @property
    def gens(self):
        return y_symbols(self.p) + z_symbols(self.m)

    def is_zero(self):
        return self.expr == 0

    def coefficients(self):
        """{(exponentes y, exponentes z): QQ}"""
        if self.is_zero():
            return {}
        if not self.gens:
            return {((), ()): to_rational(self.expr)}
        terms = Poly(self.expr, *self.gens).as_dict()
        return {
            (exps[: self.p], exps[self.p:]): to_rational(value) for exps, value in terms.items() if value
        }

    def coefficient(self, y_exponents, z_exponents):
        return self.coefficients().get((tuple(y_exponents), tuple(z_exponents)), to_rational(0))

    def check_symmetry(self):
        """
        Antisimetría en las y y simetría en las z, comprobadas por sustitución

        Returns:
            bool: True si ambas se cumplen para todas las transposiciones adyacentes
        """
        ys, zs = y_symbols(self.p), z_symbols(self.m)
        for k in range(self.p - 1):
            swapped = self.expr.subs({ys[k]: ys[k + 1], ys[k + 1]: ys[k]}, simultaneous=True)
            if expand(swapped + self.expr) != 0:
                return False
        for k in range(self.m - 1):
            swapped = self.expr.subs({zs[k]: zs[k + 1], zs[k + 1]: zs[k]}, simultaneous=True)
            if expand(swapped - self.expr) != 0:
                return False
        return True

    def __add__(self, other):
        return PolyChain.from_expr(self.p, self.m, self.expr + other.expr)

    def scale(self, factor):
        return PolyChain.from_expr(self.p, self.m, factor * self.expr)


def w1_differential(chain):
    """
    Diferencial de Chevalley–Eilenberg en el modelo polinomial

    dP(y_1..y_{p+1}; z) = Σ_{s<t} (-1)^{s+t-1} (y_s - y_t) P(y_s + y_t, ..., ŷ_s, ..., ŷ_t, ...; z)
                        + Σ_{s,t} (-1)^{s+1} (y_s - z_t) P(..., ŷ_s, ...; y_s + z_t, ..., ẑ_t, ...)

    El signo de la segunda suma es (-1)^{s+1}; con (-1)^s el cuadrado no se anula.

    Args:
        chain (PolyChain): Cocadena de grado p

    Returns:
        PolyChain: Cocadena de grado p + 1
    """
    p, m = chain.p, chain.m
    old_y, zs = y_symbols(p), z_symbols(m)
    ys = y_symbols(p + 1)
    total = 0
    for s in range(p + 1):
        for t in range(s + 1, p + 1):
            args = [ys[s] + ys[t]] + [ys[k] for k in range(p + 1) if k not in (s, t)]
            mapping = dict(zip(old_y, args))
            sign = 1 if (s + t) % 2 else -1
            total += sign * (ys[s] - ys[t]) * chain.expr.subs(mapping, simultaneous=True)
    for s in range(p + 1):
        y_args = [ys[k] for k in range(p + 1) if k != s]
        for t in range(m):
            z_args = [ys[s] + zs[t]] + [zs[k] for k in range(m) if k != t]
            mapping = dict(zip(old_y, y_args))
            mapping.update(zip(zs, z_args))
            sign = 1 if s % 2 == 0 else -1
            total += sign * (ys[s] - zs[t]) * chain.expr.subs(mapping, simultaneous=True)
    return PolyChain.from_expr(p + 1, m, total)


def _product(values):
    result = 1
    for v in values:
        result *= v
    return result


def a_cocycles(m):
    """
    a_{2m} = (y_1² - y_2²) z_1...z_m y a_{3m} = (y_1 - y_2)(y_2 - y_3)(y_3 - y_1) z_1...z_m

    Se comprueba que ambos son cociclos que no están en la imagen del diferencial.

    Raises:
        VerificationError: COCYCLE_VIOLATED si alguna comprobación falla
    """
    if m < 1:
        raise ParameterError("a_cocycles necesita m >= 1")
    ys, zs = y_symbols(3), z_symbols(m)
    z_product = _product(zs)
    a2 = PolyChain.from_expr(2, m, (ys[0] ** 2 - ys[1] ** 2) * z_product)
    a3 = PolyChain.from_expr(3, m, (ys[0] - ys[1]) * (ys[1] - ys[2]) * (ys[2] - ys[0]) * z_product)
    for name, chain in (("a2", a2), ("a3", a3)):
        if not w1_differential(chain).is_zero():
            raise VerificationError("COCYCLE_VIOLATED", f"d({name}) != 0 para m={m}")
        if is_exact(chain):
            raise VerificationError("COCYCLE_VIOLATED", f"{name} es exacto para m={m}")
    return a2, a3


@lru_cache(maxsize=None)
def w1_chain_basis(p, m):
    """
    Base del espacio de peso cero: polinomios homogéneos de grado p + m

    Cada clave (r, s) tiene r estrictamente decreciente y s no creciente; el
    polinomio es la antisimetrización de y^r por la simétrica monomial en z^s.

    Returns:
        tuple: Claves (r, s) en orden fijo
    """
    degree = p + m
    keys = []
    for r in combinations(range(degree, -1, -1), p):
        rest = degree - sum(r)
        if rest < 0:
            continue
        for s in _bounded_parts(rest, m):
            keys.append((tuple(r), s))
    return tuple(keys)


def _bounded_parts(total, count):
    """Tuplas no crecientes de `count` enteros >= 0 con suma `total`"""
    result = []

    def extend(remaining, slots, bound, prefix):
        if slots == 0:
            if remaining == 0:
                result.append(tuple(prefix))
            return
        for value in range(min(remaining, bound), -1, -1):
            prefix.append(value)
            extend(remaining - value, slots - 1, value, prefix)
            prefix.pop()

    extend(total, count, total, [])
    return result


def basis_chain(p, m, key):
    """Polinomio de la base asociado a la clave (r, s)"""
    r, s = key
    ys, zs = y_symbols(p), z_symbols(m)
    total = 0
    for perm in permutations(range(p)):
        sign = _permutation_sign(perm)
        total += sign * _product(ys[perm[k]] ** r[k] for k in range(p))
    symmetric = sum(
        _product(zs[k] ** exps[k] for k in range(m)) for exps in set(permutations(s))
    ) if m else 1
    return PolyChain.from_expr(p, m, total * symmetric)


def _permutation_sign(perm):
    return -1 if Permutation(tuple(k + 1 for k in perm)).length() % 2 else 1


def chain_coordinates(chain):
    """Coordenadas de un PolyChain en w1_chain_basis(p, m)"""
    coefficients = chain.coefficients()
    result = {}
    for position, (r, s) in enumerate(w1_chain_basis(chain.p, chain.m)):
        value = coefficients.get((r, s))
        if value:
            result[position] = value
    return result


def w1_model_block(m, p_max):
    """El modelo polinomial como CochainComplexBlock en los grados 0..p_max"""
    bases = [w1_chain_basis(p, m) for p in range(p_max + 2)]
    differentials = []
    for p in range(p_max + 1):
        columns = [chain_coordinates(w1_differential(basis_chain(p, m, key))) for key in bases[p]]
        differentials.append(SparseRationalMatrix.from_columns(columns, len(bases[p + 1])))
    block = CochainComplexBlock(f"modelo W_1; S^{m}", bases, differentials)
    block.check_d_squared()
    return block


def w1_model_cohomology(m, p_max):
    return w1_model_block(m, p_max).cohomology()


def is_exact(chain):
    """
    Decide si el cociclo está en la imagen del diferencial del espacio de peso cero

    Returns:
        bool: True si la clase es nula
    """
    previous = [
        chain_coordinates(w1_differential(basis_chain(chain.p - 1, chain.m, key)))
        for key in w1_chain_basis(chain.p - 1, chain.m)
    ] if chain.p else []
    dimension = len(w1_chain_basis(chain.p, chain.m))
    target = chain_coordinates(chain)
    if not target:
        return True
    return column_space_rank(previous + [target], dimension) == column_space_rank(previous, dimension)


def _field(r):
    return field((r,), 0)


def cochain_from_polychain(chain):
    """
    Valores del funcional asociado sobre la base de cadenas de peso cero

    Returns:
        dict: {CochainBasisElement: QQ}
    """
    values = {}
    for (r, s), coefficient in chain.coefficients().items():
        if len(set(r)) != len(r) or list(r) != sorted(r) or list(s) != sorted(s):
            continue
        weight = sum(r) + sum(s) - chain.p - chain.m
        if weight:
            continue
        element = CochainBasisElement(tuple(_field(k) for k in r), tuple(_field(k) for k in s))
        scale = _product(factorial(k) for k in r) * _product(factorial(k) for k in s)
        values[element] = coefficient * to_rational(scale)
    return values


def polychain_from_cochain(block, degree, vector):
    """
    Polinomio asociado a una cocadena de un bloque de W_1

    Args:
        block (CochainComplexBlock): Bloque de build_absolute_complex(W_1, S^m)
        degree (int): Grado p
        vector (dict): {índice: QQ} sobre block.bases[degree]

    Returns:
        PolyChain: Polinomio antisimétrico en y y simétrico en z
    """
    basis = block.bases[degree]
    m = len(basis[0].module) if basis else 0
    ys, zs = y_symbols(degree), z_symbols(m)
    total = 0
    for position, value in vector.items():
        element = basis[position]
        r = [x.exponent[0] for x in element.exterior]
        s = [w.exponent[0] for w in element.module]
        scale = _product(factorial(k) for k in r) * _product(factorial(k) for k in s)
        antisym = 0
        for perm in permutations(range(degree)):
            antisym += _permutation_sign(perm) * _product(ys[perm[k]] ** r[k] for k in range(degree))
        sym = sum(_product(zs[k] ** exps[k] for k in range(m)) for exps in set(permutations(s))) if m else 1
        total += _as_sympy(value) * antisym * sym / scale
    return PolyChain.from_expr(degree, m, total)


def _as_sympy(value):
    return Rational(int(value.numerator), int(value.denominator))
