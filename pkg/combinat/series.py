"""
Series de Poincaré en q

Hacia fuera se usan listas de coeficientes enteros (índice = grado), que es
lo que se serializa en JSON; la aritmética se hace con sympy.Poly sobre ZZ.
"""

from sympy import Poly, symbols
from sympy.polys.domains import ZZ

q = symbols("q")


def to_poly(coefficients):
    """[c_0, c_1, ...] -> Poly c_0 + c_1 q + ..."""
    return Poly.from_list(list(reversed(list(coefficients))) or [0], q, domain=ZZ)


def from_poly(poly):
    return [int(c) for c in reversed(poly.all_coeffs())]


def poly_trim(coefficients):
    return from_poly(to_poly(coefficients))


def poly_add(a, b):
    return from_poly(to_poly(a) + to_poly(b))


def poly_mul(a, b):
    return from_poly(to_poly(a) * to_poly(b))


def poly_pow(a, exponent):
    return from_poly(to_poly(a) ** exponent)


def monomial(degree, coefficient=1):
    return [0] * degree + [coefficient]


def gaussian_binomial(total, k, step=1):
    """
    Binomial gaussiano [total, k] en la variable q^step

    Se calcula como cociente exacto de productos de (1 - q^{step·i}).

    Returns:
        list: Coeficientes en q desde el grado 0
    """
    numerator = Poly(1, q, domain=ZZ)
    denominator = Poly(1, q, domain=ZZ)
    for i in range(k):
        numerator *= Poly(1 - q ** (step * (total - i)), q, domain=ZZ)
        denominator *= Poly(1 - q ** (step * (i + 1)), q, domain=ZZ)
    return from_poly(numerator.exquo(denominator))


def poly_from_dims(dims):
    """
    Convierte {grado: dimensión} en lista de coeficientes

    Args:
        dims (dict): Dimensiones por grado

    Returns:
        list: Coeficientes desde el grado 0
    """
    if not dims:
        return [0]
    result = [0] * (max(int(d) for d in dims) + 1)
    for degree, dim in dims.items():
        result[int(degree)] += dim
    return poly_trim(result)


def dims_from_poly(coefficients):
    return {degree: c for degree, c in enumerate(coefficients) if c}


def is_palindromic(coefficients):
    coefficients = poly_trim(coefficients)
    return coefficients == coefficients[::-1]
