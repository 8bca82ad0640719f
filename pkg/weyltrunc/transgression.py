"""
Complejos de transgresión y álgebras de Weyl truncadas por el ideal de bandera

Cada bloque gl_{n_r} aporta generadores impares c_{r,j} de grado 2j-1 y
generadores pares Ψ_{r,j} de grado 2j y peso polinomial j, con d c_{r,j} = Ψ_{r,j}.
"""

import sys
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from sympy.polys.domains import QQ

from cecomplex import CochainComplexBlock, FilteredComplexBlock, build_relative_complex
from combinat import catalan, monomial, poly_add, poly_from_dims, poly_mul, poly_pow
from exactlin import ParameterError, SparseRationalMatrix, VerificationError, column_space_rank
from liealg import AlgebraFamily, ModuleSpec


@dataclass(frozen=True)
class SuperMonomial:
    """
    Monomio c^odd · Ψ^even sobre la lista de generadores de un complejo

    Args:
        odd (tuple): Exponentes 0/1 de los generadores impares
        even (tuple): Exponentes de los generadores pares
    """

    odd: tuple
    even: tuple

    def __post_init__(self):
        if any(e not in (0, 1) for e in self.odd):
            raise ParameterError(f"exponentes impares fuera de {{0, 1}}: {self.odd}")
        if any(e < 0 for e in self.even):
            raise ParameterError(f"exponentes pares negativos: {self.even}")

    def __str__(self):
        odd = "".join(f"c{k + 1}" for k, e in enumerate(self.odd) if e)
        even = "".join(f"Ψ{k + 1}" + (f"^{e}" if e > 1 else "") for k, e in enumerate(self.even) if e)
        return odd + even or "1"


def block_generators(blocks):
    """Generadores (r, j) en orden: bloque primero, luego j = 1..n_r"""
    return [(r, j) for r, size in enumerate(blocks) for j in range(1, size + 1)]


@dataclass(frozen=True)
class FlagIdeal:
    """Ideal monomial I_{n_1,...,n_k} generado por los prefijos de peso excesivo"""

    blocks: tuple

    def __post_init__(self):
        blocks = tuple(int(b) for b in self.blocks)
        if not blocks or any(b < 1 for b in blocks):
            raise ParameterError(f"bloques inválidos: {blocks}")
        object.__setattr__(self, "blocks", blocks)

    @cached_property
    def generators(self):
        return block_generators(self.blocks)

    def contains(self, even):
        """
        Regla de prefijos ponderada

        Args:
            even (tuple): Exponentes de Ψ_{r,j} en el orden de `generators`

        Returns:
            bool: True si para algún prefijo r el peso de los bloques <= r
                supera n_1 + ... + n_r
        """
        weights = [0] * len(self.blocks)
        for (r, j), exponent in zip(self.generators, even):
            weights[r] += j * exponent
        prefix_weight = prefix_bound = 0
        for size, weight in zip(self.blocks, weights):
            prefix_weight += weight
            prefix_bound += size
            if prefix_weight > prefix_bound:
                return True
        return False


def ideal_member(monomial_, ideal):
    """Pertenencia de la parte par de un monomio al ideal de bandera"""
    even = monomial_.even if isinstance(monomial_, SuperMonomial) else tuple(monomial_)
    return ideal.contains(even)


def _even_exponents(weights, total):
    """Vectores de exponentes con Σ weights[g]·e[g] = total"""
    result = []

    def extend(index, remaining, prefix):
        if index == len(weights):
            if remaining == 0:
                result.append(tuple(prefix))
            return
        for exponent in range(remaining // weights[index] + 1):
            prefix.append(exponent)
            extend(index + 1, remaining - exponent * weights[index], prefix)
            prefix.pop()

    extend(0, total, [])
    return result


class TransgressionComplex:
    """
    Álgebra libre supercommutativa Λ[c] ⊗ k[Ψ] módulo el ideal de bandera

    Args:
        blocks (tuple): Tamaños (n_1, ..., n_k)
        truncated (bool): Si es False se usa el modelo de Weyl sin truncar
        degree_bound (int): Grado máximo; obligatorio sin truncar
    """

    def __init__(self, blocks, truncated=True, degree_bound=None):
        self.blocks = tuple(int(b) for b in blocks)
        if not self.blocks or any(b < 1 for b in self.blocks):
            raise ParameterError(f"bloques inválidos: {self.blocks}")
        self.generators = block_generators(self.blocks)
        self.weights = [j for _, j in self.generators]
        self.odd_degrees = [2 * j - 1 for _, j in self.generators]
        self.ideal = FlagIdeal(self.blocks) if truncated else None
        if self.ideal is None:
            if degree_bound is None:
                raise ParameterError("el modelo sin truncar necesita degree_bound")
            self.top = int(degree_bound)
        else:
            natural = sum(self.odd_degrees) + 2 * sum(self.blocks)
            self.top = natural if degree_bound is None else min(int(degree_bound), natural)
        self._bases = {}

    def __str__(self):
        kind = "W" if self.ideal is None else "W/I"
        return f"{kind}({'+'.join(f'gl_{b}' for b in self.blocks)})"

    def degree(self, mono):
        return sum(d for d, e in zip(self.odd_degrees, mono.odd) if e) + 2 * self.weight(mono)

    def weight(self, mono):
        return sum(w * e for w, e in zip(self.weights, mono.even))

    def survives(self, mono):
        return self.ideal is None or not self.ideal.contains(mono.even)

    def monomials(self, degree):
        """Base de monomios fuera del ideal en un grado, en orden fijo"""
        if degree in self._bases:
            return self._bases[degree]
        size = len(self.generators)
        basis = []
        for count in range(size + 1):
            for chosen in combinations(range(size), count):
                odd = tuple(1 if g in chosen else 0 for g in range(size))
                rest = degree - sum(self.odd_degrees[g] for g in chosen)
                if rest < 0 or rest % 2:
                    continue
                for even in _even_exponents(self.weights, rest // 2):
                    mono = SuperMonomial(odd, even)
                    if self.survives(mono):
                        basis.append(mono)
        basis.sort(key=lambda m: (m.odd, m.even), reverse=True)
        self._bases[degree] = basis
        return basis

    def differential(self, mono):
        """
        d(c_{g_1} ... c_{g_s} Ψ^e) = Σ_t (-1)^t c_{g_1} ... ĉ_{g_t} ... c_{g_s} Ψ_{g_t} Ψ^e

        Returns:
            dict: {SuperMonomial: QQ} sin los términos del ideal
        """
        result = {}
        seen = 0
        for g, e in enumerate(mono.odd):
            if not e:
                continue
            odd = mono.odd[:g] + (0,) + mono.odd[g + 1:]
            even = mono.even[:g] + (mono.even[g] + 1,) + mono.even[g + 1:]
            target = SuperMonomial(odd, even)
            if self.survives(target):
                result[target] = QQ.one if seen % 2 == 0 else -QQ.one
            seen += 1
        return result

    @cached_property
    def block(self):
        """El complejo como CochainComplexBlock en los grados 0..top"""
        bases = [self.monomials(d) for d in range(self.top + 2)]
        differentials = []
        for d in range(self.top + 1):
            index = {m: i for i, m in enumerate(bases[d + 1])}
            entries = []
            for col, mono in enumerate(bases[d]):
                for target, value in self.differential(mono).items():
                    entries.append((index[target], col, value))
            differentials.append(SparseRationalMatrix(len(bases[d + 1]), len(bases[d]), entries))
        block = CochainComplexBlock(str(self), bases, differentials)
        block.check_d_squared()
        return block

    def cohomology(self):
        return self.block.cohomology()


def gl1_flag_complex(N):
    """k[ζ_1..ζ_N; ξ_1..ξ_N]/I_{1,...,1} con d = Σ ξ_i ∂/∂ζ_i"""
    if N < 1:
        raise ParameterError("N debe ser >= 1")
    return TransgressionComplex((1,) * N)


def predicted_catalan_basis(N):
    """
    Monomios ζ_{α_1}...ζ_{α_s} ξ_1^{i_1}...ξ_{α_s}^{i_{α_s}} con α_1 < ... < α_s,
    sumas parciales i_1 + ... + i_k <= k y total α_s; más la constante 1

    Returns:
        list: SuperMonomial sobre los generadores de gl1_flag_complex(N)
    """
    predicted = [SuperMonomial((0,) * N, (0,) * N)]
    for top_index in range(1, N + 1):
        for exponents in _ballot_sequences(top_index):
            even = exponents + (0,) * (N - top_index)
            for count in range(top_index):
                for lower in combinations(range(1, top_index), count):
                    chosen = set(lower) | {top_index}
                    odd = tuple(1 if k in chosen else 0 for k in range(1, N + 1))
                    predicted.append(SuperMonomial(odd, even))
    return predicted


def _ballot_sequences(length):
    """Exponentes (i_1..i_length) con prefijos <= k y total = length"""
    result = []

    def extend(position, total, prefix):
        if position == length:
            if total == length:
                result.append(tuple(prefix))
            return
        for value in range(position + 1 - total + 1):
            prefix.append(value)
            extend(position + 1, total + value, prefix)
            prefix.pop()

    extend(0, 0, [])
    return result


def gl1_flag_cohomology(N):
    """
    Cohomología de gl1_flag_complex(N) junto con la base de monomios predicha

    Returns:
        tuple: ({grado: dimensión}, lista de SuperMonomial)

    Raises:
        VerificationError: BASIS_MISMATCH si las dimensiones no coinciden con
            la base predicha o si los monomios predichos no son independientes
            en cohomología
    """
    complex_ = gl1_flag_complex(N)
    dims = complex_.cohomology()
    predicted = predicted_catalan_basis(N)

    by_degree = {}
    for mono in predicted:
        by_degree.setdefault(complex_.degree(mono), []).append(mono)
    counts = {d: len(v) for d, v in by_degree.items()}
    nonzero = {d: v for d, v in dims.items() if v}
    if counts != nonzero:
        raise VerificationError("BASIS_MISMATCH", f"N={N}: calculado {nonzero}, predicho {counts}")

    block = complex_.block
    for degree, monos in by_degree.items():
        index = {m: i for i, m in enumerate(block.bases[degree])}
        vectors = [{index[m]: QQ.one} for m in monos]
        if any(block.images(degree)[index[m]] for m in monos):
            raise VerificationError("BASIS_MISMATCH", f"N={N}: un monomio predicho no es cociclo en grado {degree}")
        boundaries = block.images(degree - 1) if degree else []
        dimension = block.ambient_dimension(degree)
        gained = column_space_rank(boundaries + vectors, dimension) - column_space_rank(boundaries, dimension)
        if gained != len(monos):
            raise VerificationError("BASIS_MISMATCH", f"N={N}: los monomios de grado {degree} no son independientes")
    return dims, predicted


def transgression_cohomology(blocks):
    return TransgressionComplex(blocks).cohomology()


def poincare_formula(N):
    """1 + Σ_{n=1..N} q^{2n+1} (1+q)^{n-1} C(n)"""
    if N < 1:
        raise ParameterError("N debe ser >= 1")
    result = [1]
    for n in range(1, N + 1):
        term = poly_mul(monomial(2 * n + 1, catalan(n)), poly_pow([1, 1], n - 1))
        result = poly_add(result, term)
    return result


def relative_flag_poincare(blocks):
    """
    Σ q^{2·peso} sobre los Ψ-monomios que sobreviven al ideal

    Returns:
        list: Coeficientes en q
    """
    ideal = FlagIdeal(tuple(blocks))
    weights = [j for _, j in ideal.generators]
    result = [0]
    for weight in range(sum(ideal.blocks) + 1):
        survivors = sum(1 for even in _even_exponents(weights, weight) if not ideal.contains(even))
        if survivors:
            result = poly_add(result, monomial(2 * weight, survivors))
    return result


def truncated_polynomial_poincare(n, top_degree):
    """Serie de k^{<= top_degree}[Ψ_2, ..., Ψ_{2n}] con deg Ψ_{2i} = 2i"""
    dims = {}
    for weight in range(top_degree // 2 + 1):
        count = len(_even_exponents(list(range(1, n + 1)), weight))
        if count:
            dims[2 * weight] = count
    return poly_from_dims(dims)


def weyl_filtered_complex(blocks, degree_bound):
    """
    Modelo de Weyl sin truncar con la filtración estándar (peso polinomial)

    Returns:
        FilteredComplexBlock: Para hochschild_serre_pages
    """
    complex_ = TransgressionComplex(blocks, truncated=False, degree_bound=degree_bound)
    block = complex_.block
    ambient_levels = [[complex_.weight(m) for m in basis] for basis in block.bases]
    return FilteredComplexBlock(block, ambient_levels[: block.top + 1], ambient_levels)


def truncated_weyl_chain_dims(n, m, p_max):
    """
    Dimensiones de W(W_n, gl_n)/F^{2m+1} en peso cero, grado a grado

    En grado d suma las cocadenas relativas C^{d-2s}(W_n, gl_n; S^s W_n*)
    para s = 0..m.

    Returns:
        dict: {grado: dimensión} para 0..p_max
    """
    family = AlgebraFamily.w(n)
    dims = {d: 0 for d in range(p_max + 1)}
    for s in range(m + 1):
        if 2 * s > p_max:
            break
        coeffs = ModuleSpec.sym(s) if s else ModuleSpec.trivial()
        print(f"[INFO] Cadenas relativas de W_{n} con S^{s}: grados hasta {p_max - 2 * s}", file=sys.stderr)
        block = build_relative_complex(family, None, coeffs, p_max - 2 * s)
        for p in range(p_max - 2 * s + 1):
            dims[p + 2 * s] += block.dimension(p)
    return dims
