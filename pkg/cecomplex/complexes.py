"""
Complejos de Chevalley–Eilenberg en peso cero: absolutos, relativos y de pares finitos
"""

from dataclasses import dataclass, field
from typing import Optional

from sympy.polys.domains import QQ

from combinat import poly_from_dims
from exactlin import AlgebraError, ParameterError, column_space_rank, kernel_basis, rank
from liealg import ModuleSpec, basis_at_weight
from liealg import reductive_part as canonical_reductive_part

from .chains import (
    DualModuleCoefficients,
    SymmetricCoefficients,
    TrivialCoefficients,
    act_on_chain,
    action_matrix,
    boundary_matrix,
    finite_chain_basis,
    weight_zero_chain_basis,
)

SECTORS = ("euler", "torus")


@dataclass
class CochainComplexBlock:
    """
    Complejo de cocadenas finito en los grados 0..top

    Args:
        description (str): Texto para mostrar
        bases (list): bases[p] = etiquetas de la base ambiente de C^p, p = 0..top+1
        differentials (list): differentials[p] = D_p: C^p -> C^{p+1}, p = 0..top
        subspaces (list): Para complejos relativos, subspaces[p] = vectores
            dispersos que generan el subespacio de cocadenas relativas
    """

    description: str
    bases: list
    differentials: list
    subspaces: Optional[list] = None
    _images: dict = field(default_factory=dict, repr=False)
    _dims: Optional[dict] = field(default=None, repr=False)

    @property
    def top(self):
        return len(self.differentials) - 1

    @property
    def is_relative(self):
        return self.subspaces is not None

    def ambient_dimension(self, p):
        return len(self.bases[p]) if 0 <= p < len(self.bases) else 0

    def dimension(self, p):
        if not self.is_relative:
            return self.ambient_dimension(p)
        return len(self.subspaces[p])

    def vectors(self, p):
        if not self.is_relative:
            return [{i: QQ.one} for i in range(self.ambient_dimension(p))]
        return self.subspaces[p]

    def images(self, p):
        """D_p aplicado a cada vector de la base de grado p"""
        if p not in self._images:
            differential = self.differentials[p]
            self._images[p] = [differential.apply(v) for v in self.vectors(p)]
        return self._images[p]

    def check_d_squared(self):
        """
        Comprueba D_{p+1} ∘ D_p = 0 en todos los grados

        Raises:
            AlgebraError: D_SQUARED_NONZERO si falla en algún grado
        """
        for p in range(self.top):
            if not self.is_relative:
                nonzero = not self.differentials[p + 1].matmul(self.differentials[p]).is_zero()
            else:
                after = self.differentials[p + 1]
                nonzero = any(after.apply(image) for image in self.images(p))
            if nonzero:
                raise AlgebraError("D_SQUARED_NONZERO", f"{self.description}: d∘d != 0 en el grado {p}")
        return True

    def differential_rank(self, p):
        if p < 0 or p > self.top:
            return 0
        if not self.is_relative:
            return rank(self.differentials[p])
        return column_space_rank(self.images(p), self.ambient_dimension(p + 1))

    def cohomology(self):
        """
        Dimensiones de la cohomología

        Returns:
            dict: {grado: dimensión} para los grados 0..top
        """
        if self._dims is None:
            ranks = [self.differential_rank(p) for p in range(self.top + 1)]
            dims = {}
            for p in range(self.top + 1):
                dims[p] = self.dimension(p) - ranks[p] - (ranks[p - 1] if p else 0)
                if dims[p] < 0:
                    raise AlgebraError("COMPOSITION_NOT_ZERO", f"{self.description}: dimensión negativa en {p}")
            self._dims = dims
        return dict(self._dims)

    def poincare(self):
        return poly_from_dims(self.cohomology())

    def chain_dimensions(self):
        return {p: self.dimension(p) for p in range(self.top + 1)}


def cohomology(block):
    return block.cohomology()


def poincare(block):
    return block.poincare()


def support(dims):
    """Sólo los grados con dimensión no nula"""
    return {p: d for p, d in sorted(dims.items()) if d}


def _coefficients(coeffs):
    coeffs = coeffs or ModuleSpec.trivial()
    if coeffs.kind == "trivial":
        return TrivialCoefficients()
    return SymmetricCoefficients(coeffs.power)


def _window(family, degree, power, excluded=frozenset()):
    """Campos de la familia con peso en [-1, min(p, N) + m]"""
    bound = min(degree, family.dimension) + power
    pool = [f for w in range(-1, bound + 1) for f in basis_at_weight(family, w)]
    return [f for f in pool if f not in excluded], pool


def _assemble(bases, coefficients, excluded, top):
    indexes = [{element: i for i, element in enumerate(basis)} for basis in bases]
    differentials = [
        boundary_matrix(bases[p + 1], indexes[p], coefficients, excluded).transpose()
        for p in range(top + 1)
    ]
    return indexes, differentials


def invariant_subspace(basis, index, generators, coefficients, excluded=frozenset(), levels=None, sources=None):
    """
    Cocadenas anuladas por la acción de los generadores

    Se resuelve el sistema A_h^T c = 0 para todos los generadores h. Si se
    dan niveles, se resuelve por separado en cada nivel para que cada vector
    de la base sea homogéneo.

    Args:
        basis (list): Base ambiente donde vive la cocadena
        index (dict): Posición de cada elemento de `basis`
        generators (list): Generadores de la subálgebra
        coefficients: Modelo de coeficientes de las cadenas
        excluded (frozenset): Ranuras exteriores prohibidas
        levels (list): Nivel de cada elemento de `basis` (opcional)
        sources (callable): h -> cadenas de partida de la acción de h; por
            defecto la propia base

    Returns:
        tuple: (vectores dispersos, nivel de cada vector)
    """
    if levels is None:
        levels = [0] * len(basis)
    groups = {}
    for i, level in enumerate(levels):
        groups.setdefault(level, []).append(i)

    if not generators:
        order = [i for level in sorted(groups) for i in groups[level]]
        return [{i: QQ.one} for i in order], [levels[i] for i in order]

    transposes = []
    for h in generators:
        source = sources(h) if sources else basis
        if source:
            transposes.append(action_matrix(h, source, index, coefficients, excluded).transpose())

    vectors, vector_levels = [], []
    for level in sorted(groups):
        members = groups[level]
        stacked = None
        for matrix in transposes:
            part = matrix.select_columns(members)
            if sources is None:
                part = part.select_rows(members)
            stacked = part if stacked is None else stacked.vstack(part)
        if stacked is None:
            solutions = [{k: QQ.one} for k in range(len(members))]
        else:
            solutions = kernel_basis(stacked)
        for solution in solutions:
            vectors.append({members[k]: value for k, value in solution.items()})
            vector_levels.append(level)
    return vectors, vector_levels


def build_absolute_complex(family, coeffs=None, p_max=1, sector="euler"):
    """
    Subcomplejo de peso cero de C(g; S^m g*) en los grados 0..p_max

    Args:
        family (AlgebraFamily): W_n, bandera o WL
        coeffs (ModuleSpec): Coeficientes (trivial por defecto)
        p_max (int): Grado máximo
        sector (str): "euler" (peso total cero) o "torus" (multipeso cero)

    Returns:
        CochainComplexBlock: Complejo con d² = 0 comprobado
    """
    if p_max < 0:
        raise ParameterError(f"p_max debe ser >= 0, se recibió {p_max}")
    if sector not in SECTORS:
        raise ParameterError(f"sector desconocido: {sector}")
    coeffs = coeffs or ModuleSpec.trivial()
    coefficients = _coefficients(coeffs)
    torus = (0,) * family.dimension if sector == "torus" else None

    bases = []
    for p in range(p_max + 2):
        exterior_pool, module_pool = _window(family, p, coeffs.power)
        bases.append(weight_zero_chain_basis(exterior_pool, module_pool, p, coeffs.power, torus))

    _, differentials = _assemble(bases, coefficients, frozenset(), p_max)
    block = CochainComplexBlock(f"H({family}; {coeffs})", bases, differentials)
    block.check_d_squared()
    return block


def _resolve_reductive_part(family, reductive_part):
    canonical = canonical_reductive_part(family)
    if reductive_part is None or reductive_part == "gl":
        return canonical
    if set(reductive_part) != set(canonical):
        raise ParameterError(f"la subálgebra pedida no es la parte gl canónica de {family}")
    return canonical


def _off_diagonal(h):
    return [f for f in h if f.exponent.index(1) != f.direction]


def _shifted_sources(family, coeffs, degree, excluded):
    """Cadenas de multipeso -mw(h): las que h lleva al sector de multipeso cero"""
    exterior_pool, module_pool = _window(family, degree, coeffs.power, excluded)
    cache = {}

    def sources(h):
        target = tuple(-w for w in h.multiweight)
        if target not in cache:
            cache[target] = weight_zero_chain_basis(exterior_pool, module_pool, degree, coeffs.power, target)
        return cache[target]

    return sources


def build_relative_complex(family, reductive_part=None, coeffs=None, p_max=1):
    """
    Complejo relativo C(g, h; S^m g*) en peso cero

    Las ranuras exteriores evitan h y la invariancia bajo h se impone
    resolviendo el sistema lineal de equivariancia. El toro diagonal está en
    h, así que sólo se generan cadenas de multipeso cero; para cada generador
    h fuera de la diagonal se toman como partida las cadenas de multipeso
    -mw(h), que son las que h lleva al sector cero.

    Args:
        family (AlgebraFamily): Familia de campos vectoriales
        reductive_part: None o "gl" para la parte gl canónica de la familia
        coeffs (ModuleSpec): Coeficientes
        p_max (int): Grado máximo

    Returns:
        CochainComplexBlock: Complejo relativo con d² = 0 comprobado
    """
    if p_max < 0:
        raise ParameterError(f"p_max debe ser >= 0, se recibió {p_max}")
    coeffs = coeffs or ModuleSpec.trivial()
    coefficients = _coefficients(coeffs)
    h = _resolve_reductive_part(family, reductive_part)
    excluded = frozenset(h)
    generators = _off_diagonal(h)

    bases = []
    for p in range(p_max + 2):
        exterior_pool, module_pool = _window(family, p, coeffs.power, excluded)
        bases.append(
            weight_zero_chain_basis(exterior_pool, module_pool, p, coeffs.power, (0,) * family.dimension)
        )

    description = f"H({family}, {_gl_name(family)}; {coeffs})"
    indexes, differentials = _assemble(bases, coefficients, excluded, p_max)
    subspaces = []
    for p in range(p_max + 1):
        sources = _shifted_sources(family, coeffs, p, excluded)
        vectors, _ = invariant_subspace(
            bases[p], indexes[p], generators, coefficients, excluded, sources=sources
        )
        subspaces.append(vectors)
    block = CochainComplexBlock(description, bases, differentials, subspaces)
    block.check_d_squared()
    return block


def relative_invariance_residual(family, coeffs, degree, values):
    """
    Comprueba que una cocadena (funcional sobre cadenas) es relativa

    Args:
        family (AlgebraFamily): Familia
        coeffs (ModuleSpec): Coeficientes
        degree (int): Grado de la cocadena
        values (dict): {CochainBasisElement: QQ}

    Returns:
        dict: {(generador, cadena): residuo} no nulos; vacío si la cocadena se
            anula sobre gl y es invariante bajo todos sus generadores
    """
    coeffs = coeffs or ModuleSpec.trivial()
    coefficients = _coefficients(coeffs)
    h = canonical_reductive_part(family)
    excluded = frozenset(h)
    residual = {}
    for element, value in values.items():
        if value and any(x in excluded for x in element.exterior):
            residual[(None, element)] = value
    pool, module_pool = _window(family, degree, coeffs.power)
    for generator in h:
        target = tuple(-w for w in generator.multiweight)
        for source in weight_zero_chain_basis(pool, module_pool, degree, coeffs.power, target):
            if any(x in excluded for x in source.exterior):
                continue
            total = QQ.zero
            for image, coefficient in act_on_chain(generator, source, coefficients, excluded).items():
                total += coefficient * values.get(image, QQ.zero)
            if total:
                residual[(generator, source)] = total
    return residual


def _gl_name(family):
    return "+".join(f"gl_{s}" for s in family.shape)


def _finite_coefficients(g, module):
    if module is None:
        return TrivialCoefficients()
    module.validate(g.basis)
    return DualModuleCoefficients(module)


def finite_relative_complex(g, h, module=None, filtration_subalgebra=None):
    """
    Complejo relativo C(g, h; M) de un par de álgebras de matrices

    Args:
        g (MatrixLieAlgebra): Álgebra (gl_{m+n} o b)
        h (MatrixLieAlgebra): Subálgebra reductiva contenida en g
        module (ExplicitModule): Módulo de coeficientes (trivial si es None)
        filtration_subalgebra (MatrixLieAlgebra): Si se da, el nivel de cada
            cocadena es el número de ranuras fuera de ella

    Returns:
        tuple: (CochainComplexBlock, niveles por grado, niveles ambiente por grado)
    """
    if not h.units <= g.units:
        raise ParameterError(f"{h} no está contenida en {g}")
    coefficients = _finite_coefficients(g, module)
    complement = [u for u in g.basis if u not in h.units]
    excluded = frozenset(h.units)
    top = len(complement)

    bases = [finite_chain_basis(complement, p, coefficients) for p in range(top + 2)]
    description = f"H({g}, {h}; {module if module is not None else 'k'})"
    indexes, differentials = _assemble(bases, coefficients, excluded, top)

    def level(element):
        if filtration_subalgebra is None:
            return 0
        return sum(1 for x in element.exterior if x not in filtration_subalgebra.units)

    ambient_levels = [[level(e) for e in basis] for basis in bases]
    subspaces, levels = [], []
    for p in range(top + 1):
        vectors, vector_levels = invariant_subspace(
            bases[p], indexes[p], list(h.basis), coefficients, excluded, ambient_levels[p]
        )
        subspaces.append(vectors)
        levels.append(vector_levels)
    block = CochainComplexBlock(description, bases, differentials, subspaces)
    block.check_d_squared()
    return block, levels, ambient_levels


def finite_pair_relative_cohomology(g, h, module=None):
    """
    Cohomología relativa exacta H(g, h; M) de un par finito

    Returns:
        dict: {grado: dimensión} para 0..dim(g/h)
    """
    block, _, _ = finite_relative_complex(g, h, module)
    return block.cohomology()
