"""
Sucesión espectral de Hochschild–Serre de un complejo filtrado finito

Se usa la descripción clásica por ciclos aproximados:
    Z_r^{p,n} = {x ∈ F^p C^n : dx ∈ F^{p+r} C^{n+1}}
    E_r^{p,n} = Z_r^{p,n} / (Z_{r-1}^{p+1,n} + d Z_{r-1}^{p-r+1,n-1})
"""

from dataclasses import dataclass, field

from sympy.polys.domains import QQ

from exactlin import ParameterError, SparseRationalMatrix, column_space_rank, kernel_basis
from liealg import reductive_part

from .complexes import build_absolute_complex, finite_relative_complex


@dataclass
class FilteredComplexBlock:
    """
    Complejo con un nivel de filtración por vector de base

    Args:
        block (CochainComplexBlock): Complejo subyacente
        levels (list): levels[p][k] = nivel del vector k de grado p
        ambient_levels (list): ambient_levels[p][i] = nivel de la coordenada i
            de la base ambiente de grado p (p = 0..top+1)
    """

    block: object
    levels: list
    ambient_levels: list

    @property
    def top(self):
        return self.block.top

    @property
    def max_level(self):
        return max((level for row in self.levels for level in row), default=0)

    def is_well_formed(self):
        """El diferencial nunca baja el nivel de filtración"""
        for p in range(self.top + 1):
            targets = self.ambient_levels[p + 1]
            for image, level in zip(self.block.images(p), self.levels[p]):
                if any(targets[i] < level for i in image):
                    return False
        return True


@dataclass(frozen=True)
class SpectralPage:
    """
    Página E_r: dimensiones por (p, q) y rango de d_r saliendo de cada entrada
    """

    r: int
    entries: dict
    differential_ranks: dict = field(default_factory=dict)

    def total(self, degree):
        return sum(dim for (p, q), dim in self.entries.items() if p + q == degree)

    def totals(self):
        result = {}
        for (p, q), dim in self.entries.items():
            result[p + q] = result.get(p + q, 0) + dim
        return dict(sorted(result.items()))

    def euler_characteristic(self):
        return sum((-1) ** (p + q) * dim for (p, q), dim in self.entries.items())

    def support(self):
        return sorted(self.entries)


class _ApproximateCycles:
    """Memoria de los espacios Z_r^{p,n} como vectores ambiente"""

    def __init__(self, filtered):
        self.filtered = filtered
        self.block = filtered.block
        self._cache = {}

    def z(self, r, p, n):
        key = (r, p, n)
        if key not in self._cache:
            self._cache[key] = self._compute(r, p, n)
        return self._cache[key]

    def _compute(self, r, p, n):
        if n < 0 or n > self.block.top:
            return []
        floor = max(p, 0)
        if floor > self.filtered.max_level:
            return []
        chosen = [k for k, level in enumerate(self.filtered.levels[n]) if level >= floor]
        if not chosen:
            return []
        vectors = self.block.vectors(n)
        images = self.block.images(n)
        target_levels = self.filtered.ambient_levels[n + 1]
        threshold = p + r

        projections = [{i: v for i, v in images[k].items() if target_levels[i] < threshold} for k in chosen]
        if not any(projections):
            return [vectors[k] for k in chosen]

        matrix = SparseRationalMatrix.from_columns(projections, self.block.ambient_dimension(n + 1))
        cycles = []
        for solution in kernel_basis(matrix):
            combined = {}
            for position, coefficient in solution.items():
                for i, value in vectors[chosen[position]].items():
                    combined[i] = combined.get(i, QQ.zero) + coefficient * value
            cycles.append({i: v for i, v in combined.items() if v})
        return cycles

    def boundaries(self, r, p, n):
        """d Z_r^{p,n-1} dentro de C^n"""
        if n < 1:
            return []
        differential = self.block.differentials[n - 1]
        return [image for image in (differential.apply(v) for v in self.z(r, p, n - 1)) if image]

    def entry(self, r, p, n):
        cycles = self.z(r, p, n)
        if not cycles:
            return 0
        denominator = self.z(r - 1, p + 1, n) + self.boundaries(r - 1, p - r + 1, n)
        return len(cycles) - column_space_rank(denominator, self.block.ambient_dimension(n))

    def differential_rank(self, r, p, n):
        cycles = self.z(r, p, n)
        if not cycles:
            return 0
        kernel = self.z(r + 1, p, n) + self.z(r - 1, p + 1, n)
        return len(cycles) - column_space_rank(kernel, self.block.ambient_dimension(n))


def hochschild_serre_pages(filtered, r_max):
    """
    Páginas E_1..E_{r_max} con dimensiones exactas

    Args:
        filtered (FilteredComplexBlock): Complejo filtrado
        r_max (int): Última página

    Returns:
        list: SpectralPage por página, con claves (p, q = n - p)
    """
    if r_max < 1:
        raise ParameterError("r_max debe ser >= 1")
    if not filtered.is_well_formed():
        raise ParameterError(f"{filtered.block.description}: el diferencial baja la filtración")
    cycles = _ApproximateCycles(filtered)
    pages = []
    for r in range(1, r_max + 1):
        entries, ranks = {}, {}
        for n in range(filtered.top + 1):
            for p in range(filtered.max_level + 1):
                dim = cycles.entry(r, p, n)
                if dim:
                    entries[(p, n - p)] = dim
                    rank_out = cycles.differential_rank(r, p, n)
                    if rank_out:
                        ranks[(p, n - p)] = rank_out
        pages.append(SpectralPage(r, entries, ranks))
    return pages


def filtered_relative_complex(g, h, filtration_subalgebra, module=None):
    """
    Complejo relativo C(g, h; M) filtrado por el número de ranuras fuera de la subálgebra

    Args:
        g (MatrixLieAlgebra): Álgebra
        h (MatrixLieAlgebra): Subálgebra reductiva
        filtration_subalgebra (MatrixLieAlgebra): Subálgebra que define la filtración
        module (ExplicitModule): Coeficientes

    Returns:
        FilteredComplexBlock: Complejo filtrado
    """
    block, levels, ambient_levels = finite_relative_complex(g, h, module, filtration_subalgebra)
    return FilteredComplexBlock(block, levels, ambient_levels)


def filtered_absolute_complex(family, coeffs=None, p_max=1):
    """Filtración de Hochschild–Serre de C(g; M) respecto de la parte gl canónica"""
    block = build_absolute_complex(family, coeffs, p_max)
    gl_part = frozenset(reductive_part(family))
    ambient_levels = [
        [sum(1 for x in element.exterior if x not in gl_part) for element in basis] for basis in block.bases
    ]
    return FilteredComplexBlock(block, ambient_levels[: block.top + 1], ambient_levels)
