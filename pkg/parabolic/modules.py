"""
Módulos explícitos de dimensión finita sobre álgebras de matrices
"""

from dataclasses import dataclass
from itertools import permutations, product

from sympy import Matrix

from combinat import Permutation, as_partition, schur_dim
from exactlin import AlgebraError, ParameterError, SparseRationalMatrix, VerificationError
from liealg import MatrixUnit, gl


@dataclass(frozen=True)
class ExplicitModule:
    """
    Módulo con una matriz de acción por unidad matricial

    Args:
        dimension (int): Dimensión del módulo
        actions (dict): {MatrixUnit: SparseRationalMatrix dimension x dimension}
        name (str): Nombre para mostrar
    """

    dimension: int
    actions: dict
    name: str = "M"

    def action(self, unit):
        matrix = self.actions.get(unit)
        if matrix is None:
            raise AlgebraError("MODULE_ACTION_INVALID", f"{self.name} no define la acción de {unit}")
        return matrix

    def validate(self, basis):
        """
        Comprueba ρ([a,b]) = ρ(a)ρ(b) - ρ(b)ρ(a) sobre todos los pares de la base

        Raises:
            AlgebraError: MODULE_ACTION_INVALID si alguna identidad falla
        """
        for a in basis:
            matrix = self.action(a)
            if matrix.shape != (self.dimension, self.dimension):
                raise AlgebraError("MODULE_ACTION_INVALID", f"{self.name}: matriz de {a} con forma {matrix.shape}")
        for a in basis:
            for b in basis:
                left = SparseRationalMatrix.zeros(self.dimension, self.dimension)
                for c, coefficient in a.bracket(b).items():
                    left = _add(left, _scale(self.action(c), coefficient))
                right = _add(
                    self.action(a).matmul(self.action(b)),
                    _scale(self.action(b).matmul(self.action(a)), -1),
                )
                if left != right:
                    raise AlgebraError("MODULE_ACTION_INVALID", f"{self.name}: ρ([{a},{b}]) != [ρ({a}), ρ({b})]")
        return True

    def __str__(self):
        return self.name


def _add(first, second):
    return SparseRationalMatrix(first.rows, first.cols, list(first.entries()) + list(second.entries()))


def _scale(matrix, factor):
    return SparseRationalMatrix(matrix.rows, matrix.cols, [(i, j, factor * v) for i, j, v in matrix.entries()])


def _kron(first, second):
    cols = second.cols
    entries = [
        (i * second.rows + k, j * cols + l, a * b)
        for i, j, a in first.entries()
        for k, l, b in second.entries()
    ]
    return SparseRationalMatrix(first.rows * second.rows, first.cols * cols, entries)


def _units(size):
    return gl(size).basis


def trivial_module(size):
    zero = SparseRationalMatrix.zeros(1, 1)
    return ExplicitModule(1, {u: zero for u in _units(size)}, "k")


def tautological_module(size):
    actions = {u: SparseRationalMatrix(size, size, [(u.row, u.col, 1)]) for u in _units(size)}
    return ExplicitModule(size, actions, f"k^{size}")


def adjoint_module(size):
    """gl_size con la acción adjunta; E_ab ocupa la posición a*size + b"""
    dimension = size * size
    actions = {}
    for x in _units(size):
        entries = []
        for y in _units(size):
            for z, coefficient in x.bracket(y).items():
                entries.append((z.row * size + z.col, y.row * size + y.col, coefficient))
        actions[x] = SparseRationalMatrix(dimension, dimension, entries)
    return ExplicitModule(dimension, actions, f"gl_{size}")


def dual(module):
    """ρ*(x) = -ρ(x)^T"""
    actions = {u: _scale(m.transpose(), -1) for u, m in module.actions.items()}
    return ExplicitModule(module.dimension, actions, f"({module.name})*")


def tensor(first, second):
    """ρ(x) = ρ_1(x) ⊗ 1 + 1 ⊗ ρ_2(x) sobre las unidades comunes"""
    one_first = SparseRationalMatrix.identity(first.dimension)
    one_second = SparseRationalMatrix.identity(second.dimension)
    actions = {}
    for unit in first.actions.keys() & second.actions.keys():
        actions[unit] = _add(_kron(first.actions[unit], one_second), _kron(one_first, second.actions[unit]))
    return ExplicitModule(first.dimension * second.dimension, actions, f"{first.name}⊗{second.name}")


def determinant_power(size, power):
    """det^power: E_ii actúa por power y el resto por cero"""
    actions = {
        u: SparseRationalMatrix(1, 1, [(0, 0, power)] if u.row == u.col else [])
        for u in _units(size)
    }
    return ExplicitModule(1, actions, f"det^{power}")


def restrict(module, algebra):
    """Restricción a una subálgebra de matrices"""
    return ExplicitModule(module.dimension, {u: module.action(u) for u in algebra.basis}, module.name)


def _young_groups(parts):
    """Permutaciones de las filas y de las columnas de un diagrama numerado por filas"""
    cells, start = [], 0
    for length in parts:
        cells.append(list(range(start, start + length)))
        start += length
    columns = [[row[c] for row in cells if c < len(row)] for c in range(parts[0])] if parts else []
    return _block_permutations(cells, start), _block_permutations(columns, start)


def _block_permutations(blocks, size):
    result = []
    for choice in product(*(permutations(block) for block in blocks)):
        images = list(range(size))
        for block, image in zip(blocks, choice):
            for source, target in zip(block, image):
                images[source] = target
        result.append(tuple(images))
    return result


def _parity(images):
    return -1 if Permutation(tuple(k + 1 for k in images)).length() % 2 else 1


def _move(images, indices):
    moved = [0] * len(indices)
    for k, index in enumerate(indices):
        moved[images[k]] = index
    return tuple(moved)


def schur_module(partition, size):
    """
    S^λ(k^size) como imagen del simetrizador de Young en (k^size)^{⊗|λ|}

    Args:
        partition: Diagrama λ
        size (int): Dimensión del espacio

    Returns:
        ExplicitModule: Módulo de gl_size de dimensión schur_dim(λ, size)

    Raises:
        VerificationError: BASIS_MISMATCH si la imagen no tiene la dimensión esperada
    """
    parts = as_partition(partition).parts
    expected = schur_dim(parts, size)
    if not parts:
        return trivial_module(size)
    if expected == 0:
        raise ParameterError(f"S^{parts} de k^{size} es nulo")

    degree = sum(parts)
    tensors = list(product(range(size), repeat=degree))
    position = {indices: k for k, indices in enumerate(tensors)}
    rows_group, columns_group = _young_groups(parts)

    symmetrizer = Matrix.zeros(len(tensors), len(tensors))
    for k, indices in enumerate(tensors):
        for q in columns_group:
            sign = _parity(q)
            moved = _move(q, indices)
            for p in rows_group:
                symmetrizer[position[_move(p, moved)], k] += sign

    image = Matrix.hstack(*symmetrizer.columnspace())
    if image.cols != expected:
        raise VerificationError("BASIS_MISMATCH", f"S^{parts}(k^{size}) tiene dimensión {image.cols}, se esperaba {expected}")
    projector = (image.T * image).inv() * image.T

    actions = {}
    for unit in _units(size):
        on_tensors = Matrix.zeros(len(tensors), len(tensors))
        for k, indices in enumerate(tensors):
            for slot, index in enumerate(indices):
                if index == unit.col:
                    changed = indices[:slot] + (unit.row,) + indices[slot + 1:]
                    on_tensors[position[changed], k] += 1
        restricted = projector * on_tensors * image
        actions[unit] = SparseRationalMatrix.from_rows(restricted.tolist())
    return ExplicitModule(expected, actions, f"S^{parts}(k^{size})")


def irreducible_gl_module(weight):
    """
    L(μ) para un peso dominante entero μ de gl_N

    Se construye como S^{μ - μ_N}(k^N) ⊗ det^{μ_N}.
    """
    weight = tuple(int(w) for w in weight)
    if any(weight[i] < weight[i + 1] for i in range(len(weight) - 1)):
        raise ParameterError(f"el peso {weight} no es dominante")
    size = len(weight)
    shift = weight[-1]
    parts = tuple(w - shift for w in weight if w - shift > 0)
    module = schur_module(parts, size)
    if shift:
        module = tensor(module, determinant_power(size, shift))
    return ExplicitModule(module.dimension, module.actions, f"L{weight}")


def _embed(module, offset, size):
    """Acciones de un módulo de gl_k sobre el bloque diagonal que empieza en offset"""
    return {
        MatrixUnit(u.row + offset, u.col + offset): matrix
        for u, matrix in module.actions.items()
    }


def levi_module(weight, m, n):
    """
    L_I(μ) = L(μ_V) ⊠ L(μ_U) como módulo de b con el nilradical actuando por cero

    Args:
        weight (tuple): μ de longitud m + n, dominante en cada bloque
        m (int): dim V
        n (int): dim U

    Returns:
        ExplicitModule: Acciones para las unidades de b = gl_m ⊕ gl_n ⊕ V*⊗U
    """
    weight = tuple(weight)
    if len(weight) != m + n:
        raise ParameterError(f"el peso {weight} no tiene longitud {m + n}")
    first = irreducible_gl_module(weight[:m])
    second = irreducible_gl_module(weight[m:])
    one_first = SparseRationalMatrix.identity(first.dimension)
    one_second = SparseRationalMatrix.identity(second.dimension)
    dimension = first.dimension * second.dimension

    actions = {}
    for unit, matrix in _embed(first, 0, m).items():
        actions[unit] = _kron(matrix, one_second)
    for unit, matrix in _embed(second, m, n).items():
        actions[unit] = _kron(one_first, matrix)
    zero = SparseRationalMatrix.zeros(dimension, dimension)
    for i in range(n):
        for j in range(m):
            actions[MatrixUnit(m + i, j)] = zero
    return ExplicitModule(dimension, actions, f"L_I{weight}")


def u_block_module(partition, m, n):
    """
    S^λ U como módulo de b: gl_n actúa sobre U y gl_m y V*⊗U por cero
    """
    inner = schur_module(partition, n)
    zero = SparseRationalMatrix.zeros(inner.dimension, inner.dimension)
    actions = _embed(inner, m, n)
    for i in range(m):
        for j in range(m):
            actions[MatrixUnit(i, j)] = zero
    for i in range(n):
        for j in range(m):
            actions[MatrixUnit(m + i, j)] = zero
    return ExplicitModule(inner.dimension, actions, f"S^{as_partition(partition).parts}U")
