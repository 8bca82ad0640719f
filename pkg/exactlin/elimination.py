"""
Eliminación gaussiana exacta sobre matrices dispersas racionales

Rango, base del núcleo y dimensión de cohomología de complejos finitos.
"""

from sympy.polys.domains import QQ

from .errors import AlgebraError, ParameterError
from .sparse import SparseRationalMatrix

STRATEGIES = ("markowitz", "rowwise", "domain")


def _choose_markowitz(active, rows, col_count):
    """Pivote (fila, columna) que minimiza (nnz_fila - 1) * (nnz_col - 1)"""
    best = None
    best_key = None
    for i in sorted(active):
        row = rows[i]
        row_cost = len(row) - 1
        for j in row:
            key = (row_cost * (col_count[j] - 1), i, j)
            if best_key is None or key < best_key:
                best_key = key
                best = (i, j)
                if key[0] == 0:
                    return best
    return best


def _choose_rowwise(active, rows, col_count):
    i = min(active)
    return i, min(rows[i])


def _reduce(matrix, strategy="markowitz", jordan=False):
    """
    Reduce una copia privada de la matriz

    Args:
        matrix (SparseRationalMatrix): Matriz a reducir
        strategy (str): "markowitz" o "rowwise"
        jordan (bool): Si es True también se eliminan las columnas pivote
            de las filas ya usadas (forma escalonada reducida)

    Returns:
        tuple: (pivotes [(fila, columna)], filas reducidas {fila: {col: valor}})
    """
    choose = _choose_markowitz if strategy == "markowitz" else _choose_rowwise
    rows = matrix.row_dicts()
    col_rows = {}
    for i, row in rows.items():
        for j in row:
            col_rows.setdefault(j, set()).add(i)
    col_count = {j: len(members) for j, members in col_rows.items()}
    active = set(rows)
    pivots = []

    while active:
        pivot_row, pivot_col = choose(active, rows, col_count)
        active.discard(pivot_row)
        row = rows[pivot_row]
        inverse = QQ.one / row[pivot_col]
        if inverse != QQ.one:
            for j in row:
                row[j] = row[j] * inverse
        pivots.append((pivot_row, pivot_col))

        targets = [i for i in col_rows.get(pivot_col, ()) if i != pivot_row and (jordan or i in active)]
        for i in sorted(targets):
            target = rows[i]
            factor = target[pivot_col]
            for j, value in row.items():
                new = target.get(j, QQ.zero) - factor * value
                counted = i in active
                if new:
                    if j not in target:
                        col_rows.setdefault(j, set()).add(i)
                        if counted:
                            col_count[j] = col_count.get(j, 0) + 1
                    target[j] = new
                elif j in target:
                    del target[j]
                    col_rows[j].discard(i)
                    if counted:
                        col_count[j] -= 1
            if not target:
                active.discard(i)

        # la fila pivote deja de contar para el coste de las columnas activas
        for j in row:
            if pivot_row in col_rows.get(j, ()):
                col_count[j] -= 1
        active = {i for i in active if rows[i]}

    return pivots, rows


def rank(matrix, strategy="markowitz"):
    """
    Rango exacto sobre los racionales

    Args:
        matrix (SparseRationalMatrix): Matriz
        strategy (str): "markowitz" (por defecto), "rowwise" o "domain"
            (DomainMatrix de sympy). Todas dan el mismo resultado.

    Returns:
        int: Rango
    """
    if strategy not in STRATEGIES:
        raise ParameterError(f"estrategia desconocida: {strategy}")
    if matrix.is_zero():
        return 0
    if strategy == "domain":
        return int(matrix.to_domain_matrix().rank())
    pivots, _ = _reduce(matrix, strategy)
    return len(pivots)


def kernel_basis(matrix, strategy="markowitz"):
    """
    Base del núcleo de la matriz

    Args:
        matrix (SparseRationalMatrix): Matriz m
        strategy (str): Estrategia de pivoteo

    Returns:
        list: Vectores dispersos {columna: valor} linealmente independientes
            con m·v = 0; hay exactamente cols - rank(m)
    """
    pivots, rows = _reduce(matrix, strategy, jordan=True)
    pivot_cols = {col: row for row, col in pivots}
    free_cols = [j for j in range(matrix.cols) if j not in pivot_cols]

    # cada fila pivote contiene su columna pivote y columnas libres
    column_entries = {}
    for col, row_index in pivot_cols.items():
        for j, value in rows[row_index].items():
            if j != col:
                column_entries.setdefault(j, []).append((col, value))

    basis = []
    for free in free_cols:
        vector = {free: QQ.one}
        for col, value in column_entries.get(free, ()):
            vector[col] = -value
        basis.append(vector)
    return basis


def column_space_rank(vectors, dimension, strategy="markowitz"):
    """
    Rango del conjunto de vectores dispersos dados

    Args:
        vectors (list): Vectores {índice: valor}
        dimension (int): Dimensión del espacio ambiente

    Returns:
        int: Dimensión del subespacio generado
    """
    if not vectors:
        return 0
    return rank(SparseRationalMatrix.from_columns(vectors, dimension), strategy)


def cohomology_dim(d_in, d_out):
    """
    Dimensión de la cohomología en el término medio de k^a -> k^b -> k^c

    Args:
        d_in (SparseRationalMatrix): Diferencial entrante (b x a)
        d_out (SparseRationalMatrix): Diferencial saliente (c x b)

    Returns:
        int: dim ker(d_out) - rank(d_in)
    """
    if d_in.rows != d_out.cols:
        raise ParameterError(
            f"el diferencial entrante llega a dimensión {d_in.rows} y el saliente parte de {d_out.cols}"
        )
    if not d_out.matmul(d_in).is_zero():
        raise AlgebraError("COMPOSITION_NOT_ZERO", "d_out · d_in no es cero")
    result = (d_out.cols - rank(d_out)) - rank(d_in)
    if result < 0:
        raise AlgebraError("COMPOSITION_NOT_ZERO", "dimensión de cohomología negativa")
    return result
