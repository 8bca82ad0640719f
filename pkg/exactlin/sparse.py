"""
Matriz dispersa racional exacta e inmutable
"""

from fractions import Fraction

from sympy import Rational
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .errors import ParameterError


def to_rational(value):
    """
    Convierte un entero, Fraction, Rational de sympy o elemento de QQ a QQ

    Args:
        value: Valor numérico exacto

    Returns:
        QQ: Valor como elemento del cuerpo QQ
    """
    if isinstance(value, float):
        raise ParameterError("no se aceptan valores de coma flotante")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Rational):
        return QQ(int(value.p), int(value.q))
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return QQ.convert(value)


class SparseRationalMatrix:
    """
    Matriz dispersa sobre QQ

    Las entradas se guardan como {fila: {columna: valor}} sin ceros. La matriz
    no se modifica después de construirla; la eliminación trabaja sobre copias.
    """

    __slots__ = ("_rows", "_nrows", "_ncols")

    def __init__(self, rows, cols, entries=()):
        if rows < 0 or cols < 0:
            raise ParameterError(f"dimensiones inválidas ({rows}, {cols})")
        self._nrows = rows
        self._ncols = cols
        data = {}
        items = entries.items() if isinstance(entries, dict) else entries
        for item in items:
            if len(item) == 3:
                i, j, value = item
            else:
                (i, j), value = item
            if not (0 <= i < rows and 0 <= j < cols):
                raise ParameterError(f"índice ({i}, {j}) fuera de rango para {rows}x{cols}")
            value = to_rational(value)
            row = data.setdefault(i, {})
            total = row.get(j, QQ.zero) + value
            if total:
                row[j] = total
            else:
                row.pop(j, None)
        self._rows = {i: row for i, row in data.items() if row}

    @classmethod
    def _from_clean_rows(cls, rows, cols, data):
        matrix = cls.__new__(cls)
        matrix._nrows = rows
        matrix._ncols = cols
        matrix._rows = {i: dict(row) for i, row in data.items() if row}
        return matrix

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def identity(cls, n):
        return cls._from_clean_rows(n, n, {i: {i: QQ.one} for i in range(n)})

    @classmethod
    def from_rows(cls, rows):
        """
        Construye la matriz a partir de una lista densa de filas

        Args:
            rows (list): Lista de listas de valores exactos

        Returns:
            SparseRationalMatrix: Matriz equivalente
        """
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        entries = [(i, j, v) for i, row in enumerate(rows) for j, v in enumerate(row) if v]
        return cls(nrows, ncols, entries)

    @classmethod
    def from_columns(cls, vectors, dimension):
        """
        Matriz cuyas columnas son vectores dispersos {índice: valor}

        Args:
            vectors (list): Vectores columna
            dimension (int): Número de filas

        Returns:
            SparseRationalMatrix: Matriz dimension x len(vectors)
        """
        data = {}
        for j, vector in enumerate(vectors):
            for i, value in vector.items():
                if value:
                    if not 0 <= i < dimension:
                        raise ParameterError(f"índice {i} fuera de rango {dimension}")
                    data.setdefault(i, {})[j] = to_rational(value)
        return cls._from_clean_rows(dimension, len(vectors), data)

    @property
    def rows(self):
        return self._nrows

    @property
    def cols(self):
        return self._ncols

    @property
    def shape(self):
        return (self._nrows, self._ncols)

    def nnz(self):
        return sum(len(row) for row in self._rows.values())

    def get(self, i, j):
        return self._rows.get(i, {}).get(j, QQ.zero)

    def row(self, i):
        return dict(self._rows.get(i, {}))

    def row_dicts(self):
        """Copia privada de las filas no nulas (para la eliminación)"""
        return {i: dict(row) for i, row in self._rows.items()}

    def entries(self):
        for i in sorted(self._rows):
            row = self._rows[i]
            for j in sorted(row):
                yield i, j, row[j]

    def is_zero(self):
        return not self._rows

    def transpose(self):
        data = {}
        for i, row in self._rows.items():
            for j, value in row.items():
                data.setdefault(j, {})[i] = value
        return SparseRationalMatrix._from_clean_rows(self._ncols, self._nrows, data)

    def apply(self, vector):
        """
        Producto matriz-vector con vectores dispersos

        Args:
            vector (dict): {columna: valor}

        Returns:
            dict: {fila: valor} sin ceros
        """
        result = {}
        for i, row in self._rows.items():
            total = QQ.zero
            for j, value in row.items():
                other = vector.get(j)
                if other:
                    total += value * other
            if total:
                result[i] = total
        return result

    def matmul(self, other):
        if self._ncols != other.rows:
            raise ParameterError(f"dimensiones incompatibles {self.shape} x {other.shape}")
        other_rows = other._rows
        data = {}
        for i, row in self._rows.items():
            accum = {}
            for k, value in row.items():
                for j, other_value in other_rows.get(k, {}).items():
                    accum[j] = accum.get(j, QQ.zero) + value * other_value
            accum = {j: v for j, v in accum.items() if v}
            if accum:
                data[i] = accum
        return SparseRationalMatrix._from_clean_rows(self._nrows, other.cols, data)

    def select_columns(self, columns):
        position = {c: k for k, c in enumerate(columns)}
        data = {}
        for i, row in self._rows.items():
            kept = {position[j]: v for j, v in row.items() if j in position}
            if kept:
                data[i] = kept
        return SparseRationalMatrix._from_clean_rows(self._nrows, len(columns), data)

    def select_rows(self, rows):
        data = {k: self._rows[r] for k, r in enumerate(rows) if r in self._rows}
        return SparseRationalMatrix._from_clean_rows(len(rows), self._ncols, data)

    def vstack(self, other):
        if self._ncols != other.cols:
            raise ParameterError("vstack con distinto número de columnas")
        data = dict(self._rows)
        for i, row in other._rows.items():
            data[i + self._nrows] = row
        return SparseRationalMatrix._from_clean_rows(self._nrows + other.rows, self._ncols, data)

    def to_domain_matrix(self):
        return DomainMatrix(self.row_dicts(), self.shape, QQ)

    def to_dense(self):
        return [[self.get(i, j) for j in range(self._ncols)] for i in range(self._nrows)]

    def __eq__(self, other):
        if not isinstance(other, SparseRationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.shape, tuple(self.entries())))

    def __repr__(self):
        return f"SparseRationalMatrix({self._nrows}x{self._ncols}, nnz={self.nnz()})"
