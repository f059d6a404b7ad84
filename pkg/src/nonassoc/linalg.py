"""
Exact rational dense linear algebra

Gauss-Jordan elimination over Fractions with deterministic pivoting: columns
are scanned left to right and the first row at or below the current pivot row
holding a nonzero entry becomes the pivot. Kernel and image bases are
therefore reproducible across runs.
"""

from fractions import Fraction
from typing import Any, Iterable, List, Optional, Sequence, Tuple, Union

from ..core.exceptions import DimensionError
from ..utils.logger import get_logger
from ..utils.text_utils import format_matrix
from .models import LinearSolution, NoSolution, Vector, to_fraction, to_vector

logger = get_logger(__name__)


class Matrix:
    """Dense rational matrix, immutable once built"""

    __slots__ = ("_entries", "_ncols")

    def __init__(self, rows: Iterable[Sequence[Any]], ncols: Optional[int] = None):
        entries = tuple(tuple(to_fraction(x) for x in row) for row in rows)
        if entries:
            width = len(entries[0])
            for i, row in enumerate(entries):
                if len(row) != width:
                    raise DimensionError(f"row {i} has {len(row)} entries, expected {width}", expected=width, actual=len(row))
            if ncols is not None and ncols != width:
                raise DimensionError("declared column count disagrees with rows", expected=ncols, actual=width)
            ncols = width
        self._entries: Tuple[Vector, ...] = entries
        self._ncols = ncols or 0

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Any]], nrows: int) -> "Matrix":
        for col in columns:
            if len(col) != nrows:
                raise DimensionError("column length mismatch", expected=nrows, actual=len(col))
        return cls([[col[i] for col in columns] for i in range(nrows)], len(columns))

    @classmethod
    def diagonal(cls, values: Sequence[Any]) -> "Matrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def vstack(cls, *blocks: "Matrix") -> "Matrix":
        widths = {b.ncols for b in blocks}
        if len(widths) > 1:
            raise DimensionError("vstack needs equal column counts", expected=min(widths), actual=max(widths))
        return cls([row for b in blocks for row in b.entries], widths.pop() if widths else 0)

    @classmethod
    def hstack(cls, *blocks: "Matrix") -> "Matrix":
        heights = {b.nrows for b in blocks}
        if len(heights) > 1:
            raise DimensionError("hstack needs equal row counts", expected=min(heights), actual=max(heights))
        nrows = heights.pop() if heights else 0
        rows = [[x for b in blocks for x in b.entries[i]] for i in range(nrows)]
        return cls(rows, sum(b.ncols for b in blocks))

    @property
    def entries(self) -> Tuple[Vector, ...]:
        return self._entries

    @property
    def nrows(self) -> int:
        return len(self._entries)

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def row(self, i: int) -> Vector:
        return self._entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self._entries)

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self._ncols)]

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self._entries[i][j]

    def transpose(self) -> "Matrix":
        return Matrix(self.columns(), self.nrows)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def apply(self, vector: Sequence[Any]) -> Vector:
        """Matrix-vector product"""
        vector = to_vector(vector)
        if len(vector) != self._ncols:
            raise DimensionError("vector length does not match column count", expected=self._ncols, actual=len(vector))
        return tuple(sum((a * b for a, b in zip(row, vector)), Fraction(0)) for row in self._entries)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self._ncols != other.nrows:
            raise DimensionError("inner dimensions differ", expected=self._ncols, actual=other.nrows)
        cols = other.columns()
        return Matrix(
            [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in self._entries],
            other.ncols,
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._entries, other.entries)], self._ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._entries, other.entries)], self._ncols)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, factor: Any) -> "Matrix":
        factor = to_fraction(factor)
        return Matrix([[factor * a for a in row] for row in self._entries], self._ncols)

    def _check_same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise DimensionError("matrix shapes differ", expected=self.shape, actual=other.shape)

    def is_zero(self) -> bool:
        return all(a == 0 for row in self._entries for a in row)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other.entries

    def __hash__(self) -> int:
        return hash((self._entries, self._ncols))

    def to_lists(self) -> List[List[Fraction]]:
        return [list(row) for row in self._entries]

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols})"

    def __str__(self) -> str:
        return "\n".join(format_matrix(self._entries))


MatrixLike = Union[Matrix, Sequence[Sequence[Any]]]


def as_matrix(m: MatrixLike) -> Matrix:
    return m if isinstance(m, Matrix) else Matrix(m)


class EchelonForm:
    """
    Reduced row echelon form of a matrix

    Attributes:
        reduced: the reduced matrix, zero rows last
        pivots: pivot column of each nonzero row
        transform: invertible T with T·M = reduced, when tracked
    """

    def __init__(self, reduced: Matrix, pivots: Tuple[int, ...], transform: Optional[Matrix] = None):
        self.reduced = reduced
        self.pivots = pivots
        self.transform = transform

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def basis(self) -> Tuple[Vector, ...]:
        """The nonzero rows, a canonical basis of the row space"""
        return self.reduced.entries[: self.rank]


def _eliminate(rows: List[List[Fraction]], pivot_limit: int) -> List[int]:
    """
    In-place Gauss-Jordan elimination restricted to the first pivot_limit columns

    Returns:
        pivot columns in order
    """
    nrows = len(rows)
    pivots: List[int] = []
    r = 0
    for c in range(pivot_limit):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        if inv != 1:
            rows[r] = [x * inv for x in rows[r]]
        pivot_row = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], pivot_row)]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: MatrixLike, track: bool = False) -> EchelonForm:
    """
    Reduced row echelon form

    Args:
        m: input matrix
        track: also record the row operation matrix T with T·m = rref

    Returns:
        EchelonForm
    """
    m = as_matrix(m)
    ncols = m.ncols
    if track:
        rows = [list(row) + [Fraction(int(i == k)) for k in range(m.nrows)] for i, row in enumerate(m.entries)]
    else:
        rows = [list(row) for row in m.entries]
    pivots = _eliminate(rows, ncols)
    reduced = Matrix([row[:ncols] for row in rows], ncols)
    transform = Matrix([row[ncols:] for row in rows], m.nrows) if track else None
    return EchelonForm(reduced, tuple(pivots), transform)


def rank(m: MatrixLike) -> int:
    """Rank over the rationals"""
    return rref(m).rank


def _kernel_from_rref(reduced: Sequence[Sequence[Fraction]], pivots: Sequence[int], ncols: int) -> List[Vector]:
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced[i][free]
        basis.append(tuple(v))
    return basis


def kernel(m: MatrixLike) -> List[Vector]:
    """
    Basis of the right kernel {x : m·x = 0}

    One vector per non-pivot column, with a 1 in that column.
    """
    m = as_matrix(m)
    form = rref(m)
    return _kernel_from_rref(form.reduced.entries, form.pivots, m.ncols)


def image_columns(m: MatrixLike) -> List[int]:
    """0-based indices of the greedy left-to-right maximal independent set of columns"""
    return list(rref(m).pivots)


def image_basis(m: MatrixLike) -> List[Vector]:
    """Maximal independent subset of the columns, chosen greedily left to right"""
    m = as_matrix(m)
    return [m.column(j) for j in image_columns(m)]


def row_space(m: MatrixLike) -> Tuple[Vector, ...]:
    """Canonical (reduced echelon) basis of the row space"""
    return rref(m).basis()


def same_span(first: Sequence[Sequence[Any]], second: Sequence[Sequence[Any]], width: int) -> bool:
    """Whether two lists of vectors of the given width span the same subspace"""
    left = row_space(Matrix(first, width))
    right = row_space(Matrix(second, width))
    return left == right


def solve(m: MatrixLike, rhs: Sequence[Any]) -> Union[LinearSolution, NoSolution]:
    """
    Solve m·x = rhs exactly

    Args:
        m: coefficient matrix
        rhs: right-hand side, one entry per row

    Returns:
        LinearSolution with free variables set to zero and a kernel basis, or
        NoSolution with a row combination certificate
    """
    m = as_matrix(m)
    rhs = to_vector(rhs)
    if len(rhs) != m.nrows:
        raise DimensionError("right-hand side length must equal the row count", expected=m.nrows, actual=len(rhs))
    ncols = m.ncols
    logger.debug(f"Solving {m.nrows}x{ncols} system")

    rows = [
        list(row) + [rhs[i]] + [Fraction(int(i == k)) for k in range(m.nrows)]
        for i, row in enumerate(m.entries)
    ]
    pivots = _eliminate(rows, ncols)

    for row in rows[len(pivots):]:
        if row[ncols] != 0:
            certificate = tuple(row[ncols + 1:])
            logger.debug("System is inconsistent")
            return NoSolution(certificate=certificate, residual=row[ncols])

    solution = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        solution[p] = rows[i][ncols]
    reduced = [row[:ncols] for row in rows]
    return LinearSolution(solution=tuple(solution), kernel=tuple(_kernel_from_rref(reduced, pivots, ncols)))

