"""Exact linear algebra over the two-element field.

Matrices are dense with bit-packed rows: each row is a Python int whose
bit ``i`` is the entry in column ``i``.  Row operations are single XORs,
so elimination runs at word speed regardless of matrix width.  Vectors
use the same encoding.  All arithmetic is exact; there are no tolerances
anywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence

from .errors import InputError


def vector_from_bits(bits: Iterable[int]) -> int:
    """Pack an iterable of 0/1 entries into a bit-vector int."""
    v = 0
    for i, b in enumerate(bits):
        if b & 1:
            v |= 1 << i
    return v


def vector_to_bits(v: int, length: int) -> List[int]:
    """Unpack a bit-vector int into a list of 0/1 entries."""
    return [(v >> i) & 1 for i in range(length)]


@dataclass(frozen=True)
class Gf2Matrix:
    """Immutable matrix over GF(2) with bit-packed rows.

    Reductions never mutate; they return fresh values.  Pivoting is
    first-nonzero in row order, so every reduction is deterministic
    given the construction order of the rows.
    """

    n_rows: int
    n_cols: int
    rows: tuple

    def __post_init__(self):
        if self.n_rows < 0 or self.n_cols < 0:
            raise InputError("matrix dimensions must be nonnegative")
        if len(self.rows) != self.n_rows:
            raise InputError("row count does not match n_rows")
        mask = (1 << self.n_cols) - 1
        for r in self.rows:
            if r & ~mask:
                raise InputError("row has bits beyond n_cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n_cols: Optional[int] = None) -> "Gf2Matrix":
        """Build from explicit 0/1 entries, one inner sequence per row."""
        if n_cols is None:
            n_cols = len(rows[0]) if rows else 0
        packed = []
        for row in rows:
            if len(row) != n_cols:
                raise InputError("ragged rows")
            packed.append(vector_from_bits(row))
        return cls(len(packed), n_cols, tuple(packed))

    @classmethod
    def zero(cls, n_rows: int, n_cols: int) -> "Gf2Matrix":
        return cls(n_rows, n_cols, (0,) * n_rows)

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_columns(cls, columns: Sequence[int], n_rows: int) -> "Gf2Matrix":
        """Build from bit-vector columns (bit ``i`` of a column = row ``i``)."""
        rows = [0] * n_rows
        for j, col in enumerate(columns):
            if col >> n_rows:
                raise InputError("column has bits beyond n_rows")
            for i in range(n_rows):
                if (col >> i) & 1:
                    rows[i] |= 1 << j
        return cls(n_rows, len(columns), tuple(rows))

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def column(self, j: int) -> int:
        """Column ``j`` as a bit-vector over the rows."""
        c = 0
        for i in range(self.n_rows):
            c |= ((self.rows[i] >> j) & 1) << i
        return c

    def columns(self) -> List[int]:
        return [self.column(j) for j in range(self.n_cols)]

    def transpose(self) -> "Gf2Matrix":
        return Gf2Matrix.from_columns(list(self.rows), self.n_cols)

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.rows)

    def mat_vec(self, v: int) -> int:
        """Matrix-vector product; returns a bit-vector over the rows."""
        if v >> self.n_cols:
            raise InputError("vector has bits beyond n_cols")
        out = 0
        for i, row in enumerate(self.rows):
            out |= ((row & v).bit_count() & 1) << i
        return out

    def mat_mul(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if self.n_cols != other.n_rows:
            raise InputError("inner dimensions do not match")
        # (AB) rows: row i of A selects rows of B to XOR together.
        out = []
        for row in self.rows:
            acc = 0
            r = row
            while r:
                k = (r & -r).bit_length() - 1
                acc ^= other.rows[k]
                r &= r - 1
            out.append(acc)
        return Gf2Matrix(self.n_rows, other.n_cols, tuple(out))

    def stack(self, other: "Gf2Matrix") -> "Gf2Matrix":
        """Rows of self followed by rows of other."""
        if self.n_cols != other.n_cols:
            raise InputError("column counts do not match")
        return Gf2Matrix(self.n_rows + other.n_rows, self.n_cols, self.rows + other.rows)

    def _echelon(self) -> tuple:
        """Reduced row echelon form; returns (rows, pivot column list)."""
        work = list(self.rows)
        pivots = []
        r = 0
        for c in range(self.n_cols):
            pivot = None
            for i in range(r, len(work)):
                if (work[i] >> c) & 1:
                    pivot = i
                    break
            if pivot is None:
                continue
            work[r], work[pivot] = work[pivot], work[r]
            for i in range(len(work)):
                if i != r and ((work[i] >> c) & 1):
                    work[i] ^= work[r]
            pivots.append(c)
            r += 1
            if r == len(work):
                break
        return work, pivots

    def rank(self) -> int:
        return len(self._echelon()[1])

    def kernel_basis(self) -> List[int]:
        """Basis of {v : Mv = 0}, one vector per non-pivot column.

        Vectors come out in ascending free-column order and are reduced
        against each other, so the basis is canonical for the matrix.
        """
        work, pivots = self._echelon()
        pivot_set = set(pivots)
        basis = []
        for free in range(self.n_cols):
            if free in pivot_set:
                continue
            v = 1 << free
            for r, c in enumerate(pivots):
                if (work[r] >> free) & 1:
                    v |= 1 << c
            basis.append(v)
        return basis

    def solve_preimage(self, b: int) -> Optional[int]:
        """Some x with Mx = b, or None when b is outside the column space.

        Free variables are set to zero.  The result is re-checked by
        multiplying back before it is returned.
        """
        if b >> self.n_rows:
            raise InputError("right-hand side has bits beyond n_rows")
        # Eliminate on [M | b] with b as one extra column.
        aug = Gf2Matrix(
            self.n_rows,
            self.n_cols + 1,
            tuple(row | (((b >> i) & 1) << self.n_cols) for i, row in enumerate(self.rows)),
        )
        work, pivots = aug._echelon()
        if self.n_cols in pivots:
            return None
        x = 0
        for r, c in enumerate(pivots):
            if (work[r] >> self.n_cols) & 1:
                x |= 1 << c
        if self.mat_vec(x) != b:
            raise AssertionError("back-substitution check failed")
        return x

    def __str__(self) -> str:
        lines = []
        for i in range(self.n_rows):
            lines.append("".join(str(self.entry(i, j)) for j in range(self.n_cols)))
        return "\n".join(lines) if lines else "(empty %dx%d)" % (self.n_rows, self.n_cols)


def rank(m: Gf2Matrix) -> int:
    """GF(2) row rank of ``m``."""
    return m.rank()


def kernel_basis(m: Gf2Matrix) -> List[int]:
    """Canonical basis of the right kernel of ``m``."""
    return m.kernel_basis()


def solve_preimage(m: Gf2Matrix, b: int) -> Optional[int]:
    """Some solution of Mx = b, or None when none exists."""
    return m.solve_preimage(b)
