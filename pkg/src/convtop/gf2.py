"""Dense GF(2) linear algebra on word-packed rows.

Each row is a Python int used as a bitset (bit j = column j), so row
XOR is one machine-word-vectorized operation and matrices at desk
scale never touch numpy.
"""

from __future__ import annotations

from typing import Iterable, List


class GF2Matrix:
    """Immutable dense bit matrix over the two-element field."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Iterable[int] = ()):
        rows = list(rows) if rows else [0] * nrows
        if len(rows) != nrows:
            raise ValueError("row count mismatch")
        if ncols < 0 or nrows < 0:
            raise ValueError("negative dimensions")
        mask = (1 << ncols) - 1
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "rows", tuple(r & mask for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("GF2Matrix is immutable")

    @classmethod
    def from_entries(cls, entries: Iterable[Iterable[int]]) -> "GF2Matrix":
        entries = [list(r) for r in entries]
        ncols = len(entries[0]) if entries else 0
        rows = []
        for r in entries:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            rows.append(sum((1 << j) for j, x in enumerate(r) if x % 2))
        return cls(len(entries), ncols, rows)

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        return cls(n, n, [1 << i for i in range(n)])

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError("entry out of bounds")
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> List[List[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.rows)

    def mul(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch in product")
        cols = [0] * other.ncols
        for i, r in enumerate(other.rows):
            x = r
            while x:
                j = (x & -x).bit_length() - 1
                cols[j] |= 1 << i
                x &= x - 1
        rows = []
        for r in self.rows:
            acc = 0
            for j, col in enumerate(cols):
                if (r & col).bit_count() & 1:
                    acc |= 1 << j
            rows.append(acc)
        return GF2Matrix(self.nrows, other.ncols, rows)

    def rank(self) -> int:
        work = list(self.rows)
        rank = 0
        for col in range(self.ncols):
            pivot = None
            for i in range(rank, len(work)):
                if (work[i] >> col) & 1:
                    pivot = i
                    break
            if pivot is None:
                continue
            work[rank], work[pivot] = work[pivot], work[rank]
            for i in range(len(work)):
                if i != rank and ((work[i] >> col) & 1):
                    work[i] ^= work[rank]
            rank += 1
            if rank == len(work):
                break
        return rank

    def __eq__(self, other) -> bool:
        return (isinstance(other, GF2Matrix) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.nrows, self.ncols, self.rows))

    def __repr__(self) -> str:
        return f"GF2Matrix({self.nrows}x{self.ncols})"


def gf2_rank(M: GF2Matrix) -> int:
    """Rank over GF(2); the input is not modified."""
    return M.rank()
