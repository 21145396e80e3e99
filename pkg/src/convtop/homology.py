"""Reduced Z2 simplicial homology via boundary-matrix ranks.

Reduced homology is implemented with an explicit augmentation row: the
boundary of every vertex is the (virtual) empty simplex, so the i=0
boundary matrix has a single all-ones row.  The empty complex is
flagged rather than reported through a dimension -1 Betti number.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Tuple

from .complexes import SimplicialComplex, Subcomplex
from .gf2 import GF2Matrix


@dataclass(frozen=True)
class BettiProfile:
    """values[i] is the i-th reduced Z2 Betti number."""

    values: Tuple[int, ...]
    complex_is_empty: bool = False

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def to_json_dict(self) -> dict:
        return {"betti": list(self.values), "empty": self.complex_is_empty}


def boundary_matrix(K: SimplicialComplex, i: int) -> GF2Matrix:
    """Z2 boundary operator from i-chains to (i-1)-chains.

    Rows are indexed by (i-1)-simplices in canonical order; for i=0 the
    single row is the augmentation map.  Columns are the i-simplices.
    """
    if i < 0:
        raise ValueError("i must be >= 0")
    cols = K.simplices_of_dim(i)
    if i == 0:
        row = (1 << len(cols)) - 1
        return GF2Matrix(1, len(cols), [row])
    row_index = {s: r for r, s in enumerate(K.simplices_of_dim(i - 1))}
    rows = [0] * len(row_index)
    for j, s in enumerate(cols):
        for face in combinations(sorted(s), len(s) - 1):
            rows[row_index[frozenset(face)]] |= 1 << j
    return GF2Matrix(len(row_index), len(cols), rows)


def reduced_betti(K: SimplicialComplex, up_to: int) -> BettiProfile:
    """Reduced Z2 Betti numbers for 0 <= i < up_to."""
    if up_to < 1:
        raise ValueError("up_to must be >= 1")
    if not K.simplices:
        return BettiProfile(tuple(0 for _ in range(up_to)), complex_is_empty=True)
    values = []
    rank_next = boundary_matrix(K, 0).rank()
    for i in range(up_to):
        rank_i = rank_next
        n_i = len(K.simplices_of_dim(i))
        rank_next = boundary_matrix(K, i + 1).rank() if i + 1 <= K.dim else 0
        values.append(n_i - rank_i - rank_next)
    return BettiProfile(tuple(values))


def betti_of_subcomplex(S: Subcomplex, up_to: int) -> BettiProfile:
    return reduced_betti(S.as_complex(), up_to)
