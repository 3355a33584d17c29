"""Exact sparse linear algebra over the rationals.

Rows are dicts ``{column: Fraction}``.  Only what the double-centralizer oracle
needs: incremental reduced row echelon form, rank, nullspace.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

Row = dict[int, Fraction]


class RowEchelon:
    """Reduced row echelon form, built one row at a time."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, Row] = {}

    def reduce(self, row: Mapping[int, object]) -> Row:
        r: Row = {c: Fraction(v) for c, v in row.items() if v}
        for c in sorted(set(r) & self.pivots.keys()):
            f = r.get(c)
            if not f:
                continue
            for cc, v in self.pivots[c].items():
                nv = r.get(cc, 0) - f * v
                if nv:
                    r[cc] = nv
                else:
                    r.pop(cc, None)
        return r

    def add(self, row: Mapping[int, object]) -> bool:
        """Insert a row; return True if it raised the rank."""
        r = self.reduce(row)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        r = {c: v * inv for c, v in r.items()}
        for prow in self.pivots.values():
            f = prow.get(p)
            if f:
                for c, v in r.items():
                    nv = prow.get(c, 0) - f * v
                    if nv:
                        prow[c] = nv
                    else:
                        prow.pop(c, None)
        self.pivots[p] = r
        return True

    def contains(self, row: Mapping[int, object]) -> bool:
        return not self.reduce(row)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def nullspace(self) -> list[Row]:
        """Basis of ``{x : row . x = 0 for all rows}``; basis vector ``k`` has a
        one at the ``k``-th free column and zero at every other free column."""
        free = [c for c in range(self.ncols) if c not in self.pivots]
        basis = []
        for f in free:
            v: Row = {f: Fraction(1)}
            for p, prow in self.pivots.items():
                a = prow.get(f)
                if a:
                    v[p] = -a
            basis.append(v)
        return basis

    def free_columns(self) -> list[int]:
        return [c for c in range(self.ncols) if c not in self.pivots]


def rank(rows: Iterable[Mapping[int, object]], ncols: int) -> int:
    ech = RowEchelon(ncols)
    for r in rows:
        ech.add(r)
    return ech.rank


def nullspace(rows: Iterable[Mapping[int, object]], ncols: int) -> list[Row]:
    ech = RowEchelon(ncols)
    for r in rows:
        ech.add(r)
    return ech.nullspace()
