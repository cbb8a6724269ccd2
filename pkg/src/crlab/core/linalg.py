"""Exact row reduction over Q(i)."""
from __future__ import annotations

from .numbers import gauss


def row_echelon(rows):
    """Reduced row echelon form of ``rows`` (lists of numbers).

    Returns ``(echelon_rows, pivot_columns)``; zero rows are dropped.
    """
    work = [[gauss(x) for x in row] for row in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((k for k in range(r, len(work)) if work[k][col]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = work[r][col].inverse()
        work[r] = [x * inv for x in work[r]]
        for k in range(len(work)):
            if k != r and work[k][col]:
                f = work[k][col]
                work[k] = [a - f * b for a, b in zip(work[k], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(rows):
    return len(row_echelon(rows)[1])


class IncrementalBasis:
    """Echelonized span of sparse vectors (dicts ``column -> value``).

    :meth:`add` reduces a vector against the current basis and keeps it when
    it is independent.  Columns may be any sortable keys.
    """

    def __init__(self):
        self._rows = {}  # pivot column -> row (pivot entry normalized to 1)

    def __len__(self):
        return len(self._rows)

    def reduce(self, vec):
        vec = {k: gauss(v) for k, v in vec.items() if v}
        # stored rows vanish on every other pivot column, so one pass suffices
        for col in [c for c in vec if c in self._rows]:
            f = vec.get(col)
            if not f:
                continue
            for k, v in self._rows[col].items():
                nv = vec.get(k, 0) - f * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
        return vec

    def add(self, vec):
        """Add ``vec``; return True when it enlarged the span."""
        vec = self.reduce(vec)
        if not vec:
            return False
        col = min(vec)
        inv = vec[col].inverse()
        vec = {k: v * inv for k, v in vec.items()}
        for row in self._rows.values():
            f = row.get(col)
            if f:
                for k, v in vec.items():
                    nv = row.get(k, 0) - f * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        self._rows[col] = vec
        return True

    def contains(self, vec):
        return not self.reduce(vec)
