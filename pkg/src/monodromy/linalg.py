"""Exact dense/sparse linear algebra over a :class:`~monodromy.fields.Field`.

Matrices are lists of rows.  Nothing here ever touches floating point.
"""

from __future__ import annotations

from gmpy2 import mpq

from .errors import NotInvertible

__all__ = ["rank", "rref", "solve", "inverse", "row_space", "same_row_space", "kernel_dim"]


def rank(matrix):
    """Rank by fraction-free (Bareiss) elimination."""
    m = [list(row) for row in matrix]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    prev = mpq(1)
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            a = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, ncols):
                row_i[j] = (p * row_i[j] - a * row_r[j]) / prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def rref(rows):
    """Reduced row echelon form of a list of sparse rows (dict col -> value).

    Returns the nonzero rows as a tuple of sorted ``(col, value)`` tuples, which
    is a canonical, order-independent description of the row space.
    """
    pivots = {}  # pivot col -> row dict (normalized, pivot = 1)
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        for c in sorted(pivots):
            if c in r:
                f = r[c]
                for k, v in pivots[c].items():
                    nv = r.get(k, 0) - f * v
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
        if not r:
            continue
        lead = min(r)
        inv = 1 / r[lead]
        r = {k: v * inv for k, v in r.items()}
        # clear the new pivot column from existing rows
        for c, prow in pivots.items():
            if lead in prow:
                f = prow[lead]
                for k, v in r.items():
                    nv = prow.get(k, 0) - f * v
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
        pivots[lead] = r
    return tuple(tuple(sorted(pivots[c].items())) for c in sorted(pivots))


def row_space(vectors):
    return rref(vectors)


def same_row_space(a, b):
    return rref(a) == rref(b)


def kernel_dim(matrix):
    ncols = len(matrix[0]) if matrix else 0
    return ncols - rank(matrix)


def _reduce_row(r, pivots):
    # each pivot row only has columns >= its pivot, so the smallest hit increases
    while True:
        hit = [c for c in r if c in pivots]
        if not hit:
            return r
        c = min(hit)
        f = r[c]
        for k, v in pivots[c].items():
            nv = r.get(k, 0) - f * v
            if nv:
                r[k] = nv
            else:
                r.pop(k, None)


def solve(columns, rhs, ncols=None):
    """Solve A x = b where A is given by sparse columns (list of dict row -> value).

    ``rhs`` is a sparse dict row -> value.  Returns x as a list (a particular
    solution if A has a kernel); raises :class:`NotInvertible` if inconsistent.
    """
    n = len(columns) if ncols is None else ncols
    rows = {}
    for j, col in enumerate(columns):
        for i, v in col.items():
            if v:
                rows.setdefault(i, {})[j] = v
    for i, v in rhs.items():
        if v:
            rows.setdefault(i, {})[n] = v
    pivots = {}
    for row in rows.values():
        r = _reduce_row(dict(row), pivots)
        if not r:
            continue
        lead = min(r)
        if lead == n:
            raise NotInvertible("inconsistent linear system")
        p = r[lead]
        pivots[lead] = {k: v / p for k, v in r.items()}
    x = [mpq(0)] * n
    for c in sorted(pivots, reverse=True):
        row = pivots[c]
        s = row.get(n, 0)
        for k, v in row.items():
            if k != c and k != n:
                s -= v * x[k]
        x[c] = s
    return x


def inverse(matrix):
    """Inverse of a square dense matrix (list of rows)."""
    n = len(matrix)
    cols = [{i: matrix[i][j] for i in range(n) if matrix[i][j]} for j in range(n)]
    if rank(matrix) != n:
        raise NotInvertible("singular matrix")
    inv_cols = [solve(cols, {k: mpq(1)}) for k in range(n)]
    return [[inv_cols[j][i] for j in range(n)] for i in range(n)]
