"""Exact Gaussian elimination over the ScalarExt function field.

Pivots are chosen by smallest stored size (terms in numerator plus
denominator) to limit expression swell.  Matrices are lists of row lists.
"""

from __future__ import annotations

from .coeffring import ScalarExt


class InconsistentSystem(ValueError):
    pass


def _size(x: ScalarExt) -> int:
    return len(x.num) + len(x.den)


def _pick_pivot(rows, col, candidates):
    best, best_size = None, None
    for r in candidates:
        x = rows[r][col]
        if x:
            sz = _size(x)
            if best is None or sz < best_size:
                best, best_size = r, sz
    return best


def row_reduce(matrix, ncols: int | None = None):
    """Reduced row echelon form on the first ``ncols`` columns.

    Returns (rows, pivots) where pivots is a list of (row, col).  Rows are
    copied, the input is left untouched.
    """
    rows = [list(r) for r in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0]) if ncols is None else ncols
    pivots = []
    free = list(range(len(rows)))
    for c in range(ncols):
        p = _pick_pivot(rows, c, free)
        if p is None:
            continue
        free.remove(p)
        inv = rows[p][c].inverse()
        rows[p] = [x * inv if x else x for x in rows[p]]
        for r in range(len(rows)):
            if r != p and rows[r][c]:
                f = rows[r][c]
                rows[r] = [x - f * y if y else x for x, y in zip(rows[r], rows[p])]
                rows[r] = [x.reduced() for x in rows[r]]
        pivots.append((p, c))
    return rows, pivots


def rank(matrix) -> int:
    return len(row_reduce(matrix)[1])


def solve(matrix, rhs):
    """Unique solution x of matrix @ x = rhs for a full-column-rank system.

    Raises InconsistentSystem when rhs is outside the column span.
    """
    ncols = len(matrix[0]) if matrix else 0
    aug = [list(r) + [b] for r, b in zip(matrix, rhs)]
    rows, pivots = row_reduce(aug, ncols)
    if len(pivots) != ncols:
        raise ValueError("matrix does not have full column rank")
    pivot_rows = {p for p, _ in pivots}
    for r, row in enumerate(rows):
        if r not in pivot_rows and row[ncols]:
            raise InconsistentSystem("right-hand side not in the column span")
    x = [None] * ncols
    for p, c in pivots:
        x[c] = rows[p][ncols].reduced()
    return x


def inverse(matrix):
    n = len(matrix)
    level = matrix[0][0].level
    one, zero = ScalarExt.one(level), ScalarExt.zero(level)
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(matrix)]
    rows, pivots = row_reduce(aug, n)
    if len(pivots) != n:
        raise ZeroDivisionError("singular matrix")
    out = [None] * n
    for p, c in pivots:
        out[c] = [x.reduced() for x in rows[p][n:]]
    return out


def matmul(a, b):
    level = (a[0][0] if a and a[0] else b[0][0]).level
    zero = ScalarExt.zero(level)
    out = []
    for row in a:
        new = []
        for j in range(len(b[0])):
            acc = zero
            for k, x in enumerate(row):
                if x and b[k][j]:
                    acc = acc + x * b[k][j]
            new.append(acc)
        out.append(new)
    return out


def identity(n: int, level: int):
    one, zero = ScalarExt.one(level), ScalarExt.zero(level)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matrices_equal(a, b) -> bool:
    return len(a) == len(b) and all(
        len(r) == len(s) and all(x == y for x, y in zip(r, s)) for r, s in zip(a, b)
    )
