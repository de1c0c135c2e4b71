"""Exact linear algebra over the rationals for basis changes."""

from __future__ import annotations

from fractions import Fraction


class InconsistentSystem(ArithmeticError):
    pass


def row_reduce(rows, ncols):
    """Reduced row echelon form of a list of rows (copied).

    Returns ``(rref_rows, pivot_columns)``.
    """
    mat = [[Fraction(v) for v in row] for row in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(vectors):
    """Rank of a list of sparse vectors given as dicts ``key -> value``."""
    keys = sorted({k for v in vectors for k in v})
    index = {k: i for i, k in enumerate(keys)}
    rows = []
    for v in vectors:
        row = [0] * len(keys)
        for k, c in v.items():
            row[index[k]] = c
        rows.append(row)
    return len(row_reduce(rows, len(keys))[1]) if rows else 0


class SparseSolver:
    """Solve ``sum_k c_k * columns[k] == target`` for sparse columns.

    Columns are dicts ``key -> value`` assumed linearly independent.  The
    elimination is done once; each solve reads the target at the pivot keys
    and verifies the result against every key.
    """

    def __init__(self, columns):
        self.columns = [dict(col) for col in columns]
        keys = sorted({k for col in self.columns for k in col})
        # pivot keys of the (columns x keys) matrix give an invertible square block
        rows = [[col.get(key, 0) for key in keys] for col in self.columns]
        _, pivots = row_reduce(rows, len(keys))
        if len(pivots) != len(self.columns):
            raise ValueError("columns are linearly dependent")
        self._pivot_keys = [keys[p] for p in pivots]
        # square system restricted to the pivot keys
        square = [[col.get(key, 0) for col in self.columns] for key in self._pivot_keys]
        self._inverse = _invert(square)

    def solve(self, target):
        rhs = [Fraction(target.get(key, 0)) for key in self._pivot_keys]
        coeffs = [sum(a * b for a, b in zip(row, rhs)) for row in self._inverse]
        residual = dict(target)
        for c, col in zip(coeffs, self.columns):
            if c:
                for key, v in col.items():
                    residual[key] = residual.get(key, 0) - c * v
        if any(v for v in residual.values()):
            raise InconsistentSystem("target is not in the span of the columns")
        return coeffs


def _invert(square):
    k = len(square)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(square)]
    red, pivots = row_reduce(aug, 2 * k)
    if k and pivots[:k] != list(range(k)):
        raise ValueError("singular matrix")
    return [row[k:] for row in red]
