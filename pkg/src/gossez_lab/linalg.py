"""Exact Gaussian elimination over the rationals.

Small and deterministic: pivots are chosen leftmost-first, so solutions put
their nonzero entries on the smallest possible column indices and free
variables are fixed to zero.  Used for the finite moment-matching systems
and for truncated annihilator (nullspace) computations.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]


def _rref(matrix: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (rref, pivot column per row)."""
    rows = [row[:] for row in matrix]
    pivots: list[int] = []
    ncols = len(rows[0]) if rows else 0
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def solve_minimal(rows: Matrix, rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve rows * x = rhs exactly, or return None if inconsistent.

    Free variables are zero, so the returned solution is supported on the
    leftmost pivot columns only.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    augmented = [row + [b] for row, b in zip(rows, rhs)]
    reduced, pivots = _rref(augmented)
    if ncols in pivots:
        return None  # a row reduced to 0 = nonzero
    solution = [Fraction(0)] * ncols
    for row, col in zip(reduced, pivots):
        solution[col] = row[-1]
    return solution


def nullspace(rows: Matrix, ncols: int) -> list[list[Fraction]]:
    """Basis of {x : rows * x = 0}, one vector per free column."""
    if not rows:
        return [
            [Fraction(1) if i == j else Fraction(0) for i in range(ncols)]
            for j in range(ncols)
        ]
    reduced, pivots = _rref(rows)
    pivot_set = set(pivots)
    basis: list[list[Fraction]] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * ncols
        vector[free] = Fraction(1)
        for row, col in zip(reduced, pivots):
            vector[col] = -row[free]
        basis.append(vector)
    return basis
