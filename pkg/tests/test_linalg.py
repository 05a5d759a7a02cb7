"""Exact elimination: minimal-support solving and nullspace bases."""

from fractions import Fraction

from gossez_lab.linalg import nullspace, solve_minimal

F = Fraction


def rows_of(*rows):
    return [[F(v) for v in row] for row in rows]


def test_solve_prefers_leftmost_columns():
    # one equation, three unknowns: x2 + x3 = 1 with zero coefficient first
    rows = rows_of([0, 1, 1])
    solution = solve_minimal(rows, [F(1)])
    assert solution == [F(0), F(1), F(0)]


def test_solve_exact_values():
    rows = rows_of([2, 1], [1, -1])
    x, y = solve_minimal(rows, [F(1), F(2)])
    assert 2 * x + y == 1 and x - y == 2
    assert x == F(1) and y == F(-1)


def test_solve_detects_inconsistency():
    rows = rows_of([1, 1], [2, 2])
    assert solve_minimal(rows, [F(1), F(3)]) is None
    # same dependent rows, consistent rhs
    assert solve_minimal(rows, [F(1), F(2)]) == [F(1), F(0)]


def test_solve_no_equations():
    assert solve_minimal([], []) == []


def test_nullspace_dimensions_and_orthogonality():
    rows = rows_of([1, 2, 0, -1], [0, 0, 1, 1])
    basis = nullspace(rows, 4)
    assert len(basis) == 2
    for vec in basis:
        for row in rows:
            assert sum(r * v for r, v in zip(row, vec)) == 0


def test_nullspace_of_zero_rows_is_full_space():
    basis = nullspace(rows_of([0, 0, 0]), 3)
    assert len(basis) == 3


def test_nullspace_empty_rows():
    basis = nullspace([], 2)
    assert basis == [[F(1), F(0)], [F(0), F(1)]]
