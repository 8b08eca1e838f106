"""Small exact linear solves used by the eigenspace-mass computations."""

from __future__ import annotations

from fractions import Fraction


def solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a nonsingular square system exactly.

    Fraction-free (Bareiss) forward elimination over a common-denominator
    integer matrix keeps intermediate entries as true minors, then back
    substitution runs over Fractions.  Raises ArithmeticError on a singular
    matrix; callers only pass Gram or Vandermonde-like systems that are
    nonsingular by construction.
    """
    m = len(matrix)
    denom = 1
    for row, b in zip(matrix, rhs):
        for x in list(row) + [b]:
            denom = denom * Fraction(x).denominator // _gcd(denom, Fraction(x).denominator)
    a = [[int(Fraction(x) * denom) for x in row] + [int(Fraction(b) * denom)]
         for row, b in zip(matrix, rhs)]

    prev = 1
    for col in range(m):
        pivot_row = next((r for r in range(col, m) if a[r][col] != 0), None)
        if pivot_row is None:
            raise ArithmeticError("singular system")
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
        pivot = a[col][col]
        for r in range(col + 1, m):
            for c in range(col + 1, m + 1):
                a[r][c] = (a[r][c] * pivot - a[r][col] * a[col][c]) // prev
            a[r][col] = 0
        prev = pivot

    x = [Fraction(0)] * m
    for r in range(m - 1, -1, -1):
        acc = Fraction(a[r][m])
        for c in range(r + 1, m):
            acc -= a[r][c] * x[c]
        x[r] = acc / a[r][r]
    return x


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
