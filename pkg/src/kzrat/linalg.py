"""Small exact linear-algebra helpers over any field-like scalar type.

Matrices are tuples of row tuples; vectors are tuples.  Entries only need
arithmetic operators (+, -, *, /) and an ``is_zero``-style truth test via
``== zero``.  Nothing here is sized beyond 4x4, so clarity wins over speed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence, Tuple, TypeVar

from .scalars import ParamPoly, ParamScalar, divide_exact

T = TypeVar("T")

Matrix = Tuple[Tuple[T, ...], ...]
Vector = Tuple[T, ...]


def mat(rows: Sequence[Sequence[T]]) -> Matrix:
    return tuple(tuple(row) for row in rows)


def vec(entries: Sequence[T]) -> Vector:
    return tuple(entries)


def mat_vec(m: Matrix, v: Vector) -> Vector:
    return tuple(
        sum((row[j] * v[j] for j in range(1, len(v))), row[0] * v[0]) for row in m
    )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    return tuple(
        tuple(
            sum((a[i][s] * b[s][j] for s in range(1, k)), a[i][0] * b[0][j])
            for j in range(m)
        )
        for i in range(n)
    )

def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(m: Matrix, factor: T) -> Matrix:
    return tuple(tuple(factor * x for x in row) for row in m)


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(v: Vector, factor: T) -> Vector:
    return tuple(factor * x for x in v)


def identity(n: int, one: T, zero: T) -> Matrix:
    return tuple(
        tuple(one if i == j else zero for j in range(n)) for i in range(n)
    )


def solve_field(matrix: Matrix, rhs: Vector, zero: T) -> Vector:
    """Solve a square system by Gaussian elimination over a field.

    Raises ValueError if the matrix is singular.  Exact for exact scalars.
    """
    n = len(matrix)
    rows = [list(matrix[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if rows[r][col] != zero), None)
        if pivot_row is None:
            raise ValueError("singular matrix")
        rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
        pivot = rows[col][col]
        for r in range(n):
            if r == col:
                continue
            factor = rows[r][col] / pivot
            if factor == zero:
                continue
            rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return tuple(rows[i][n] / rows[i][i] for i in range(n))


def kernel_vector_rational(matrix: Matrix) -> Vector:
    """One nonzero rational kernel vector of a singular square matrix.

    Used for exact eigenvectors; raises ValueError if the kernel is trivial
    or has dimension above one.
    """
    n = len(matrix)
    rows = [list(map(Fraction, row)) for row in matrix]
    pivot_cols = []
    r = 0
    for col in range(n):
        pivot_row = next((i for i in range(r, n) if rows[i][col] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pivot = rows[r][col]
        rows[r] = [x / pivot for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivot_cols.append(col)
        r += 1
    free_cols = [c for c in range(n) if c not in pivot_cols]
    if len(free_cols) != 1:
        raise ValueError(f"kernel dimension is {len(free_cols)}, expected 1")
    free = free_cols[0]
    solution = [Fraction(0)] * n
    solution[free] = Fraction(1)
    for row_idx, col in enumerate(pivot_cols):
        solution[col] = -rows[row_idx][free]
    return tuple(solution)


def solve_fraction_free(
    matrix: Matrix, rhs_columns: Sequence[Vector]
) -> Tuple[Vector, ...]:
    """Solve A x = b for several right-hand sides with Bareiss elimination.

    Entries are ParamScalar.  Rows are first cleared to polynomials, then
    one-step fraction-free elimination keeps every intermediate value a
    polynomial (each exact division is by the previous pivot).  Returns one
    solution vector per right-hand side; raises ValueError when singular.
    """
    n = len(matrix)
    m = len(rhs_columns)
    # Clear denominators row by row: multiply through by the product of the
    # denominators appearing in that row of [A | b1 .. bm].
    rows: list[list[ParamPoly]] = []
    for i in range(n):
        entries = list(matrix[i]) + [col[i] for col in rhs_columns]
        common = ParamPoly.one()
        for e in entries:
            common = common * e.den
        cleared = []
        for e in entries:
            cleared.append(e.num * divide_exact(common, e.den))
        rows.append(cleared)

    prev_pivot = ParamPoly.one()
    pivot_order = []
    for col in range(n):
        pivot_row = next(
            (r for r in range(col, n) if not rows[r][col].is_zero), None
        )
        if pivot_row is None:
            raise ValueError("singular matrix")
        rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
        pivot = rows[col][col]
        for r in range(col + 1, n):
            updated = []
            for c in range(n + m):
                value = pivot * rows[r][c] - rows[r][col] * rows[col][c]
                updated.append(divide_exact(value, prev_pivot))
            rows[r] = updated
        prev_pivot = pivot
        pivot_order.append(col)

    # Back substitution in the fraction field.
    solutions = []
    for k in range(m):
        x = [ParamScalar.zero()] * n
        for i in reversed(range(n)):
            acc = ParamScalar(rows[i][n + k])
            for j in range(i + 1, n):
                acc = acc - ParamScalar(rows[i][j]) * x[j]
            x[i] = acc / ParamScalar(rows[i][i])
        solutions.append(tuple(x))
    return tuple(solutions)


def det3(m: Matrix) -> T:
    """Determinant of a 3x3 matrix by cofactor expansion."""
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def normalize_integer_vector(v: Vector) -> Vector:
    """Scale a rational vector to coprime integers, first nonzero entry > 0."""
    fracs = [Fraction(x) for x in v]
    nonzero = [x for x in fracs if x != 0]
    if not nonzero:
        return tuple(fracs)
    from math import gcd, lcm

    den = lcm(*(x.denominator for x in nonzero))
    ints = [x * den for x in fracs]
    g = 0
    for x in ints:
        g = gcd(g, int(x))
    ints = [x / g for x in ints]
    first = next(x for x in ints if x != 0)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(Fraction(x) for x in ints)
