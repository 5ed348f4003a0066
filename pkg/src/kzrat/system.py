"""The concrete linear system: permutation residue matrices and their spectrum.

The object of study is the 3x3 first-order system

    dW/dz = -2 (P1/(z - z1) + P2/(z - z2)) W

where P1 and P2 are the permutation matrices of the transpositions (1 2)
and (1 3) of the symmetric group on three letters.  This module builds the
residue matrices, the total matrix T = P1 + P2, the series matrices
T_r = z1^(r+1) P1 + z2^(r+1) P2 used by the coefficient recurrence, and the
exact rational eigensystem of integer matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import DegenerateConfiguration, UnsupportedSpectrum
from .linalg import (
    Matrix,
    Vector,
    kernel_vector_rational,
    mat,
    mat_add,
    normalize_integer_vector,
)
from .scalars import ParamScalar

IntMatrix = Matrix  # 3x3, Fraction entries


def transposition_matrix(i: int, j: int, n: int) -> IntMatrix:
    """Permutation matrix of the transposition (i j) on n letters, 1-based."""
    if not (1 <= i < j <= n):
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    rows = [[Fraction(0)] * n for _ in range(n)]
    for k in range(n):
        target = k
        if k == i - 1:
            target = j - 1
        elif k == j - 1:
            target = i - 1
        rows[k][target] = Fraction(1)
    return mat(rows)


def identity_matrix(n: int = 3) -> IntMatrix:
    return mat(
        [[Fraction(1 if a == b else 0) for b in range(n)] for a in range(n)]
    )


P1 = transposition_matrix(1, 2, 3)
P2 = transposition_matrix(1, 3, 3)
T_TOTAL = mat_add(P1, P2)


@dataclass(frozen=True)
class KZSystem:
    """Two simple poles with integer residue matrices and global multiplier -2."""

    poles: Tuple[Tuple[ParamScalar, IntMatrix], Tuple[ParamScalar, IntMatrix]]
    multiplier: Fraction = Fraction(-2)

    @property
    def z1(self) -> ParamScalar:
        return self.poles[0][0]

    @property
    def z2(self) -> ParamScalar:
        return self.poles[1][0]

    @property
    def is_symbolic(self) -> bool:
        return not (self.z1.is_constant and self.z2.is_constant)


def build_s3_system(z1: ParamScalar, z2: ParamScalar) -> KZSystem:
    """The system with residues P1 at z1 and P2 at z2; requires z1 != z2."""
    if z1 == z2:
        raise DegenerateConfiguration("pole locations must differ (z1 != z2)")
    return KZSystem(poles=((z1, P1), (z2, P2)))


def symbolic_system() -> KZSystem:
    return build_s3_system(ParamScalar.variable("z1"), ParamScalar.variable("z2"))


def series_matrix(sys: KZSystem, r: int) -> Matrix:
    """T_r = z1^(r+1) P1 + z2^(r+1) P2 over ParamScalar; defined for r >= 0."""
    if r < 0:
        raise ValueError(f"series matrix index must be >= 0, got {r}")
    w1 = sys.z1 ** (r + 1)
    w2 = sys.z2 ** (r + 1)
    (_, m1), (_, m2) = sys.poles
    return mat(
        [
            [w1 * m1[a][b] + w2 * m2[a][b] for b in range(3)]
            for a in range(3)
        ]
    )


def total_matrix(sys: KZSystem) -> IntMatrix:
    """T = P1 + P2, the sum of the residue matrices."""
    (_, m1), (_, m2) = sys.poles
    return mat_add(m1, m2)


@dataclass(frozen=True)
class EigenSystem:
    """Distinct rational eigenvalues with normalized integer eigenvectors."""

    pairs: Tuple[Tuple[Fraction, Vector], ...]

    @property
    def values(self) -> Tuple[Fraction, ...]:
        return tuple(value for value, _ in self.pairs)

    @property
    def vectors(self) -> Tuple[Vector, ...]:
        return tuple(vector for _, vector in self.pairs)


def _char_poly_3x3(m: IntMatrix) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    """Coefficients (c3, c2, c1, c0) of det(x I - m) = c3 x^3 + ... + c0."""
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    trace = a + e + i
    minors = (e * i - f * h) + (a * i - c * g) + (a * e - b * d)
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    return (Fraction(1), -trace, minors, -det)


def _rational_roots(coeffs: Tuple[Fraction, ...]) -> list[Fraction]:
    """All rational roots (without multiplicity) of a cubic, exact search."""
    from math import lcm

    den = lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    lead, a0 = ints[0], ints[-1]

    def divisors(n: int) -> list[int]:
        n = abs(n)
        if n == 0:
            return [0]
        out = []
        k = 1
        while k * k <= n:
            if n % k == 0:
                out.append(k)
                out.append(n // k)
            k += 1
        return sorted(set(out))

    def value(x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in coeffs:
            acc = acc * x + c
        return acc

    if a0 == 0:
        candidates = {Fraction(0)}
        # Factor out x and search the remaining quadratic's roots too.
        reduced = coeffs[:-1]
        candidates |= set(_rational_roots_quadratic(reduced))
        return sorted({r for r in candidates if value(r) == 0})

    roots = set()
    for p in divisors(a0):
        for q in divisors(lead):
            for sign in (1, -1):
                cand = Fraction(sign * p, q)
                if value(cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def _rational_roots_quadratic(coeffs: Tuple[Fraction, ...]) -> list[Fraction]:
    a, b, c = coeffs
    if c == 0:
        roots = {Fraction(0)}
        if a != 0:
            roots.add(-b / a)
        return sorted(roots)
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    # Exact rational square root check.
    num, den = disc.numerator, disc.denominator
    sn, sd = _isqrt_exact(num), _isqrt_exact(den)
    if sn is None or sd is None:
        return []
    root = Fraction(sn, sd)
    return sorted({(-b + root) / (2 * a), (-b - root) / (2 * a)})


def _isqrt_exact(n: int):
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None


def eigensystem(m: IntMatrix) -> EigenSystem:
    """Exact eigensystem of a 3x3 rational matrix with simple rational spectrum.

    The characteristic polynomial is solved by rational-root search; each
    eigenvector is the kernel of (m - value*I), normalized to coprime integer
    entries with positive first nonzero entry.  Matrices with repeated or
    irrational eigenvalues are rejected.
    """
    coeffs = _char_poly_3x3(m)
    roots = _rational_roots(coeffs)
    if len(roots) != 3:
        raise UnsupportedSpectrum(
            f"expected 3 distinct rational eigenvalues, found {len(roots)}: {roots}"
        )
    pairs = []
    for value in sorted(roots, reverse=True):
        shifted = mat(
            [
                [m[a][b] - (value if a == b else 0) for b in range(3)]
                for a in range(3)
            ]
        )
        vector = normalize_integer_vector(kernel_vector_rational(shifted))
        pairs.append((value, vector))
    return EigenSystem(pairs=tuple(pairs))


# The spectrum of T, computed once; the doubled system 2T has eigenvalues
# {4, 2, -2} with the same eigenvectors.
T_EIGEN = eigensystem(T_TOTAL)
RESONANT_LEVELS = tuple(int(2 * value) for value in T_EIGEN.values)
