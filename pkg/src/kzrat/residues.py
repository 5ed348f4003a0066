"""Residue reconstruction: from expansion moments to the partial-fraction form.

A rational solution with double poles at z1, z2 and quadratic polynomial part,

    W(z) = R1/(z-z1)^2 + R2/(z-z1) + R3/(z-z2)^2 + R4/(z-z2)
           + z^2 c2 + z c1 + c0,

has z^(-k) expansion coefficients at infinity ("moments") given by

    (k-1) z1^(k-2) R1 + z1^(k-1) R2 + (k-1) z2^(k-2) R3 + z2^(k-1) R4,  k >= 1.

Matching the first four moments G_1..G_4 yields a 4x4 linear system in the
residue vectors; this module builds that system, solves it by fraction-free
elimination, and keeps the published closed-form inverse as cross-check data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .errors import DegenerateConfiguration
from .linalg import Matrix, mat, mat_mul, solve_fraction_free, vec
from .scalars import ParamScalar
from .series import CoefficientTable, Vec3, ZERO_VEC
from .system import KZSystem

MomentMatrix = Matrix  # 4x4 over ParamScalar; each entry acts blockwise on vectors


def _require_distinct(z1: ParamScalar, z2: ParamScalar) -> None:
    if z1 == z2:
        raise DegenerateConfiguration("pole locations must differ (z1 != z2)")


def build_moment_matrix(z1: ParamScalar, z2: ParamScalar) -> MomentMatrix:
    """The 4x4 scalar pattern linking residues (R1, R2, R3, R4) to G_1..G_4."""
    _require_distinct(z1, z2)
    zero = ParamScalar.zero()
    one = ParamScalar.one()
    two = ParamScalar.from_rational(2)
    three = ParamScalar.from_rational(3)
    return mat(
        [
            [zero, one, zero, one],
            [one, z1, one, z2],
            [two * z1, z1**2, two * z2, z2**2],
            [three * z1**2, z1**3, three * z2**2, z2**3],
        ]
    )


def moment_inverse_closed_form(z1: ParamScalar, z2: ParamScalar) -> MomentMatrix:
    """Closed-form inverse of the moment matrix, entered as data.

    Kept for cross-checking the generic solve; reconstruction never relies
    on it.  The entries at (2,3) and (4,3) are 3*(z1 + z2), not 3*z1 + z2;
    the audit carries the comparison against the uncorrected display.
    """
    _require_distinct(z1, z2)
    d = z1 - z2
    d2 = d**2
    d3 = d**3
    one = ParamScalar.one()
    two = ParamScalar.from_rational(2)
    three = ParamScalar.from_rational(3)
    six = ParamScalar.from_rational(6)
    return mat(
        [
            [
                -(z1 * z2**2) / d2,
                z2 * (two * z1 + z2) / d2,
                -(z1 + two * z2) / d2,
                one / d2,
            ],
            [
                (three * z1 - z2) * z2**2 / d3,
                -(six * z1 * z2) / d3,
                three * (z1 + z2) / d3,
                two / ((-d) ** 3),
            ],
            [
                -(z1**2 * z2) / d2,
                z1 * (z1 + two * z2) / d2,
                -(two * z1 + z2) / d2,
                one / d2,
            ],
            [
                z1**2 * (z1 - three * z2) / d3,
                (six * z1 * z2) / d3,
                -(three * (z1 + z2)) / d3,
                two / d3,
            ],
        ]
    )


@dataclass(frozen=True)
class ResidueSet:
    """Residue vectors: order-2 then order-1 at z1, order-2 then order-1 at z2."""

    r1: Vec3
    r2: Vec3
    r3: Vec3
    r4: Vec3

    def as_tuple(self) -> Tuple[Vec3, Vec3, Vec3, Vec3]:
        return (self.r1, self.r2, self.r3, self.r4)


def reconstruct_residues(
    z1: ParamScalar, z2: ParamScalar, moments: Sequence[Vec3]
) -> ResidueSet:
    """Solve the moment system for the four residue vectors, exactly.

    ``moments`` are the z^(-1)..z^(-4) expansion coefficients G_1..G_4.
    The solve runs component-wise (the system acts blockwise), using
    fraction-free elimination.
    """
    _require_distinct(z1, z2)
    if len(moments) != 4:
        raise ValueError(f"need exactly 4 moment vectors, got {len(moments)}")
    matrix = build_moment_matrix(z1, z2)
    # One right-hand side per vector component.
    columns = [vec([moments[row][comp] for row in range(4)]) for comp in range(3)]
    solved = solve_fraction_free(matrix, columns)
    residues = [
        tuple(solved[comp][row] for comp in range(3)) for row in range(4)
    ]
    return ResidueSet(*residues)


def moments_from_residues(
    z1: ParamScalar, z2: ParamScalar, residues: ResidueSet, k: int
) -> Vec3:
    """The z^(-k) expansion coefficient of the residue part, any k >= 1."""
    if k < 1:
        raise ValueError(f"moment index must be >= 1, got {k}")
    km1 = ParamScalar.from_rational(k - 1)
    acc = list(ZERO_VEC)
    if k >= 2:
        w1 = km1 * z1 ** (k - 2)
        w3 = km1 * z2 ** (k - 2)
        acc = [a + w1 * x for a, x in zip(acc, residues.r1)]
        acc = [a + w3 * x for a, x in zip(acc, residues.r3)]
    w2 = z1 ** (k - 1)
    w4 = z2 ** (k - 1)
    acc = [a + w2 * x for a, x in zip(acc, residues.r2)]
    acc = [a + w4 * x for a, x in zip(acc, residues.r4)]
    return tuple(acc)


@dataclass(frozen=True)
class RationalSolution:
    """A solution in partial-fraction form: polynomial part plus pole terms."""

    poly_part: Tuple[Vec3, Vec3, Vec3]  # coefficients of z^2, z^1, z^0
    residues: ResidueSet
    poles: Tuple[ParamScalar, ParamScalar]

    @property
    def z1(self) -> ParamScalar:
        return self.poles[0]

    @property
    def z2(self) -> ParamScalar:
        return self.poles[1]

    def evaluate(self, z: ParamScalar) -> Vec3:
        """Exact value at a point z distinct from both poles."""
        d1 = z - self.z1
        d2 = z - self.z2
        out = []
        for i in range(3):
            value = (
                self.residues.r1[i] / d1**2
                + self.residues.r2[i] / d1
                + self.residues.r3[i] / d2**2
                + self.residues.r4[i] / d2
                + z**2 * self.poly_part[0][i]
                + z * self.poly_part[1][i]
                + self.poly_part[2][i]
            )
            out.append(value)
        return tuple(out)

    def scaled(self, factor: ParamScalar) -> "RationalSolution":
        scale_vec = lambda v: tuple(factor * x for x in v)
        return RationalSolution(
            poly_part=tuple(scale_vec(v) for v in self.poly_part),
            residues=ResidueSet(*(scale_vec(v) for v in self.residues.as_tuple())),
            poles=self.poles,
        )

    def __add__(self, other: "RationalSolution") -> "RationalSolution":
        if self.poles != other.poles:
            raise ValueError("cannot add solutions with different poles")
        add_vec = lambda a, b: tuple(x + y for x, y in zip(a, b))
        return RationalSolution(
            poly_part=tuple(
                add_vec(a, b) for a, b in zip(self.poly_part, other.poly_part)
            ),
            residues=ResidueSet(
                *(
                    add_vec(a, b)
                    for a, b in zip(
                        self.residues.as_tuple(), other.residues.as_tuple()
                    )
                )
            ),
            poles=self.poles,
        )


def assemble_solution(
    sys: KZSystem, table: CoefficientTable, residues: ResidueSet
) -> RationalSolution:
    """Combine a chain's polynomial part (orders -2..0) with residue vectors."""
    return RationalSolution(
        poly_part=(table.coeff(-2), table.coeff(-1), table.coeff(0)),
        residues=residues,
        poles=(sys.z1, sys.z2),
    )


def verify_closed_form_inverse(z1: ParamScalar, z2: ParamScalar) -> bool:
    """True iff the stored closed-form inverse is exactly the inverse."""
    product = mat_mul(
        build_moment_matrix(z1, z2), moment_inverse_closed_form(z1, z2)
    )
    one = ParamScalar.one()
    zero = ParamScalar.zero()
    for i in range(4):
        for j in range(4):
            expected = one if i == j else zero
            if product[i][j] != expected:
                return False
    return True
