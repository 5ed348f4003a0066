"""Coefficient recurrence for the expansion of solutions at infinity.

A solution W(z) = sum_{k >= k0} z^(-k) G_k of the system satisfies the
level-by-level relation

    (m I - 2T) G_m = 2 * sum_{r + s = m - 1, r >= 0} T_r G_s .

The chain starts from a seed G_{k0} that must be an eigenvector of 2T with
eigenvalue k0.  Levels m where (m I - 2T) is singular (m in {-2, 2, 4}) are
resonant: the right-hand side must have no component along the kernel
eigenvector, and the free kernel component of the solution is fixed to zero
so each chain is canonical.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .errors import InvalidSeed, UnsolvableResonance
from .linalg import Vector, mat, mat_vec, solve_field, vec
from .scalars import ParamScalar
from .system import T_EIGEN, KZSystem, series_matrix, total_matrix

Vec3 = Tuple[ParamScalar, ParamScalar, ParamScalar]

ZERO_VEC: Vec3 = (ParamScalar.zero(), ParamScalar.zero(), ParamScalar.zero())


def _as_scalar_vec(v) -> Vec3:
    out = []
    for x in v:
        if isinstance(x, ParamScalar):
            out.append(x)
        else:
            out.append(ParamScalar.from_rational(Fraction(x)))
    return tuple(out)


@dataclass(frozen=True)
class SeedSpec:
    """Lowest-order coefficient of a chain: order k0 and the seed vector."""

    order: int
    vector: Vec3

    def __post_init__(self):
        object.__setattr__(self, "vector", _as_scalar_vec(self.vector))


@dataclass(frozen=True)
class ResonanceRecord:
    """A resonant level that was crossed, with the kernel direction and the
    (always zero) free parameter chosen for the solution there."""

    level: int
    kernel_vector: Vector
    free_parameter: Fraction = Fraction(0)


@dataclass(frozen=True)
class CoefficientTable:
    """Chain of expansion coefficients G_k, seed order through k_max."""

    seed_order: int
    k_max: int
    coeffs: Dict[int, Vec3] = field(default_factory=dict)
    resonances: Tuple[ResonanceRecord, ...] = ()

    def coeff(self, k: int) -> Vec3:
        """G_k; zero vector below the seed order."""
        return self.coeffs.get(k, ZERO_VEC)


def _shifted_matrix(m: int):
    """(m I - 2T) as a Fraction matrix."""
    from .system import T_TOTAL

    return mat(
        [
            [
                (Fraction(m) if a == b else Fraction(0)) - 2 * T_TOTAL[a][b]
                for b in range(3)
            ]
            for a in range(3)
        ]
    )


def _eigen_components(rhs: Vec3) -> Tuple[ParamScalar, ParamScalar, ParamScalar]:
    """Coordinates of rhs in the eigenbasis of T (exact 3x3 solve)."""
    basis = mat(
        [
            [ParamScalar.from_rational(T_EIGEN.vectors[j][i]) for j in range(3)]
            for i in range(3)
        ]
    )
    return solve_field(basis, vec(rhs), ParamScalar.zero())


def validate_seed(seed: SeedSpec) -> None:
    """Reject seeds that are zero or not eigenvectors of 2T with value = order."""
    if all(x.is_zero for x in seed.vector):
        raise InvalidSeed("seed vector must be nonzero")
    shifted = _shifted_matrix(seed.order)
    image = mat_vec(shifted, seed.vector)
    if not all(x.is_zero for x in image):
        raise InvalidSeed(
            f"seed vector is not an eigenvector of 2T with eigenvalue {seed.order}"
        )


def recurrence_rhs(sys: KZSystem, q: int, table: CoefficientTable) -> Vec3:
    """2 * sum_{r+s=q, r>=0} T_r G_s; the sum is finite below the seed order."""
    acc = list(ZERO_VEC)
    for r in range(0, q - table.seed_order + 1):
        s = q - r
        g = table.coeffs.get(s)
        if g is None:
            continue
        t_r = series_matrix(sys, r)
        image = mat_vec(t_r, g)
        acc = [a + x for a, x in zip(acc, image)]
    two = ParamScalar.from_rational(2)
    return tuple(two * a for a in acc)


def solve_level(
    sys: KZSystem, m: int, rhs: Vec3
) -> Tuple[Vec3, Optional[ResonanceRecord]]:
    """Solve (m I - 2T) G_m = rhs exactly.

    Non-resonant m: unique solution by exact elimination.  Resonant m
    (m equals an eigenvalue of 2T): decompose rhs in the eigenbasis, require
    a zero component along the kernel eigenvector, and return the particular
    solution with zero kernel component plus a ResonanceRecord.
    """
    doubled = [2 * value for value in T_EIGEN.values]
    if Fraction(m) not in doubled:
        shifted = _shifted_matrix(m)
        shifted_scalars = mat(
            [[ParamScalar.from_rational(x) for x in row] for row in shifted]
        )
        solution = solve_field(shifted_scalars, vec(rhs), ParamScalar.zero())
        return tuple(solution), None

    components = _eigen_components(rhs)
    solution = list(ZERO_VEC)
    kernel_vector = None
    for (value, vector), comp in zip(T_EIGEN.pairs, components):
        gap = Fraction(m) - 2 * value
        if gap == 0:
            kernel_vector = vector
            if not comp.is_zero:
                raise UnsolvableResonance(m, comp)
            continue
        scale = comp / ParamScalar.from_rational(gap)
        solution = [
            s + scale * ParamScalar.from_rational(v)
            for s, v in zip(solution, vector)
        ]
    record = ResonanceRecord(level=m, kernel_vector=kernel_vector)
    return tuple(solution), record


def generate(sys: KZSystem, seed: SeedSpec, k_max: int) -> CoefficientTable:
    """Run the recurrence from the seed up to k_max (free parameters zero)."""
    validate_seed(seed)
    if k_max < seed.order:
        raise ValueError(f"k_max={k_max} is below the seed order {seed.order}")
    coeffs: Dict[int, Vec3] = {seed.order: seed.vector}
    resonances = []
    table = CoefficientTable(seed_order=seed.order, k_max=k_max, coeffs=coeffs)
    for m in range(seed.order + 1, k_max + 1):
        rhs = recurrence_rhs(sys, m - 1, table)
        coefficient, record = solve_level(sys, m, rhs)
        coeffs[m] = coefficient
        if record is not None:
            resonances.append(record)
    return CoefficientTable(
        seed_order=seed.order,
        k_max=k_max,
        coeffs=coeffs,
        resonances=tuple(resonances),
    )


# Canonical seeds for the three basis chains: eigenvectors of 2T at orders
# equal to their eigenvalues (-2, 2, and 4).
def canonical_seeds() -> Dict[str, SeedSpec]:
    by_value = {int(2 * value): vector for value, vector in T_EIGEN.pairs}
    return {
        "w1": SeedSpec(order=-2, vector=_as_scalar_vec(by_value[-2])),
        "w2": SeedSpec(order=2, vector=_as_scalar_vec(by_value[2])),
        "w3": SeedSpec(order=4, vector=_as_scalar_vec(by_value[4])),
    }
