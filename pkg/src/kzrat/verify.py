"""Independent checks: exact ODE residual, independence, numeric integration.

The residual check rewrites a candidate solution as a vector of rational
functions of z over Q(z1, z2), differentiates term by term, and canonicalizes
dW/dz + 2 A(z) W.  "Zero" means every entry reduces to the zero rational
function; there is no epsilon anywhere in the symbolic path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .errors import InvalidPath
from .ratfunc import ZPoly, ZRat, over_pole_powers, pole_term
from .residues import RationalSolution
from .scalars import ParamScalar
from .system import KZSystem

RatVec = Tuple[ZRat, ZRat, ZRat]


def solution_as_rational_functions(w: RationalSolution) -> RatVec:
    """The three components of W as reduced rational functions of z."""
    z = ZRat.z()
    z2_pow = z * z
    out = []
    for i in range(3):
        entry = (
            pole_term(w.residues.r1[i], w.z1, 2)
            + pole_term(w.residues.r2[i], w.z1, 1)
            + pole_term(w.residues.r3[i], w.z2, 2)
            + pole_term(w.residues.r4[i], w.z2, 1)
            + z2_pow * ZRat.from_scalar(w.poly_part[0][i])
            + z * ZRat.from_scalar(w.poly_part[1][i])
            + ZRat.from_scalar(w.poly_part[2][i])
        )
        out.append(entry)
    return tuple(out)


def differentiate(w: RationalSolution) -> RatVec:
    """Term-wise exact derivative of the partial-fraction form."""
    z = ZRat.z()
    two = ZRat.from_scalar(ParamScalar.from_rational(2))
    out = []
    for i in range(3):
        entry = (
            -two * pole_term(w.residues.r1[i], w.z1, 3)
            - pole_term(w.residues.r2[i], w.z1, 2)
            - two * pole_term(w.residues.r3[i], w.z2, 3)
            - pole_term(w.residues.r4[i], w.z2, 2)
            + two * z * ZRat.from_scalar(w.poly_part[0][i])
            + ZRat.from_scalar(w.poly_part[1][i])
        )
        out.append(entry)
    return tuple(out)


def coefficient_matrix(sys: KZSystem) -> Tuple[Tuple[ZRat, ...], ...]:
    """A(z) = P1/(z - z1) + P2/(z - z2) over rational functions of z."""
    rows = []
    for a in range(3):
        row = []
        for b in range(3):
            entry = ZRat.zero()
            for location, residue in sys.poles:
                coeff = residue[a][b]
                if coeff != 0:
                    entry = entry + pole_term(
                        ParamScalar.from_rational(coeff), location, 1
                    )
            row.append(entry)
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class ResidualReport:
    """Result of the exact check of dW/dz + 2 A(z) W = 0."""

    is_zero: bool
    entries: RatVec


def _linear_factors(w: RationalSolution) -> Tuple[ZPoly, ZPoly]:
    one = ParamScalar.one()
    return ZPoly((-w.z1, one)), ZPoly((-w.z2, one))


def _numerators_over_d2(w: RationalSolution) -> Tuple[Tuple[ZPoly, ZPoly, ZPoly], ZPoly]:
    """Numerators N with W = N / E^2, where E = (z - z1)(z - z2)."""
    d1, d2 = _linear_factors(w)
    e = d1 * d2
    e2 = e * e
    d1sq = d1 * d1
    d2sq = d2 * d2
    d1sq_d2 = d1sq * d2
    d1_d2sq = d1 * d2sq
    z = ZPoly.z()
    numerators = []
    for i in range(3):
        poly = (
            z * z * ZPoly.constant(w.poly_part[0][i])
            + z * ZPoly.constant(w.poly_part[1][i])
            + ZPoly.constant(w.poly_part[2][i])
        )
        n = (
            d2sq.scale(w.residues.r1[i])
            + d1_d2sq.scale(w.residues.r2[i])
            + d1sq.scale(w.residues.r3[i])
            + d1sq_d2.scale(w.residues.r4[i])
            + poly * e2
        )
        numerators.append(n)
    return tuple(numerators), e


def residual(sys: KZSystem, w: RationalSolution) -> ResidualReport:
    """dW/dz + 2 A(z) W over the common denominator E^3, canonicalized.

    With W = N / E^2 and A = B / E (B polynomial), the residual equals
    (N' E - 2 N E' + 2 B N) / E^3; it vanishes iff that numerator vector is
    identically zero.
    """
    numerators, e = _numerators_over_d2(w)
    d1, d2 = _linear_factors(w)
    e_prime = e.derivative()
    (_, m1), (_, m2) = sys.poles
    two = ParamScalar.from_rational(2)
    entries = []
    for i in range(3):
        acc = numerators[i].derivative() * e - numerators[i].scale(two) * e_prime
        for j in range(3):
            b_ij = d2.scale(ParamScalar.from_rational(m1[i][j])) + d1.scale(
                ParamScalar.from_rational(m2[i][j])
            )
            if not b_ij.is_zero:
                acc = acc + (b_ij * numerators[j]).scale(two)
        entries.append(over_pole_powers(acc, w.z1, w.z2, 3, 3))
    entries = tuple(entries)
    return ResidualReport(is_zero=all(e_.is_zero for e_ in entries), entries=entries)


def independence(solutions: Sequence[RationalSolution]) -> Tuple[bool, ZRat]:
    """Determinant of the 3x3 matrix with the solutions as columns.

    Independent iff the determinant is not the zero rational function.
    """
    if len(solutions) != 3:
        raise ValueError(f"need exactly 3 solutions, got {len(solutions)}")
    if len({w.poles for w in solutions}) != 1:
        raise ValueError("solutions must share their pole locations")
    columns = [_numerators_over_d2(w)[0] for w in solutions]
    m = [[columns[j][i] for j in range(3)] for i in range(3)]
    det_num = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    w0 = solutions[0]
    det = over_pole_powers(det_num, w0.z1, w0.z2, 6, 6)
    return (not det.is_zero, det)


# ---------------------------------------------------------------------------
# Numeric cross-check
# ---------------------------------------------------------------------------

# Dormand-Prince 5(4) embedded pair.
_DP_A = (
    (),
    (Fraction(1, 5),),
    (Fraction(3, 40), Fraction(9, 40)),
    (Fraction(44, 45), Fraction(-56, 15), Fraction(32, 9)),
    (
        Fraction(19372, 6561),
        Fraction(-25360, 2187),
        Fraction(64448, 6561),
        Fraction(-212, 729),
    ),
    (
        Fraction(9017, 3168),
        Fraction(-355, 33),
        Fraction(46732, 5247),
        Fraction(49, 176),
        Fraction(-5103, 18656),
    ),
    (
        Fraction(35, 384),
        Fraction(0),
        Fraction(500, 1113),
        Fraction(125, 192),
        Fraction(-2187, 6784),
        Fraction(11, 84),
    ),
)
_DP_C = (
    Fraction(0),
    Fraction(1, 5),
    Fraction(3, 10),
    Fraction(4, 5),
    Fraction(8, 9),
    Fraction(1),
    Fraction(1),
)
_DP_B5 = (
    Fraction(35, 384),
    Fraction(0),
    Fraction(500, 1113),
    Fraction(125, 192),
    Fraction(-2187, 6784),
    Fraction(11, 84),
    Fraction(0),
)
_DP_B4 = (
    Fraction(5179, 57600),
    Fraction(0),
    Fraction(7571, 16695),
    Fraction(393, 640),
    Fraction(-92097, 339200),
    Fraction(187, 2100),
    Fraction(1, 40),
)


def _to_mpf(value: Fraction, mpmath):
    value = Fraction(value)
    return mpmath.mpf(value.numerator) / value.denominator


def _integrate_dopri5(f, t0, t1, y0, rel_tol, mpmath):
    """Adaptive Dormand-Prince 5(4) over mpmath reals from t0 to t1."""
    mp = mpmath
    a_table = [[_to_mpf(x, mp) for x in row] for row in _DP_A]
    c_table = [_to_mpf(x, mp) for x in _DP_C]
    b5 = [_to_mpf(x, mp) for x in _DP_B5]
    b4 = [_to_mpf(x, mp) for x in _DP_B4]
    rel = mp.mpf(rel_tol)
    abs_floor = mp.mpf("1e-30")

    t = _to_mpf(t0, mp)
    t_end = _to_mpf(t1, mp)
    y = [_to_mpf(v, mp) for v in y0]
    direction = 1 if t_end > t else -1
    h = (t_end - t) / 16
    max_steps = 100000
    for _ in range(max_steps):
        if (t - t_end) * direction >= 0:
            return y
        if (t + h - t_end) * direction > 0:
            h = t_end - t
        stages = []
        for s in range(7):
            ys = list(y)
            for j, coeff in enumerate(a_table[s]):
                if coeff:
                    ys = [yi + h * coeff * kj for yi, kj in zip(ys, stages[j])]
            stages.append(f(t + c_table[s] * h, ys))
        y5 = [
            yi + h * sum(b * k[i] for b, k in zip(b5, stages))
            for i, yi in enumerate(y)
        ]
        y4 = [
            yi + h * sum(b * k[i] for b, k in zip(b4, stages))
            for i, yi in enumerate(y)
        ]
        err = mp.mpf(0)
        for v5, v4 in zip(y5, y4):
            scale = abs_floor + rel * max(abs(v5), mp.mpf(1))
            err = max(err, abs(v5 - v4) / scale)
        if err <= 1:
            t = t + h
            y = y5
        factor = mp.mpf("0.9") * (err + mp.mpf("1e-60")) ** mp.mpf("-0.2")
        factor = min(max(factor, mp.mpf("0.2")), mp.mpf(5))
        h = h * factor
    raise RuntimeError("adaptive integrator exceeded the step budget")


def numeric_crosscheck(
    sys: KZSystem,
    w: RationalSolution,
    start: Fraction,
    end: Fraction,
    tol: float = 1e-8,
):
    """Integrate the ODE numerically from an exact start value and compare.

    The system must be numerically instantiated (rational z1, z2) and the
    real path [start, end] must avoid both poles.  Uses an adaptive
    Dormand-Prince 5(4) pair over 64-significant-digit reals with relative
    step tolerance 1e-12.  Returns (passed, max componentwise relative
    error); components smaller than 1e-30 are compared absolutely.
    """
    import mpmath

    if sys.is_symbolic:
        raise ValueError("numeric cross-check requires rational pole locations")
    start = Fraction(start)
    end = Fraction(end)
    lo, hi = min(start, end), max(start, end)
    pole_values = [sys.z1.constant_value(), sys.z2.constant_value()]
    for pole in pole_values:
        if lo <= pole <= hi:
            raise InvalidPath(f"path [{lo}, {hi}] passes through the pole at {pole}")

    assignment = {"z1": pole_values[0], "z2": pole_values[1]}
    scalar_start = ParamScalar.from_rational(start)
    scalar_end = ParamScalar.from_rational(end)
    y_start = [x.evaluate(assignment) for x in w.evaluate(scalar_start)]
    y_expected = [x.evaluate(assignment) for x in w.evaluate(scalar_end)]

    (_, m1), (_, m2) = sys.poles
    with mpmath.workdps(64):
        p1 = [[_to_mpf(m1[a][b], mpmath) for b in range(3)] for a in range(3)]
        p2 = [[_to_mpf(m2[a][b], mpmath) for b in range(3)] for a in range(3)]
        zp1 = _to_mpf(pole_values[0], mpmath)
        zp2 = _to_mpf(pole_values[1], mpmath)

        def rhs(t, y):
            inv1 = 1 / (t - zp1)
            inv2 = 1 / (t - zp2)
            out = []
            for a in range(3):
                acc = mpmath.mpf(0)
                for b in range(3):
                    acc += (p1[a][b] * inv1 + p2[a][b] * inv2) * y[b]
                out.append(-2 * acc)
            return out

        y_numeric = _integrate_dopri5(rhs, start, end, y_start, "1e-12", mpmath)
        max_err = mpmath.mpf(0)
        for got, want_exact in zip(y_numeric, y_expected):
            want = _to_mpf(want_exact, mpmath)
            if abs(want) < mpmath.mpf("1e-30"):
                err = abs(got - want)
            else:
                err = abs(got - want) / abs(want)
            max_err = max(max_err, err)
        passed = max_err <= mpmath.mpf(tol)
        return passed, float(max_err)
