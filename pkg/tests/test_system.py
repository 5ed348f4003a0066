"""Tests for the residue matrices, system construction, and exact eigensystem."""

from fractions import Fraction

import pytest

from kzrat.errors import DegenerateConfiguration, UnsupportedSpectrum
from kzrat.linalg import mat_mul, mat_vec
from kzrat.scalars import ParamScalar, render_scalar
from kzrat.system import (
    P1,
    P2,
    T_TOTAL,
    build_s3_system,
    eigensystem,
    identity_matrix,
    series_matrix,
    symbolic_system,
    total_matrix,
    transposition_matrix,
)


def F(n):
    return Fraction(n)


class TestTranspositionMatrices:
    def test_swap_12(self):
        assert transposition_matrix(1, 2, 3) == (
            (F(0), F(1), F(0)),
            (F(1), F(0), F(0)),
            (F(0), F(0), F(1)),
        )

    def test_swap_13(self):
        assert transposition_matrix(1, 3, 3) == (
            (F(0), F(0), F(1)),
            (F(0), F(1), F(0)),
            (F(1), F(0), F(0)),
        )

    def test_equal_indices_rejected(self):
        with pytest.raises(ValueError):
            transposition_matrix(1, 1, 3)
        with pytest.raises(ValueError):
            transposition_matrix(2, 1, 3)
        with pytest.raises(ValueError):
            transposition_matrix(1, 4, 3)

    def test_identity_is_separate(self):
        eye = identity_matrix(3)
        assert eye[0] == (F(1), F(0), F(0))
        assert mat_mul(P1, P1) == eye
        assert mat_mul(P2, P2) == eye

    def test_conjugation_swaps_residues(self):
        c = transposition_matrix(2, 3, 3)
        assert mat_mul(mat_mul(c, P1), c) == P2


class TestSystem:
    def test_symbolic_system(self):
        sys = symbolic_system()
        assert render_scalar(sys.z1) == "z1"
        assert render_scalar(sys.z2) == "z2"
        assert sys.multiplier == Fraction(-2)
        assert sys.is_symbolic

    def test_numeric_system(self):
        sys = build_s3_system(
            ParamScalar.from_rational(0), ParamScalar.from_rational(1)
        )
        assert not sys.is_symbolic

    def test_coincident_poles_rejected(self):
        one = ParamScalar.from_rational(1)
        with pytest.raises(DegenerateConfiguration):
            build_s3_system(one, one)

    def test_symbolically_equal_poles_rejected(self):
        z1 = ParamScalar.variable("z1")
        with pytest.raises(DegenerateConfiguration):
            build_s3_system(z1, z1)


class TestSeriesMatrix:
    def test_r0_is_linear_combination(self, sym_system):
        t0 = series_matrix(sym_system, 0)
        z1, z2 = sym_system.z1, sym_system.z2
        for a in range(3):
            for b in range(3):
                assert t0[a][b] == z1 * P1[a][b] + z2 * P2[a][b]

    def test_r0_on_seed_vector(self, sym_system):
        t0 = series_matrix(sym_system, 0)
        seed = tuple(ParamScalar.from_rational(x) for x in (2, -1, -1))
        image = mat_vec(t0, seed)
        from kzrat.scalars import parse_scalar

        expected = ("-z1 - z2", "2*z1 - z2", "-z1 + 2*z2")
        assert image == tuple(parse_scalar(t) for t in expected)

    def test_numeric_power_collapse(self):
        sys = build_s3_system(
            ParamScalar.from_rational(0), ParamScalar.from_rational(1)
        )
        t3 = series_matrix(sys, 3)
        for a in range(3):
            for b in range(3):
                assert t3[a][b] == ParamScalar.from_rational(P2[a][b])

    def test_negative_index_rejected(self, sym_system):
        with pytest.raises(ValueError):
            series_matrix(sym_system, -1)


class TestEigenSystem:
    def test_total_matrix_spectrum(self):
        eig = eigensystem(T_TOTAL)
        assert eig.values == (F(2), F(1), F(-1))
        assert eig.vectors == (
            (F(1), F(1), F(1)),
            (F(0), F(1), F(-1)),
            (F(2), F(-1), F(-1)),
        )

    def test_eigen_identity_holds_exactly(self):
        eig = eigensystem(T_TOTAL)
        for value, vector in eig.pairs:
            image = mat_vec(T_TOTAL, vector)
            assert image == tuple(value * x for x in vector)

    def test_doubled_spectrum(self):
        eig = eigensystem(T_TOTAL)
        assert tuple(2 * v for v in eig.values) == (F(4), F(2), F(-2))

    def test_identity_rejected(self):
        with pytest.raises(UnsupportedSpectrum):
            eigensystem(identity_matrix(3))

    def test_single_transposition_rejected(self):
        # Characteristic polynomial (x - 1)^2 (x + 1): repeated eigenvalue.
        with pytest.raises(UnsupportedSpectrum):
            eigensystem(P1)

    def test_total_is_p1_plus_p2(self, sym_system):
        assert total_matrix(sym_system) == T_TOTAL
