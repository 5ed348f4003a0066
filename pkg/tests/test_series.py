"""Tests for the coefficient recurrence: seeds, levels, resonances, chains."""

from fractions import Fraction

import pytest

from conftest import random_fraction
from kzrat.errors import InvalidSeed, UnsolvableResonance
from kzrat.scalars import ParamScalar, parse_scalar, render_scalar
from kzrat.series import (
    CoefficientTable,
    SeedSpec,
    ZERO_VEC,
    canonical_seeds,
    generate,
    recurrence_rhs,
    solve_level,
    validate_seed,
)
from kzrat.system import T_TOTAL
from kzrat.linalg import mat_vec


def vec(*texts):
    return tuple(parse_scalar(t) for t in texts)


PRINTED_W1 = {
    -2: vec("2", "-1", "-1"),
    -1: vec("-2*(z1 + z2)", "2*z2", "2*z1"),
    0: vec("-z1^2 + 4*z1*z2 - z2^2", "z1*(z1 - 2*z2)", "z2*(-2*z1 + z2)"),
    1: vec("0", "2*(z1 - z2)^3", "-2*(z1 - z2)^3"),
    2: vec("(z1 - z2)^4", "-(1/2)*(z1 - z2)^4", "-(1/2)*(z1 - z2)^4"),
}


class TestSeeds:
    def test_canonical_seeds_validate(self):
        for seed in canonical_seeds().values():
            validate_seed(seed)

    def test_canonical_seed_values(self):
        seeds = canonical_seeds()
        assert seeds["w1"].order == -2
        assert seeds["w1"].vector == vec("2", "-1", "-1")
        assert seeds["w2"].order == 2
        assert seeds["w2"].vector == vec("0", "1", "-1")
        assert seeds["w3"].order == 4
        assert seeds["w3"].vector == vec("1", "1", "1")

    def test_non_eigenvector_rejected(self):
        with pytest.raises(InvalidSeed):
            validate_seed(SeedSpec(order=2, vector=vec("1", "1", "1")))

    def test_wrong_order_rejected(self):
        # (0, 1, -1) is the eigenvalue-2 eigenvector, not eigenvalue-4.
        with pytest.raises(InvalidSeed):
            validate_seed(SeedSpec(order=4, vector=vec("0", "1", "-1")))

    def test_zero_seed_rejected(self):
        with pytest.raises(InvalidSeed):
            validate_seed(SeedSpec(order=2, vector=ZERO_VEC))

    def test_generate_validates_seed(self, sym_system):
        with pytest.raises(InvalidSeed):
            generate(sym_system, SeedSpec(order=2, vector=vec("1", "1", "1")), 4)


class TestRecurrenceRhs:
    def test_first_level_of_w1(self, sym_system):
        table = CoefficientTable(
            seed_order=-2, k_max=-2, coeffs={-2: PRINTED_W1[-2]}
        )
        rhs = recurrence_rhs(sym_system, -2, table)
        assert rhs == vec("-2*z1 - 2*z2", "4*z1 - 2*z2", "-2*z1 + 4*z2")

    def test_resonant_level_rhs_matches_display(self, sym_basis, sym_system):
        rhs = recurrence_rhs(sym_system, 1, sym_basis["w1"].table)
        expected = vec(
            "4*(z1 - z2)^4", "-2*(z1 - z2)^4", "-2*(z1 - z2)^4"
        )
        assert rhs == expected

    def test_below_seed_is_zero(self, sym_basis, sym_system):
        rhs = recurrence_rhs(sym_system, -4, sym_basis["w1"].table)
        assert all(x.is_zero for x in rhs)


class TestSolveLevel:
    def test_regular_level(self, sym_system):
        rhs = vec("-2*z1 - 2*z2", "4*z1 - 2*z2", "-2*z1 + 4*z2")
        coefficient, record = solve_level(sym_system, -1, rhs)
        assert record is None
        assert coefficient == PRINTED_W1[-1]

    def test_resonant_level_solves_and_records(self, sym_system):
        rhs = vec("4*(z1 - z2)^4", "-2*(z1 - z2)^4", "-2*(z1 - z2)^4")
        coefficient, record = solve_level(sym_system, 2, rhs)
        assert coefficient == PRINTED_W1[2]
        assert record is not None
        assert record.level == 2
        assert record.kernel_vector == (Fraction(0), Fraction(1), Fraction(-1))
        assert record.free_parameter == 0

    def test_unsolvable_resonance(self, sym_system):
        with pytest.raises(UnsolvableResonance) as err:
            solve_level(sym_system, 2, vec("0", "1", "-1"))
        assert err.value.level == 2

    def test_defining_identity_at_regular_levels(self, sym_system, rng):
        # (mI - 2T) x = rhs holds exactly for the returned x.
        for m in (-1, 0, 1, 3, 5, 7):
            rhs = tuple(
                ParamScalar.from_rational(random_fraction(rng)) for _ in range(3)
            )
            x, _ = solve_level(sym_system, m, rhs)
            image = tuple(
                ParamScalar.from_rational(m) * x[i]
                - sum(
                    (ParamScalar.from_rational(2 * T_TOTAL[i][j]) * x[j] for j in (1, 2)),
                    ParamScalar.from_rational(2 * T_TOTAL[i][0]) * x[0],
                )
                for i in range(3)
            )
            assert image == rhs


class TestGenerate:
    def test_w1_chain_reproduces_displays(self, sym_basis):
        table = sym_basis["w1"].table
        for k, expected in PRINTED_W1.items():
            assert table.coeff(k) == expected, f"coefficient {k}"

    def test_w2_chain_doubles_displayed_level3(self, sym_basis):
        expected = vec(
            "(2/5)*(z1 - z2)", "(2/5)*(2*z1 + 3*z2)", "-(2/5)*(3*z1 + 2*z2)"
        )
        assert sym_basis["w2"].table.coeff(3) == expected

    def test_w3_chain_matches_geometric_series_oracle(self, sym_system):
        # Oracle: product of the shifted geometric series for (z - zi)^-2,
        # built by convolution with no reference to the recurrence.
        seeds = canonical_seeds()
        table = generate(sym_system, seeds["w3"], 8)
        z1, z2 = sym_system.z1, sym_system.z2

        def double_pole_series(pole, upto):
            # (z - p)^-2 = sum_{a >= 1} a p^(a-1) z^(-a-1)
            coeffs = {}
            for a in range(1, upto + 1):
                coeffs[a + 1] = ParamScalar.from_rational(a) * pole ** (a - 1)
            return coeffs

        s1 = double_pole_series(z1, 8)
        s2 = double_pole_series(z2, 8)
        for k in range(4, 9):
            conv = ParamScalar.zero()
            for a, ca in s1.items():
                b = k - a
                if b in s2:
                    conv = conv + ca * s2[b]
            expected = tuple(conv for _ in range(3))  # times the (1,1,1) seed
            assert table.coeff(k) == expected, f"order {k}"

    def test_resonance_log(self, sym_basis):
        levels = [r.level for r in sym_basis["w1"].table.resonances]
        assert levels == [2, 4]
        kernels = [r.kernel_vector for r in sym_basis["w1"].table.resonances]
        assert kernels[0] == (Fraction(0), Fraction(1), Fraction(-1))
        assert kernels[1] == (Fraction(1), Fraction(1), Fraction(1))
        assert [r.level for r in sym_basis["w2"].table.resonances] == [4]
        assert [r.level for r in sym_basis["w3"].table.resonances] == []

    def test_defining_identity_along_chain(self, sym_system, sym_basis):
        # (mI - 2T) G_m - 2 sum_{r+s=m-1} T_r G_s = 0 for every generated level.
        for name in ("w1", "w2", "w3"):
            table = sym_basis[name].table
            for m in range(table.seed_order + 1, table.k_max + 1):
                rhs = recurrence_rhs(sym_system, m - 1, table)
                g_m = table.coeff(m)
                lhs = tuple(
                    ParamScalar.from_rational(m) * g_m[i]
                    - sum(
                        (
                            ParamScalar.from_rational(2 * T_TOTAL[i][j]) * g_m[j]
                            for j in (1, 2)
                        ),
                        ParamScalar.from_rational(2 * T_TOTAL[i][0]) * g_m[0],
                    )
                    for i in range(3)
                )
                assert lhs == rhs, f"{name} level {m}"

    def test_homogeneity_of_chain_coefficients(self, sym_basis, rng):
        # T_r is homogeneous of degree r+1, so G_k has degree k - k0.
        t = random_fraction(rng, nonzero=True)
        a, b = Fraction(3, 2), Fraction(-5, 7)
        scaled = {"z1": t * a, "z2": t * b}
        plain = {"z1": a, "z2": b}
        for name in ("w1", "w2", "w3"):
            table = sym_basis[name].table
            for k in range(table.seed_order, table.k_max + 1):
                factor = t ** (k - table.seed_order)
                for x in table.coeff(k):
                    assert x.evaluate(scaled) == factor * x.evaluate(plain)

    def test_kmax_below_seed_rejected(self, sym_system):
        with pytest.raises(ValueError):
            generate(sym_system, canonical_seeds()["w3"], 3)

    def test_resonant_component_checks(self, sym_system, sym_basis):
        # At level 2 the kernel is the eigenvalue-2 eigenvector; the rhs has
        # no component along it.  At level 4 the kernel is (1,1,1).
        rhs2 = recurrence_rhs(sym_system, 1, sym_basis["w1"].table)
        l2 = (0, 1, -1)
        component = sum(
            (rhs2[i] * ParamScalar.from_rational(l2[i]) for i in (1, 2)),
            rhs2[0] * ParamScalar.from_rational(l2[0]),
        )
        assert component.is_zero
        rhs4 = recurrence_rhs(sym_system, 3, sym_basis["w1"].table)
        component = sum(
            (rhs4[i] for i in (1, 2)), rhs4[0]
        )  # dot with (1, 1, 1)
        assert component.is_zero
