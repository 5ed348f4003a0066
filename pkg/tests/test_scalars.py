"""Tests for the exact scalar tower: polynomials, fractions, parse/render.

Covers the canonicalization contract, field arithmetic, exact evaluation,
the text grammar round trips, and randomized field axioms.  Sympy is used
only as an independent expand-and-gcd oracle.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kzrat.errors import (
    DegenerateScalar,
    DivisionByZero,
    EvaluationAtPole,
    ScalarSyntaxError,
    UnknownVariable,
)
from kzrat.scalars import (
    ParamPoly,
    ParamScalar,
    Z1,
    Z2,
    canonicalize,
    parse_scalar,
    poly_gcd,
    render_scalar,
)


def s(text):
    return parse_scalar(text)


# ──────────────────────────────────────────────
# Canonical form
# ──────────────────────────────────────────────

class TestCanonicalization:
    def test_content_removal(self):
        assert render_scalar(s("(2*z1 - 2*z2)/(2)")) == "z1 - z2"

    def test_gcd_cancellation(self):
        assert render_scalar(s("(z1^2 - z2^2)/(z1 - z2)")) == "z1 + z2"

    def test_sign_normalization(self):
        assert render_scalar(s("(z1 - z2)/(z2 - z1)")) == "-1"

    def test_zero_is_unique(self):
        zero = s("z1 - z1")
        assert zero.is_zero
        assert zero == ParamScalar.zero()
        assert render_scalar(zero) == "0"

    def test_zero_denominator_rejected(self):
        with pytest.raises(DegenerateScalar):
            ParamScalar(ParamPoly.one(), ParamPoly.zero())

    def test_canonicalize_idempotent(self):
        value = s("(3*z1^2 - 3*z2^2)/(6*z1 - 6*z2)")
        again = canonicalize(value)
        assert again == value
        assert again.num == value.num and again.den == value.den

    def test_denominator_normalization(self):
        value = s("z1/(2 - 4*z2)")
        # den has integer content 1 and positive leading coefficient
        assert value.den.content() == 1
        assert value.den.leading_coefficient() > 0
        assert render_scalar(value) == "(-(1/2)*z1)/(2*z2 - 1)"

    def test_equal_iff_same_rendering(self):
        a = s("(z1^2 - 2*z1*z2 + z2^2)/(z1 - z2)")
        b = s("z1 - z2")
        assert a == b
        assert render_scalar(a) == render_scalar(b)


# ──────────────────────────────────────────────
# Field operations
# ──────────────────────────────────────────────

class TestFieldOps:
    def test_additive_inverse_of_pole_terms(self):
        assert (s("1/(z1 - z2)") + s("1/(z2 - z1)")).is_zero

    def test_power_product(self):
        assert (Z1 - Z2) * (Z1 - Z2) ** 3 == (Z1 - Z2) ** 4

    def test_division_cancels_factor(self):
        # Oracle (sympy): expand both sides and compare raw term maps.
        sympy = pytest.importorskip("sympy")
        x, y = sympy.symbols("z1 z2")
        expected = sympy.expand((3 * x - 7 * y) * (x - y) ** 2)
        got = ((s("3*z1 - 7*z2") * (Z1 - Z2) ** 3) / (Z1 - Z2))
        got_sympy = sympy.expand(sympy.sympify(render_scalar(got).replace("^", "**")))
        assert sympy.simplify(got_sympy - expected) == 0

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            Z1 / ParamScalar.zero()

    def test_negative_power(self):
        assert (Z1 - Z2) ** -2 == ParamScalar.one() / (Z1 - Z2) ** 2
        with pytest.raises(DivisionByZero):
            ParamScalar.zero() ** -1


# ──────────────────────────────────────────────
# Evaluation
# ──────────────────────────────────────────────

class TestEvaluate:
    def test_simple_powers(self):
        value = (Z1 - Z2) ** 4
        assert value.evaluate({"z1": Fraction(0), "z2": Fraction(1)}) == 1

    def test_rational_coefficients(self):
        value = s("(3*z1 - 7*z2)/(10)")
        assert value.evaluate({"z1": Fraction(1), "z2": Fraction(0)}) == Fraction(3, 10)

    def test_moment_inverse_entry(self):
        # Entry (1,1) of the closed-form moment inverse at z1=2, z2=1.
        value = -(Z1 * Z2**2) / (Z1 - Z2) ** 2
        assert value.evaluate({"z1": Fraction(2), "z2": Fraction(1)}) == -2

    def test_pole_rejected(self):
        value = s("1/(z1 - z2)")
        with pytest.raises(EvaluationAtPole):
            value.evaluate({"z1": Fraction(3), "z2": Fraction(3)})

    def test_assignment_must_cover_both(self):
        with pytest.raises(ValueError):
            Z1.evaluate({"z1": Fraction(1)})
        with pytest.raises(ValueError):
            Z1.evaluate({"z1": Fraction(1), "z2": Fraction(0), "z3": Fraction(2)})


# ──────────────────────────────────────────────
# Parse / render
# ──────────────────────────────────────────────

class TestGrammar:
    @pytest.mark.parametrize(
        "text",
        [
            "(3/5)*z1^2*z2",
            "z1 - z2",
            "z1 + z2",
            "-1",
            "0",
            "(z1 + z2)/(z1 - z2)",
            "(z2^3 - (1/2)*z1)/(2*z2 - 1)",
            "3/10",
        ],
    )
    def test_canonical_round_trip(self, text):
        assert render_scalar(parse_scalar(text)) == text

    def test_parse_then_canonicalize(self):
        assert render_scalar(s("(z1^2 - z2^2)/(z1 - z2)")) == "z1 + z2"

    def test_two_term_polynomial(self):
        value = s("z1 - z2")
        assert len(dict(value.num.terms())) == 2

    def test_value_round_trip_from_random(self, rng):
        from conftest import random_fraction

        for _ in range(25):
            terms = {
                (rng.randint(0, 3), rng.randint(0, 3)): random_fraction(rng)
                for _ in range(rng.randint(1, 4))
            }
            den_terms = {
                (rng.randint(0, 2), rng.randint(0, 2)): random_fraction(rng)
                for _ in range(rng.randint(1, 3))
            }
            den = ParamPoly(den_terms)
            if den.is_zero:
                continue
            value = ParamScalar(ParamPoly(terms), den)
            assert parse_scalar(render_scalar(value)) == value

    def test_syntax_error_position(self):
        with pytest.raises(ScalarSyntaxError) as err:
            parse_scalar("z1 + + z2 @")
        assert err.value.position >= 0

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariable):
            parse_scalar("z3 + 1")

    def test_negative_exponent_rejected(self):
        with pytest.raises(ScalarSyntaxError):
            parse_scalar("z1^-2")

    def test_unbalanced_parens(self):
        with pytest.raises(ScalarSyntaxError):
            parse_scalar("(z1 + z2")

    def test_whitespace_insignificant(self):
        assert parse_scalar("z1+z2") == parse_scalar("  z1  +  z2 ")


# ──────────────────────────────────────────────
# Gcd details
# ──────────────────────────────────────────────

class TestPolyGcd:
    def test_gcd_of_powers(self):
        d = (Z1 - Z2).num
        assert poly_gcd(d**3, d**2) == d**2

    def test_gcd_mixed_content(self):
        f = ParamPoly({(1, 0): Fraction(2), (0, 1): Fraction(-2)})  # 2(z1 - z2)
        g = ParamPoly({(2, 0): Fraction(3), (0, 2): Fraction(-3)})  # 3(z1^2 - z2^2)
        assert poly_gcd(f, g) == ParamPoly({(1, 0): 1, (0, 1): -1})

    def test_gcd_against_sympy(self, rng):
        sympy = pytest.importorskip("sympy")
        x, y = sympy.symbols("z1 z2")
        from conftest import random_fraction

        for _ in range(10):
            common = ParamPoly(
                {
                    (rng.randint(0, 2), rng.randint(0, 2)): random_fraction(rng)
                    for _ in range(2)
                }
            )
            f_extra = ParamPoly({(rng.randint(0, 2), 0): random_fraction(rng), (0, 0): 1})
            g_extra = ParamPoly({(0, rng.randint(0, 2)): random_fraction(rng), (0, 0): 2})
            f = common * f_extra
            g = common * g_extra
            if f.is_zero or g.is_zero:
                continue
            ours = poly_gcd(f, g)

            def to_sympy(p):
                return sum(
                    sympy.Rational(c) * x**e1 * y**e2
                    for (e1, e2), c in dict(p.terms()).items()
                )

            theirs = sympy.gcd(
                sympy.Poly(to_sympy(f), x, y), sympy.Poly(to_sympy(g), x, y)
            )
            quotient = sympy.simplify(to_sympy(ours) / theirs.as_expr())
            assert quotient.is_constant(), (ours, theirs)


# ──────────────────────────────────────────────
# Field axioms (randomized)
# ──────────────────────────────────────────────

_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def scalars(draw, max_terms=3):
    terms = draw(
        st.dictionaries(
            st.tuples(st.integers(0, 2), st.integers(0, 2)),
            _fractions,
            min_size=1,
            max_size=max_terms,
        )
    )
    den_terms = draw(
        st.dictionaries(
            st.tuples(st.integers(0, 1), st.integers(0, 1)),
            _fractions,
            min_size=1,
            max_size=2,
        )
    )
    num = ParamPoly(terms)
    den = ParamPoly(den_terms)
    if den.is_zero:
        den = ParamPoly.one()
    return ParamScalar(num, den)


class TestFieldAxioms:
    @settings(max_examples=40, deadline=None)
    @given(scalars(), scalars(), scalars())
    def test_associativity_and_commutativity(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a

    @settings(max_examples=40, deadline=None)
    @given(scalars(), scalars(), scalars())
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @settings(max_examples=40, deadline=None)
    @given(scalars())
    def test_inverses(self, a):
        assert (a + (-a)).is_zero
        if not a.is_zero:
            assert a * (ParamScalar.one() / a) == ParamScalar.one()

    @settings(max_examples=30, deadline=None)
    @given(scalars(), scalars())
    def test_evaluate_is_homomorphism(self, a, b):
        point = {"z1": Fraction(5, 3), "z2": Fraction(-7, 2)}
        try:
            va, vb = a.evaluate(point), b.evaluate(point)
            v_sum = (a + b).evaluate(point)
            v_prod = (a * b).evaluate(point)
        except EvaluationAtPole:
            return
        assert v_sum == va + vb
        assert v_prod == va * vb
