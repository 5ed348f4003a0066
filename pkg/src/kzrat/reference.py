"""Reference table of the printed display values this construction reproduces.

Each entry records one display from the source derivation of the three basis
solutions, transcribed as parseable scalar text.  The audit recomputes every
value from the canonical pipeline (factor-2 recurrence, zero free parameters,
generic residue solve) and compares; several displays are suspected misprints
and are expected to earn non-MATCH verdicts.  Transcription notes record the
few places where the display itself is typographically damaged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

VECTOR = "vector"
SCALAR = "scalar"  # display gives a bare scalar where a vector is expected
ENTRY = "entry"  # a single scalar entry, compared scalar-to-scalar


@dataclass(frozen=True)
class ReferenceFormula:
    formula_id: str
    kind: str
    texts: Tuple[str, ...]
    note: str = ""


REFERENCE_FORMULAS: Tuple[ReferenceFormula, ...] = (
    # -- first chain: coefficients of the z^2-polynomial-part solution --------
    ReferenceFormula("w1.G(-2)", VECTOR, ("2", "-1", "-1")),
    ReferenceFormula("w1.G(-1)", VECTOR, ("-2*(z1 + z2)", "2*z2", "2*z1")),
    ReferenceFormula(
        "w1.G(0)",
        VECTOR,
        ("-z1^2 + 4*z1*z2 - z2^2", "z1*(z1 - 2*z2)", "z2*(-2*z1 + z2)"),
    ),
    ReferenceFormula(
        "w1.G(1)", VECTOR, ("0", "2*(z1 - z2)^3", "-2*(z1 - z2)^3")
    ),
    ReferenceFormula(
        "w1.rhs(2)",
        VECTOR,
        ("4*(z1 - z2)^4", "-2*(z1 - z2)^4", "-2*(z1 - z2)^4"),
    ),
    ReferenceFormula(
        "w1.G(2)",
        VECTOR,
        ("(z1 - z2)^4", "-(1/2)*(z1 - z2)^4", "-(1/2)*(z1 - z2)^4"),
    ),
    ReferenceFormula(
        "w1.G(3)",
        VECTOR,
        (
            "(3/5)*(z1 - z2)^4*(z1 + z2)",
            "(1/5)*(z1 - z2)^3*(6*z1^2 - 25*z1*z2 + 9*z2^2)",
            "-(1/5)*(z1 - z2)^3*(9*z1^2 - 25*z1*z2 + 6*z2^2)",
        ),
    ),
    ReferenceFormula(
        "w1.rhs(4)",
        VECTOR,
        (
            "(9/5)*(z1 - z2)^4*(3*z1^2 - 4*z1*z2 + 3*z2^2)",
            "(1/5)*(z1 - z2)^3*(6*z1^3 - 8*z1^2*z2 - 71*z1*z2^2 + 33*z2^3)",
            "-(1/5)*(z1 - z2)^3*(33*z1^3 - 71*z1^2*z2 - 8*z1*z2^2 + 6*z2^3)",
        ),
    ),
    ReferenceFormula(
        "w1.G(4)",
        VECTOR,
        (
            "(3/10)*(z1 - z2)^4*(3*z1^2 - 4*z1*z2 + 3*z2^2)",
            "(1/10)*(z1 - z2)^3*(15*z1^3 - 29*z1^2*z2 - 50*z1*z2^2 + 24*z2^3)",
            "-(1/10)*(z1 - z2)^3*(24*z1^3 - 50*z1^2*z2 - 29*z1*z2^2 + 15*z2^3)",
        ),
    ),
    # -- first solution's residue vectors -------------------------------------
    ReferenceFormula(
        "w1.L1",
        VECTOR,
        (
            "(1/10)*(3*z1 - 7*z2)*(z1 - z2)^3",
            "(1/10)*(3*z1 - 7*z2)*(z1 - z2)^3",
            "-(1/5)*(3*z1 - 7*z2)*(z1 - z2)^3",
        ),
    ),
    ReferenceFormula(
        "w1.L2",
        VECTOR,
        (
            "0",
            "(1/5)*(3*z1 - 7*z2)*(z1 - z2)^2",
            "-(1/5)*(3*z1 - 7*z2)*(z1 - z2)^2",
        ),
    ),
    ReferenceFormula(
        "w1.L3",
        VECTOR,
        (
            "(1/10)*(7*z1 - 3*z2)*(z1 - z2)^3",
            "-(1/5)*(7*z1 - 3*z2)*(z1 - z2)^3",
            "(1/10)*(7*z1 - 3*z2)*(z1 - z2)^3",
        ),
    ),
    ReferenceFormula(
        "w1.L4",
        VECTOR,
        (
            "0",
            "(1/5)*(7*z1 - 3*z2)*(z1 - z2)^3",
            "-(1/5)*(7*z1 - 3*z2)*(z1 - z2)^3",
        ),
        note=(
            "the swap symmetry z1 <-> z2 maps the order-1 residue at z1, which "
            "carries (z1 - z2)^2, onto this one; the displayed exponent 3 is a "
            "suspected misprint for 2"
        ),
    ),
    # -- second chain ---------------------------------------------------------
    ReferenceFormula(
        "w2.g(3)",
        VECTOR,
        (
            "(1/5)*(z1 - z2)",
            "(1/5)*(2*z1 + 3*z2)",
            "(1/5)*(-3*z1 - 2*z2)",
        ),
        note=(
            "the display's derivation step for this level dropped the factor 2 "
            "that the chain recurrence carries"
        ),
    ),
    ReferenceFormula(
        "w2.rhs(4)",
        VECTOR,
        (
            "(7/5)*(z1 - z2)*(z1 + z2)",
            "(1/5)*(z1^2 + z1*z2 + 8*z2^2)",
            "(1/5)*(-8*z1^2 - z1*z2 - z2^2)",
        ),
        note=(
            "downstream of the dropped factor 2: consistent with the halved "
            "level-3 coefficient, not with the canonical chain"
        ),
    ),
    ReferenceFormula(
        "w2.M1",
        VECTOR,
        (
            "(5*z1 + 3*z2)/(10*(z1 - z2))",
            "(z1*z2 + 9*(-2*z1^2 + 2*z1*z2 + z2^2))/(30*(z1 - z2)^2)",
            "-(z1*z2 - 3*z1*(z1 - 4*z2))/(30*(z1 - z2)^2)",
        ),
        note="downstream of the dropped factor 2 in the second chain",
    ),
    ReferenceFormula(
        "w2.M2",
        VECTOR,
        (
            "-(4*(z1 + z2))/(5*(z1 - z2)^2)",
            "-(-24*z1^2 + 46*z1*z2 - 12*z2^2)/(15*(z1 - z2)^3)",
            "(-12*z1^2 + 46*z1*z2 - 24*z2^2)/(15*(z1 - z2)^3)",
        ),
        note=(
            "downstream of the dropped factor 2 in the second chain; the "
            "display also shows a doubled plus sign, transcribed as a single "
            "plus"
        ),
    ),
    ReferenceFormula(
        "w2.M3",
        VECTOR,
        (
            "-(3*z1 + 5*z2)/(10*(z1 - z2))",
            "(z1*z2 + 3*(4*z1 - z2)*z2)/(30*(z1 - z2)^2)",
            "-(z1*z2 + 9*(z1^2 + 2*z1*z2 - 2*z2^2))/(30*(z1 - z2)^2)",
        ),
        note=(
            "downstream of the dropped factor 2 in the second chain; the "
            "display's third entry has an unbalanced parenthesis, transcribed "
            "with the closing parenthesis restored"
        ),
    ),
    ReferenceFormula(
        "w2.M4",
        VECTOR,
        (
            "(4*(z1 + z2))/(5*(z1 - z2)^2)",
            "(-24*z1^2 + 46*z1*z2 - 12*z2^2)/(15*(z1 - z2)^3)",
            "-(-12*z1^2 + 46*z1*z2 - 24*z2^2)/(15*(z1 - z2)^3)",
        ),
        note="downstream of the dropped factor 2 in the second chain",
    ),
    # -- third solution's residue vectors -------------------------------------
    ReferenceFormula(
        "w3.N1",
        VECTOR,
        ("1/(z1 - z2)^2", "1/(z1 - z2)^2", "1/(z1 - z2)^2"),
        note=(
            "the display writes the second pole parameter with a stray capital "
            "letter, transcribed as z2"
        ),
    ),
    ReferenceFormula(
        "w3.N2",
        SCALAR,
        ("2/(-z1 + z2)^3",),
        note="the display gives a bare scalar with no vector factor",
    ),
    ReferenceFormula(
        "w3.N3",
        VECTOR,
        ("1/(z1 - z2)^2", "1/(z1 - z2)^2", "1/(z1 - z2)^2"),
    ),
    ReferenceFormula(
        "w3.N4",
        SCALAR,
        ("-(2/(-z1 + z2)^3)",),
        note="the display gives a bare scalar with no vector factor",
    ),
    # -- closed-form inverse of the moment matrix -----------------------------
    ReferenceFormula(
        "Sinv(2,3)",
        ENTRY,
        ("(3*z1 + z2)/(z1 - z2)^3",),
        note=(
            "the displayed numerator 3*z1 + z2 is a suspected misprint for "
            "3*(z1 + z2); the entry must satisfy S * Sinv = I"
        ),
    ),
    ReferenceFormula(
        "Sinv(4,3)",
        ENTRY,
        ("-(3*z1 + z2)/(z1 - z2)^3",),
        note=(
            "the displayed numerator 3*z1 + z2 is a suspected misprint for "
            "3*(z1 + z2); the entry must satisfy S * Sinv = I"
        ),
    ),
)


def reference_ids() -> Tuple[str, ...]:
    return tuple(f.formula_id for f in REFERENCE_FORMULAS)
