"""Audit: exact comparison of computed values against the reference displays.

Every entry of the reference table is recomputed from the canonical pipeline
and classified:

  MATCH     computed and reference values are identical,
  SCALED    computed = factor * reference for a nonzero parameter-free factor,
  MISMATCH  anything else (including shape mismatches where the reference
            display gives a bare scalar in place of a vector).

The audit never aborts on a MISMATCH; the verdicts are the payload.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .reference import ENTRY, SCALAR, VECTOR, REFERENCE_FORMULAS, ReferenceFormula
from .scalars import ParamScalar, parse_scalar, render_scalar
from .series import recurrence_rhs
from .solutions import DEFAULT_K_MAX, BasisSolution, build_basis
from .system import KZSystem, symbolic_system

MATCH = "MATCH"
SCALED = "SCALED"
MISMATCH = "MISMATCH"


@dataclass(frozen=True)
class AuditItem:
    formula_id: str
    computed: Tuple[str, ...]
    reference: Tuple[str, ...]
    verdict: str
    factor: Optional[str] = None  # only for SCALED
    note: str = ""


@dataclass(frozen=True)
class AuditReport:
    items: Tuple[AuditItem, ...]

    def item(self, formula_id: str) -> AuditItem:
        for entry in self.items:
            if entry.formula_id == formula_id:
                return entry
        raise KeyError(formula_id)

    @property
    def mismatched_ids(self) -> Tuple[str, ...]:
        return tuple(i.formula_id for i in self.items if i.verdict != MATCH)


def _computed_values(
    sys: KZSystem, basis: Dict[str, BasisSolution]
) -> Dict[str, Tuple[ParamScalar, ...]]:
    w1, w2, w3 = basis["w1"], basis["w2"], basis["w3"]
    values: Dict[str, Tuple[ParamScalar, ...]] = {}
    for k in range(-2, 5):
        values[f"w1.G({k})"] = w1.table.coeff(k)
    values["w1.rhs(2)"] = recurrence_rhs(sys, 1, w1.table)
    values["w1.rhs(4)"] = recurrence_rhs(sys, 3, w1.table)
    for idx, vecs in enumerate(w1.residues.as_tuple(), start=1):
        values[f"w1.L{idx}"] = vecs
    values["w2.g(3)"] = w2.table.coeff(3)
    values["w2.rhs(4)"] = recurrence_rhs(sys, 3, w2.table)
    for idx, vecs in enumerate(w2.residues.as_tuple(), start=1):
        values[f"w2.M{idx}"] = vecs
    for idx, vecs in enumerate(w3.residues.as_tuple(), start=1):
        values[f"w3.N{idx}"] = vecs

    # True closed-form inverse entries that correct suspected misprints.
    from .residues import moment_inverse_closed_form

    inverse = moment_inverse_closed_form(sys.z1, sys.z2)
    values["Sinv(2,3)"] = (inverse[1][2],)
    values["Sinv(4,3)"] = (inverse[3][2],)
    return values


def _join_notes(*notes: str) -> str:
    return "; ".join(n for n in notes if n)


def _classify(
    formula: ReferenceFormula, computed: Tuple[ParamScalar, ...]
) -> AuditItem:
    computed_texts = tuple(render_scalar(x) for x in computed)
    reference_values = tuple(parse_scalar(t) for t in formula.texts)

    if formula.kind == SCALAR:
        # Reference shows a bare scalar; the computed value is a vector.
        scalar_value = reference_values[0]
        dynamic = "the reference display is a bare scalar where a vector is expected"
        if all(x == scalar_value for x in computed):
            dynamic += (
                "; the computed vector equals the reference scalar times (1, 1, 1)"
            )
        return AuditItem(
            formula_id=formula.formula_id,
            computed=computed_texts,
            reference=formula.texts,
            verdict=MISMATCH,
            note=_join_notes(dynamic, formula.note),
        )

    if computed == reference_values:
        return AuditItem(
            formula_id=formula.formula_id,
            computed=computed_texts,
            reference=formula.texts,
            verdict=MATCH,
            note=formula.note,
        )

    # Look for a single consistent ratio computed / reference.
    ratio: Optional[ParamScalar] = None
    consistent = True
    for got, want in zip(computed, reference_values):
        if want.is_zero:
            if not got.is_zero:
                consistent = False
                break
            continue
        r = got / want
        if ratio is None:
            ratio = r
        elif r != ratio:
            consistent = False
            break
    if consistent and ratio is not None:
        if ratio.is_constant:
            return AuditItem(
                formula_id=formula.formula_id,
                computed=computed_texts,
                reference=formula.texts,
                verdict=SCALED,
                factor=render_scalar(ratio),
                note=_join_notes(
                    f"computed = {render_scalar(ratio)} * reference", formula.note
                ),
            )
        return AuditItem(
            formula_id=formula.formula_id,
            computed=computed_texts,
            reference=formula.texts,
            verdict=MISMATCH,
            note=_join_notes(
                f"computed = ({render_scalar(ratio)}) * reference; the ratio "
                "depends on the parameters, so this is not a rescaling",
                formula.note,
            ),
        )
    return AuditItem(
        formula_id=formula.formula_id,
        computed=computed_texts,
        reference=formula.texts,
        verdict=MISMATCH,
        note=_join_notes(
            "no constant rescaling relates the computed and reference values",
            formula.note,
        ),
    )


def run_audit(k_max: int = DEFAULT_K_MAX) -> AuditReport:
    """Recompute everything symbolically and audit every reference formula."""
    sys = symbolic_system()
    basis = build_basis(sys, k_max=max(k_max, 5))
    values = _computed_values(sys, basis)
    items = tuple(
        _classify(formula, values[formula.formula_id])
        for formula in REFERENCE_FORMULAS
    )
    return AuditReport(items=items)
