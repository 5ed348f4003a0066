"""Serialization of solutions, series tables, and audit reports.

The JSON layout is fixed and deterministic (insertion-ordered keys, canonical
scalar text) so that identical configurations produce byte-identical output.
LaTeX output mirrors the same expressions with a structure simple enough to
re-parse in tests.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .audit import AuditReport
from .errors import DegenerateConfiguration
from .ratfunc import ZRat
from .residues import RationalSolution, ResidueSet
from .scalars import ParamScalar, parse_scalar, render_scalar
from .series import CoefficientTable, Vec3
from .system import KZSystem, build_s3_system

_RATIONAL_TEXT = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational_text(text: str) -> Fraction:
    """Rational literal: p, p/q, or -p/q.  No floating point accepted."""
    if not _RATIONAL_TEXT.match(text.strip()):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text.strip())


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------


def _vector_texts(v: Vec3) -> List[str]:
    return [render_scalar(x) for x in v]


def _mode_of(sys: KZSystem) -> str:
    return "symbolic" if sys.is_symbolic else "numeric"


def _parameter_text(value: ParamScalar) -> str:
    return render_scalar(value)


def solution_to_dict(name: str, w: RationalSolution, mode: str) -> dict:
    poly_part = []
    for power, vector in zip((2, 1, 0), w.poly_part):
        if any(not x.is_zero for x in vector):
            poly_part.append({"power": power, "vector": _vector_texts(vector)})
    poles = []
    pole_terms = (
        (w.z1, ((2, w.residues.r1), (1, w.residues.r2))),
        (w.z2, ((2, w.residues.r3), (1, w.residues.r4))),
    )
    for location, terms in pole_terms:
        entry_terms = []
        for order, vector in terms:
            if any(not x.is_zero for x in vector):
                entry_terms.append(
                    {"order": order, "vector": _vector_texts(vector)}
                )
        poles.append(
            {"location": _parameter_text(location), "terms": entry_terms}
        )
    return {"name": name, "polynomial_part": poly_part, "poles": poles}


def solutions_to_json(
    sys: KZSystem, named: Sequence[Tuple[str, RationalSolution]]
) -> str:
    mode = _mode_of(sys)
    payload = {
        "mode": mode,
        "parameters": {
            "z1": _parameter_text(sys.z1),
            "z2": _parameter_text(sys.z2),
        },
        "solutions": [solution_to_dict(name, w, mode) for name, w in named],
    }
    return json.dumps(payload, indent=2) + "\n"


def _vector_from_texts(texts: Sequence[str]) -> Vec3:
    if len(texts) != 3:
        raise ValueError(f"vector must have 3 entries, got {len(texts)}")
    return tuple(parse_scalar(t) for t in texts)


def load_solutions(text: str) -> Tuple[KZSystem, List[Tuple[str, RationalSolution]]]:
    """Rebuild a system and its solutions from the JSON produced above."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON: {exc}") from exc
    try:
        mode = payload["mode"]
        parameters = payload["parameters"]
        z1 = parse_scalar(parameters["z1"])
        z2 = parse_scalar(parameters["z2"])
        if mode == "numeric" and not (z1.is_constant and z2.is_constant):
            raise ValueError("numeric mode requires rational parameters")
        sys = build_s3_system(z1, z2)
        zero = ParamScalar.zero()
        zero_vec = (zero, zero, zero)
        solutions = []
        for entry in payload["solutions"]:
            poly = {2: zero_vec, 1: zero_vec, 0: zero_vec}
            for item in entry.get("polynomial_part", ()):
                poly[int(item["power"])] = _vector_from_texts(item["vector"])
            residue_vectors = {
                (0, 2): zero_vec,
                (0, 1): zero_vec,
                (1, 2): zero_vec,
                (1, 1): zero_vec,
            }
            poles = entry["poles"]
            if len(poles) != 2:
                raise ValueError("each solution must list exactly two poles")
            for pole_index, pole in enumerate(poles):
                location = parse_scalar(pole["location"])
                expected = sys.z1 if pole_index == 0 else sys.z2
                if location != expected:
                    raise ValueError(
                        f"pole {pole_index + 1} location {pole['location']!r} "
                        "does not match the declared parameters"
                    )
                for item in pole.get("terms", ()):
                    order = int(item["order"])
                    if order not in (1, 2):
                        raise ValueError(f"pole term order must be 1 or 2, got {order}")
                    residue_vectors[(pole_index, order)] = _vector_from_texts(
                        item["vector"]
                    )
            solution = RationalSolution(
                poly_part=(poly[2], poly[1], poly[0]),
                residues=ResidueSet(
                    residue_vectors[(0, 2)],
                    residue_vectors[(0, 1)],
                    residue_vectors[(1, 2)],
                    residue_vectors[(1, 1)],
                ),
                poles=(sys.z1, sys.z2),
            )
            solutions.append((entry["name"], solution))
        return sys, solutions
    except DegenerateConfiguration:
        raise
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed solution file: missing or bad field {exc}") from exc


def _display_range(table: CoefficientTable) -> range:
    # When the truncation sits below the seed order, still show (zero) rows.
    return range(min(table.seed_order, table.k_max), table.k_max + 1)


def table_to_dict(name: str, table: CoefficientTable) -> dict:
    return {
        "seed": {"order": table.seed_order, "name": name},
        "k_max": table.k_max,
        "coefficients": [
            {"k": k, "vector": _vector_texts(table.coeff(k))}
            for k in _display_range(table)
        ],
        "resonances": [
            {
                "level": r.level,
                "kernel_vector": [str(x) for x in r.kernel_vector],
                "free_parameter": str(r.free_parameter),
            }
            for r in table.resonances
        ],
    }


def series_to_json(sys: KZSystem, name: str, table: CoefficientTable) -> str:
    payload = {
        "mode": _mode_of(sys),
        "parameters": {
            "z1": _parameter_text(sys.z1),
            "z2": _parameter_text(sys.z2),
        },
        "series": table_to_dict(name, table),
    }
    return json.dumps(payload, indent=2) + "\n"


def audit_to_json(report: AuditReport) -> str:
    payload = {
        "items": [
            {
                "id": item.formula_id,
                "verdict": item.verdict,
                "factor": item.factor,
                "computed": list(item.computed),
                "reference": list(item.reference),
                "note": item.note,
            }
            for item in report.items
        ],
        "summary": {
            "total": len(report.items),
            "match": sum(1 for i in report.items if i.verdict == "MATCH"),
            "scaled": sum(1 for i in report.items if i.verdict == "SCALED"),
            "mismatch": sum(1 for i in report.items if i.verdict == "MISMATCH"),
        },
    }
    return json.dumps(payload, indent=2) + "\n"


def independence_to_json(independent: bool, det: ZRat) -> str:
    payload = {
        "independent": independent,
        "determinant": {
            "numerator": [render_scalar(c) for c in det.num.coeffs],
            "denominator": [render_scalar(c) for c in det.den.coeffs],
            "coefficient_order": "ascending powers of z",
        },
    }
    return json.dumps(payload, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Text
# ---------------------------------------------------------------------------


def solutions_to_text(
    sys: KZSystem, named: Sequence[Tuple[str, RationalSolution]]
) -> str:
    lines = [f"mode: {_mode_of(sys)}"]
    lines.append(
        f"parameters: z1 = {_parameter_text(sys.z1)}, z2 = {_parameter_text(sys.z2)}"
    )
    for name, w in named:
        lines.append("")
        lines.append(f"solution {name}")
        labels = ("z^2", "z", "1")
        for label, vector in zip(labels, w.poly_part):
            if any(not x.is_zero for x in vector):
                lines.append(f"  {label:>4} * {_bracketed(vector)}")
        for location, order, vector in (
            (w.z1, 2, w.residues.r1),
            (w.z1, 1, w.residues.r2),
            (w.z2, 2, w.residues.r3),
            (w.z2, 1, w.residues.r4),
        ):
            if any(not x.is_zero for x in vector):
                denom = f"(z - {_parameter_text(location)})"
                power = f"^{order}" if order > 1 else ""
                lines.append(f"  1/{denom}{power} * {_bracketed(vector)}")
    return "\n".join(lines) + "\n"


def _bracketed(v: Vec3) -> str:
    return "[" + ", ".join(render_scalar(x) for x in v) + "]"


def series_to_text(sys: KZSystem, name: str, table: CoefficientTable) -> str:
    lines = [f"mode: {_mode_of(sys)}"]
    lines.append(f"seed: {name} (order {table.seed_order}), k_max = {table.k_max}")
    for k in _display_range(table):
        lines.append(f"  G[{k:>3}] = {_bracketed(table.coeff(k))}")
    if table.resonances:
        lines.append("resonant levels:")
        for r in table.resonances:
            kernel = ", ".join(str(x) for x in r.kernel_vector)
            lines.append(
                f"  level {r.level}: kernel [{kernel}], free parameter "
                f"{r.free_parameter}"
            )
    return "\n".join(lines) + "\n"


def audit_to_text(report: AuditReport) -> str:
    lines = []
    for item in report.items:
        verdict = item.verdict
        if item.factor is not None:
            verdict = f"{verdict}({item.factor})"
        lines.append(f"{verdict:<12} {item.formula_id}")
        if item.note:
            lines.append(f"             note: {item.note}")
    match = sum(1 for i in report.items if i.verdict == "MATCH")
    lines.append(
        f"{len(report.items)} formulas audited: {match} MATCH, "
        f"{sum(1 for i in report.items if i.verdict == 'SCALED')} SCALED, "
        f"{sum(1 for i in report.items if i.verdict == 'MISMATCH')} MISMATCH"
    )
    return "\n".join(lines) + "\n"


def independence_to_text(independent: bool, det: ZRat) -> str:
    lines = [f"independent: {independent}"]
    lines.append("determinant numerator coefficients (ascending powers of z):")
    for i, c in enumerate(det.num.coeffs):
        lines.append(f"  z^{i}: {render_scalar(c)}")
    if det.den.degree() > 0:
        lines.append("determinant denominator coefficients:")
        for i, c in enumerate(det.den.coeffs):
            lines.append(f"  z^{i}: {render_scalar(c)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# LaTeX
# ---------------------------------------------------------------------------


def latex_scalar(s: ParamScalar) -> str:
    """LaTeX form of a scalar; \\frac only at the top level so tests can
    re-parse the output with simple rewrites."""
    if s.den.is_constant and s.den.constant_value() == 1:
        return _latex_poly_text(render_scalar(s))
    num = _latex_poly_text(render_scalar(ParamScalar(s.num)))
    den = _latex_poly_text(render_scalar(ParamScalar(s.den)))
    return rf"\frac{{{num}}}{{{den}}}"


def _latex_poly_text(text: str) -> str:
    out = text.replace("z1", "z_{1}").replace("z2", "z_{2}")
    out = re.sub(r"\^(\d+)", r"^{\1}", out)
    out = out.replace("*", r" \cdot ")
    return out


def latex_vector(v: Vec3) -> str:
    rows = r" \\ ".join(latex_scalar(x) for x in v)
    return rf"\begin{{pmatrix}} {rows} \end{{pmatrix}}"


def _latex_parameter(value: ParamScalar) -> str:
    return _latex_poly_text(render_scalar(value))


def solution_to_latex(name: str, w: RationalSolution) -> str:
    z1 = _latex_parameter(w.z1)
    z2 = _latex_parameter(w.z2)
    pieces = []
    for location, order, vector in (
        (z1, 2, w.residues.r1),
        (z1, 1, w.residues.r2),
        (z2, 2, w.residues.r3),
        (z2, 1, w.residues.r4),
    ):
        if any(not x.is_zero for x in vector):
            denom = (
                rf"(z - {location})^{{{order}}}" if order > 1 else rf"(z - {location})"
            )
            pieces.append(rf"\frac{{1}}{{{denom}}} {latex_vector(vector)}")
    for power, vector in zip((2, 1, 0), w.poly_part):
        if any(not x.is_zero for x in vector):
            prefix = {2: "z^{2} ", 1: "z ", 0: ""}[power]
            pieces.append(prefix + latex_vector(vector))
    body = " + ".join(pieces) if pieces else "0"
    return rf"W_{{\mathrm{{{name}}}}}(z) = {body}"


def solutions_to_latex(
    sys: KZSystem, named: Sequence[Tuple[str, RationalSolution]]
) -> str:
    lines = [
        "% mode: " + _mode_of(sys),
        "% parameters: z1 = "
        + render_scalar(sys.z1)
        + ", z2 = "
        + render_scalar(sys.z2),
    ]
    for name, w in named:
        lines.append(r"\[")
        lines.append(solution_to_latex(name, w))
        lines.append(r"\]")
    return "\n".join(lines) + "\n"


def series_to_latex(sys: KZSystem, name: str, table: CoefficientTable) -> str:
    lines = ["% seed: " + name, r"\begin{align*}"]
    rows = []
    for k in _display_range(table):
        rows.append(rf"G_{{{k}}} &= {latex_vector(table.coeff(k))}")
    lines.append(" \\\\\n".join(rows))
    lines.append(r"\end{align*}")
    return "\n".join(lines) + "\n"


def audit_to_latex(report: AuditReport) -> str:
    lines = [r"\begin{tabular}{llp{7cm}}"]
    lines.append(r"formula & verdict & note \\ \hline")
    for item in report.items:
        verdict = item.verdict
        if item.factor is not None:
            verdict += f" ({item.factor})"
        note = item.note.replace("<->", r"$\leftrightarrow$")
        lines.append(
            rf"\texttt{{{item.formula_id}}} & {verdict} & {note} \\"
        )
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def latex_to_scalar_text(latex: str) -> str:
    """Inverse of the simple LaTeX rewrites, for round-trip spot checks."""
    out = latex.replace("z_{1}", "z1").replace("z_{2}", "z2")
    out = re.sub(r"\^\{(\d+)\}", r"^\1", out)
    out = out.replace(r" \cdot ", "*")
    out = re.sub(r"\\frac\{([^{}]*)\}\{([^{}]*)\}", r"((\1))/((\2))", out)
    return out.strip()
