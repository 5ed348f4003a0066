"""End-to-end construction of the three canonical basis solutions.

Each basis solution runs the same pipeline: generate the coefficient chain
from its canonical seed, reconstruct the residue vectors from the first four
moments, and assemble the partial-fraction form.  The residual check is left
to callers (the CLI refuses to emit anything with a nonzero residual).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from .residues import (
    RationalSolution,
    ResidueSet,
    assemble_solution,
    reconstruct_residues,
)
from .series import CoefficientTable, SeedSpec, canonical_seeds, generate
from .system import KZSystem

SOLUTION_NAMES = ("w1", "w2", "w3")

DEFAULT_K_MAX = 12


@dataclass(frozen=True)
class BasisSolution:
    """One basis solution with the intermediate artifacts kept for auditing."""

    name: str
    seed: SeedSpec
    table: CoefficientTable
    residues: ResidueSet
    solution: RationalSolution


def build_solution(sys: KZSystem, name: str, k_max: int = DEFAULT_K_MAX) -> BasisSolution:
    """Run the full pipeline for one named seed (w1, w2, or w3)."""
    seeds = canonical_seeds()
    if name not in seeds:
        raise ValueError(f"unknown solution name {name!r}; expected one of {SOLUTION_NAMES}")
    if k_max < 4:
        raise ValueError(f"k_max must be at least 4 to reconstruct residues, got {k_max}")
    seed = seeds[name]
    table = generate(sys, seed, k_max)
    moments = tuple(table.coeff(k) for k in (1, 2, 3, 4))
    residues = reconstruct_residues(sys.z1, sys.z2, moments)
    solution = assemble_solution(sys, table, residues)
    return BasisSolution(
        name=name, seed=seed, table=table, residues=residues, solution=solution
    )


def build_basis(
    sys: KZSystem, names: Tuple[str, ...] = SOLUTION_NAMES, k_max: int = DEFAULT_K_MAX
) -> Dict[str, BasisSolution]:
    """All requested basis solutions, in the given order."""
    if k_max < 5:
        raise ValueError(f"k_max must be at least 5, got {k_max}")
    return {name: build_solution(sys, name, k_max) for name in names}
