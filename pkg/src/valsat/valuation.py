"""Truth-valuation arithmetic on the grid {0, 1/M, ..., 1}.

A valuation assigns each variable a rational level k/M.  Levels are stored as
integers so grid positions stay exact; floating point enters only when clause
polynomials are evaluated.  Clause valuations combine literals with the
product complement rule v(x ∨ y) = v(x) + v(y) − v(x)·v(y), iterated for
longer clauses; an expression's valuation is the product over its clauses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .cnf import Assignment, Clause, CnfFormula, Literal

# Exact minimal-clause comparison uses integer numerators over M**3, which
# must fit in int64 inside the solver kernels.
MAX_GRID_RESOLUTION = 1 << 16


@dataclass(frozen=True)
class ValuationVector:
    """Per-variable integer levels on the grid of resolution M.

    Variable i has the rational valuation ``levels[i-1] / M``.
    """

    M: int
    levels: tuple[int, ...]

    def __post_init__(self):
        if self.M < 1:
            raise ValueError("grid resolution M must be >= 1")
        for k in self.levels:
            if not 0 <= k <= self.M:
                raise ValueError(f"level {k} outside 0..{self.M}")

    def __len__(self) -> int:
        return len(self.levels)

    def value(self, var: int) -> float:
        """Rational valuation of variable ``var`` (1-based), as a float."""
        return self.levels[var - 1] / self.M

    def as_array(self) -> np.ndarray:
        return np.array(self.levels, dtype=np.int64)

    @staticmethod
    def from_assignment(values: Assignment, M: int) -> "ValuationVector":
        return ValuationVector(M, tuple(M if v else 0 for v in values))


def literal_valuation(lit: Literal, vv: ValuationVector) -> float:
    """v(x) = k/M for a positive literal, v(¬x) = 1 − k/M for a negated one."""
    if not 1 <= lit.var <= len(vv):
        raise IndexError(f"variable {lit.var} out of range 1..{len(vv)}")
    v = vv.levels[lit.var - 1] / vv.M
    return 1.0 - v if lit.negated else v


def clause_valuation(clause: Clause, vv: ValuationVector) -> float:
    """Valuation of a disjunction: 1 − ∏(1 − v(literal)).

    Equals the expanded inclusion-exclusion polynomial for up to three
    literals; the equality is covered by tests rather than recomputed here.
    """
    prod = 1.0
    for lit in clause.literals:
        prod *= 1.0 - literal_valuation(lit, vv)
    return 1.0 - prod


def expression_valuation(formula: CnfFormula, vv: ValuationVector) -> float:
    """Product of all clause valuations; 1 for an empty formula."""
    if len(vv) != formula.num_vars:
        raise ValueError(
            f"valuation length {len(vv)} != num_vars {formula.num_vars}"
        )
    total = 1.0
    for clause in formula.clauses:
        total *= clause_valuation(clause, vv)
    return total


def clause_valuation_numerator(clause: Clause, vv: ValuationVector) -> int:
    """Exact clause valuation as an integer numerator over M**3.

    For a clause of length L ≤ 3 the valuation is (M**L − ∏(M − a_j)) / M**L
    with a_j the literal's level numerator; the result is rescaled to the
    common denominator M**3 so clauses of different lengths compare exactly.
    Requires M ≤ 2**16 so the numerator fits in 64 bits.
    """
    M = vv.M
    if M > MAX_GRID_RESOLUTION:
        raise ValueError(f"exact comparison needs M <= {MAX_GRID_RESOLUTION}")
    if len(clause) > 3:
        raise ValueError("exact numerators defined for clauses of length <= 3")
    prod = 1
    for lit in clause.literals:
        k = vv.levels[lit.var - 1]
        a = M - k if lit.negated else k
        prod *= M - a
    scale = M ** (3 - len(clause))
    return (M ** len(clause) - prod) * scale


def hamming_distance(v1: ValuationVector, v2: ValuationVector) -> float:
    """Sum of coordinatewise absolute valuation differences."""
    return hamming_steps(v1, v2) / v1.M


def hamming_steps(v1: ValuationVector, v2: ValuationVector) -> int:
    """Hamming distance in grid steps: Σ|k1_i − k2_i| (the 1/M-normalized form)."""
    if v1.M != v2.M:
        raise ValueError(f"grid mismatch: M={v1.M} vs M={v2.M}")
    if len(v1) != len(v2):
        raise ValueError(f"length mismatch: {len(v1)} vs {len(v2)}")
    return sum(abs(a - b) for a, b in zip(v1.levels, v2.levels))


def as_boolean_assignment(vv: ValuationVector) -> Optional[Assignment]:
    """The boolean assignment this valuation encodes, if every level sits at a
    barrier (0 or M); None when any interior level is present."""
    values = []
    for k in vv.levels:
        if k == 0:
            values.append(False)
        elif k == vv.M:
            values.append(True)
        else:
            return None
    return tuple(values)
