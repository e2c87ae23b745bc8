"""CNF formula model: DIMACS parsing, evaluation, and instance generation.

Variables are 1-based as in the DIMACS format.  An assignment is a plain
tuple of booleans, ``values[i]`` holding the value of variable ``i + 1``.
All formula types are immutable after construction and safe to share across
concurrent workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .rng import SplitMix64

Assignment = tuple[bool, ...]

BRUTE_FORCE_VAR_LIMIT = 24


class DimacsParseError(ValueError):
    """Malformed DIMACS input; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Literal:
    """A variable occurrence with polarity; ``negated`` means the literal is ¬x."""

    var: int
    negated: bool = False

    def __post_init__(self):
        if self.var < 1:
            raise ValueError(f"variable index must be >= 1, got {self.var}")

    def holds(self, value: bool) -> bool:
        """Truth of the literal under a boolean value for its variable."""
        return value != self.negated

    def to_int(self) -> int:
        return -self.var if self.negated else self.var

    @staticmethod
    def from_int(lit: int) -> "Literal":
        if lit == 0:
            raise ValueError("0 is not a DIMACS literal")
        return Literal(abs(lit), lit < 0)


@dataclass(frozen=True)
class Clause:
    """Disjunction of literals. Duplicate (var, polarity) pairs are rejected;
    tautological pairs (x and ¬x) are allowed."""

    literals: tuple[Literal, ...]

    def __post_init__(self):
        if len(self.literals) < 1:
            raise ValueError("clause must have at least one literal")
        seen = set()
        for lit in self.literals:
            key = (lit.var, lit.negated)
            if key in seen:
                raise ValueError(f"duplicate literal {lit.to_int()} in clause")
            seen.add(key)

    def __len__(self) -> int:
        return len(self.literals)

    def to_ints(self) -> tuple[int, ...]:
        return tuple(lit.to_int() for lit in self.literals)

    @staticmethod
    def from_ints(lits: Iterable[int]) -> "Clause":
        return Clause(tuple(Literal.from_int(v) for v in lits))

    def satisfied_by(self, values: Assignment) -> bool:
        return any(lit.holds(values[lit.var - 1]) for lit in self.literals)


@dataclass(frozen=True)
class CnfFormula:
    """A CNF formula over variables 1..num_vars. An empty clause list is
    trivially satisfiable."""

    num_vars: int
    clauses: tuple[Clause, ...]
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.num_vars < 0:
            raise ValueError("num_vars must be >= 0")
        for i, clause in enumerate(self.clauses):
            for lit in clause.literals:
                if lit.var > self.num_vars:
                    raise ValueError(
                        f"clause {i}: variable {lit.var} out of range 1..{self.num_vars}"
                    )

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def is_strict_3sat(self) -> bool:
        return all(len(c) == 3 for c in self.clauses)

    @staticmethod
    def from_ints(num_vars: int, clauses: Iterable[Iterable[int]]) -> "CnfFormula":
        return CnfFormula(num_vars, tuple(Clause.from_ints(c) for c in clauses))

    def packed(self) -> tuple[np.ndarray, np.ndarray]:
        """Clauses as a padded signed-literal int64 array plus lengths.

        Row i holds clause i's DIMACS literals, zero-padded on the right.
        Used by the compiled solver kernels.
        """
        width = max((len(c) for c in self.clauses), default=1)
        lits = np.zeros((self.num_clauses, width), dtype=np.int64)
        lens = np.zeros(self.num_clauses, dtype=np.int64)
        for i, clause in enumerate(self.clauses):
            ints = clause.to_ints()
            lits[i, : len(ints)] = ints
            lens[i] = len(ints)
        return lits, lens


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF text into a formula.

    Comment lines start with ``c``; the header is ``p cnf <n> <m>``; clauses
    are whitespace-separated nonzero integers terminated by 0 and may span
    lines.  A clause count differing from the header is tolerated and
    recorded in ``formula.warnings``; an out-of-range literal, a malformed
    header, or an unterminated final clause raises :class:`DimacsParseError`.
    """
    num_vars: Optional[int] = None
    declared_clauses = 0
    clauses: list[Clause] = []
    warnings: list[str] = []
    pending: list[int] = []
    pending_seen: set[tuple[int, bool]] = set()
    last_token_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if num_vars is not None:
                raise DimacsParseError("duplicate header", lineno)
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsParseError(f"malformed header {line!r}", lineno)
            try:
                num_vars = int(parts[2])
                declared_clauses = int(parts[3])
            except ValueError:
                raise DimacsParseError(f"malformed header {line!r}", lineno) from None
            if num_vars < 0 or declared_clauses < 0:
                raise DimacsParseError("negative counts in header", lineno)
            continue
        if num_vars is None:
            raise DimacsParseError("clause before 'p cnf' header", lineno)
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise DimacsParseError(f"bad token {token!r}", lineno) from None
            last_token_line = lineno
            if lit == 0:
                if pending:
                    clauses.append(Clause.from_ints(pending))
                    pending.clear()
                    pending_seen.clear()
                else:
                    warnings.append(f"line {lineno}: empty clause ignored")
                continue
            if abs(lit) > num_vars:
                raise DimacsParseError(f"literal {lit} out of range", lineno)
            key = (abs(lit), lit < 0)
            if key in pending_seen:
                warnings.append(f"line {lineno}: duplicate literal {lit} dropped")
            else:
                pending_seen.add(key)
                pending.append(lit)

    if num_vars is None:
        raise DimacsParseError("missing 'p cnf' header", max(last_token_line, 1))
    if pending:
        raise DimacsParseError("unterminated final clause", last_token_line)
    if len(clauses) != declared_clauses:
        warnings.append(
            f"header declared {declared_clauses} clauses, found {len(clauses)}"
        )
    return CnfFormula(num_vars, tuple(clauses), tuple(warnings))


def serialize_dimacs(formula: CnfFormula, comments: Iterable[str] = ()) -> str:
    """Render a formula as DIMACS text (inverse of :func:`parse_dimacs`)."""
    lines = [f"c {c}" for c in comments]
    lines.append(f"p cnf {formula.num_vars} {formula.num_clauses}")
    for clause in formula.clauses:
        lines.append(" ".join(str(v) for v in clause.to_ints()) + " 0")
    return "\n".join(lines) + "\n"


def evaluate(formula: CnfFormula, values: Assignment) -> tuple[bool, list[int]]:
    """Evaluate a boolean assignment; returns (satisfied, unsatisfied clause indices)."""
    if len(values) != formula.num_vars:
        raise ValueError(
            f"assignment length {len(values)} != num_vars {formula.num_vars}"
        )
    unsat = [
        i for i, clause in enumerate(formula.clauses) if not clause.satisfied_by(values)
    ]
    return not unsat, unsat


def brute_force_sat(
    formula: CnfFormula, limit: int = BRUTE_FORCE_VAR_LIMIT
) -> Optional[Assignment]:
    """Exhaustive satisfiability oracle for small formulas.

    Assignments are encoded as integers with variable i at bit i-1; the
    satisfying assignment with the smallest code is returned, or None if the
    formula is unsatisfiable.  Guarded to ``limit`` variables (default 24).
    """
    n = formula.num_vars
    if n > limit:
        raise ValueError(f"brute force limited to {limit} variables, got {n}")
    if formula.num_clauses == 0:
        return tuple([False] * n)

    clause_ints = [c.to_ints() for c in formula.clauses]
    chunk = 1 << min(n, 18)
    total = 1 << n
    for start in range(0, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.uint32)
        sat = np.ones(codes.shape, dtype=bool)
        for ints in clause_ints:
            clause_sat = np.zeros(codes.shape, dtype=bool)
            for lit in ints:
                bit = (codes >> (abs(lit) - 1)) & 1
                clause_sat |= (bit == 1) if lit > 0 else (bit == 0)
            sat &= clause_sat
            if not sat.any():
                break
        hits = np.flatnonzero(sat)
        if hits.size:
            code = int(codes[hits[0]])
            return tuple(bool((code >> i) & 1) for i in range(n))
    return None


def _sample_clause(rng: SplitMix64, n: int) -> Clause:
    v1 = rng.bounded(n) + 1
    v2 = rng.bounded(n) + 1
    while v2 == v1:
        v2 = rng.bounded(n) + 1
    v3 = rng.bounded(n) + 1
    while v3 == v1 or v3 == v2:
        v3 = rng.bounded(n) + 1
    return Clause(tuple(Literal(v, rng.coin()) for v in (v1, v2, v3)))


def generate_random_3sat(n: int, m: int, seed: int) -> CnfFormula:
    """Random 3SAT instance: m clauses over 3 distinct uniform variables each,
    uniform polarities.  Deterministic for a fixed seed."""
    if n < 3:
        raise ValueError("need n >= 3 for 3-literal clauses")
    rng = SplitMix64(seed)
    return CnfFormula(n, tuple(_sample_clause(rng, n) for _ in range(m)))


def generate_planted_3sat(n: int, m: int, seed: int) -> tuple[CnfFormula, Assignment]:
    """Random satisfiable 3SAT instance with a known (planted) solution.

    The planted assignment is drawn first; each clause is then resampled
    until it has at least one literal true under it.
    """
    if n < 3:
        raise ValueError("need n >= 3 for 3-literal clauses")
    rng = SplitMix64(seed)
    planted = tuple(rng.coin() for _ in range(n))
    clauses = []
    for _ in range(m):
        clause = _sample_clause(rng, n)
        while not clause.satisfied_by(planted):
            clause = _sample_clause(rng, n)
        clauses.append(clause)
    return CnfFormula(n, tuple(clauses)), planted


def assignment_to_vline(values: Assignment) -> str:
    """DIMACS solution line: ``v`` followed by signed literals and 0."""
    body = " ".join(str(i + 1) if v else str(-(i + 1)) for i, v in enumerate(values))
    return f"v {body} 0".replace("v  0", "v 0")
