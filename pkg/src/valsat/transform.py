"""Clustering transform: rewrite a 3SAT formula so every variable occurs in
at most three clauses.

Each literal occurrence of an original variable gets a fresh occurrence
variable, and the occurrence variables of one original variable are tied
together by a cyclic chain of implications (x1 ∨ ¬x2), (x2 ∨ ¬x3), ...,
(xt ∨ ¬x1), which is satisfied exactly when they all agree.  The result is
equisatisfiable with the input, and every chained variable occurs either in
two positive literals and one negative or in two negative and one positive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cnf import Assignment, Clause, CnfFormula, Literal


@dataclass(frozen=True)
class ClusterInfo:
    """Clauses containing one occurrence variable: the 3-literal clause it was
    substituted into, plus its (up to two) 2-literal chain clauses."""

    primary: int
    chain: tuple[int, ...]

    @property
    def clause_indices(self) -> tuple[int, ...]:
        return (self.primary, *self.chain)


@dataclass(frozen=True)
class ClusteredFormula:
    """The transformed formula plus the bookkeeping to map back.

    ``origin_var[i]`` is the original variable of occurrence variable i+1;
    ``occurrences[v-1]`` lists the occurrence variables of original variable
    v in first-appearance order; ``clusters[i]`` locates the clauses of
    occurrence variable i+1.
    """

    formula: CnfFormula
    source: CnfFormula
    origin_var: tuple[int, ...]
    occurrences: tuple[tuple[int, ...], ...]
    clusters: tuple[ClusterInfo, ...]


def cluster_expression(formula: CnfFormula) -> ClusteredFormula:
    """Build the clustered form of a strict-3SAT formula.

    Variables occurring once keep no chain (a 1-cycle would be tautological);
    variables occurring t >= 2 times get the full cyclic chain of t clauses.
    """
    for i, clause in enumerate(formula.clauses):
        if len(clause) != 3:
            raise ValueError(f"clause {i} has {len(clause)} literals, need exactly 3")

    occurrences: list[list[int]] = [[] for _ in range(formula.num_vars)]
    origin_var: list[int] = []
    primary_clauses: list[Clause] = []
    primary_of: list[int] = []  # occurrence var (0-based) -> primary clause index

    for ci, clause in enumerate(formula.clauses):
        lits = []
        for lit in clause.literals:
            occ = len(origin_var) + 1
            origin_var.append(lit.var)
            occurrences[lit.var - 1].append(occ)
            primary_of.append(ci)
            lits.append(Literal(occ, lit.negated))
        primary_clauses.append(Clause(tuple(lits)))

    chain_clauses: list[Clause] = []
    chain_of: list[list[int]] = [[] for _ in origin_var]
    base = len(primary_clauses)
    for occ_list in occurrences:
        if len(occ_list) < 2:
            continue
        for j, y in enumerate(occ_list):
            nxt = occ_list[(j + 1) % len(occ_list)]
            idx = base + len(chain_clauses)
            chain_clauses.append(Clause((Literal(y), Literal(nxt, True))))
            chain_of[y - 1].append(idx)
            chain_of[nxt - 1].append(idx)

    clustered = CnfFormula(
        len(origin_var), tuple(primary_clauses) + tuple(chain_clauses)
    )
    clusters = tuple(
        ClusterInfo(primary_of[i], tuple(sorted(chain_of[i])))
        for i in range(len(origin_var))
    )
    return ClusteredFormula(
        formula=clustered,
        source=formula,
        origin_var=tuple(origin_var),
        occurrences=tuple(tuple(o) for o in occurrences),
        clusters=clusters,
    )


def project_assignment(cf: ClusteredFormula, a_star: Assignment) -> Assignment:
    """Read an original-variable assignment off a clustered one.

    All occurrence variables of an original variable must agree (that is what
    the chain clauses enforce); disagreement raises ValueError.  Original
    variables with no occurrence default to False.
    """
    if len(a_star) != cf.formula.num_vars:
        raise ValueError(
            f"assignment length {len(a_star)} != clustered num_vars {cf.formula.num_vars}"
        )
    values = []
    for var, occ_list in enumerate(cf.occurrences, start=1):
        if not occ_list:
            values.append(False)
            continue
        vals = {a_star[occ - 1] for occ in occ_list}
        if len(vals) > 1:
            raise ValueError(
                f"occurrence variables of {var} disagree; chain clauses unsatisfied"
            )
        values.append(vals.pop())
    return tuple(values)


def lift_assignment(cf: ClusteredFormula, a: Assignment) -> Assignment:
    """Give every occurrence variable its original variable's value.

    The lifted assignment satisfies all chain clauses by construction, and
    satisfies the clustered formula whenever ``a`` satisfies the source.
    """
    if len(a) != cf.source.num_vars:
        raise ValueError(
            f"assignment length {len(a)} != source num_vars {cf.source.num_vars}"
        )
    return tuple(a[orig - 1] for orig in cf.origin_var)


def occurrence_map_lines(cf: ClusteredFormula) -> list[str]:
    """Sidecar mapping, one ``occ_var orig_var`` pair per line."""
    return [f"{occ} {orig}" for occ, orig in enumerate(cf.origin_var, start=1)]
