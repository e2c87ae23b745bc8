"""Shared strategies and independent oracles for the test suite."""

from hypothesis import strategies as st

from valsat.cnf import Clause, CnfFormula, Literal


@st.composite
def clauses_st(draw, num_vars: int, min_len: int = 1, max_len: int = 3):
    length = draw(st.integers(min_len, min(max_len, 2 * num_vars)))
    pool = [(v, neg) for v in range(1, num_vars + 1) for neg in (False, True)]
    picks = draw(
        st.lists(
            st.sampled_from(pool), min_size=length, max_size=length, unique=True
        )
    )
    return Clause(tuple(Literal(v, neg) for v, neg in picks))


@st.composite
def formulas_st(draw, max_vars: int = 8, max_clauses: int = 6):
    n = draw(st.integers(1, max_vars))
    m = draw(st.integers(0, max_clauses))
    cs = tuple(draw(clauses_st(n)) for _ in range(m))
    return CnfFormula(n, cs)


@st.composite
def strict3_formulas_st(draw, max_vars: int = 8, max_clauses: int = 6):
    n = draw(st.integers(3, max_vars))
    m = draw(st.integers(1, max_clauses))
    cs = tuple(draw(clauses_st(n, min_len=3, max_len=3)) for _ in range(m))
    return CnfFormula(n, cs)


def enumerate_sat(formula):
    """Plain-loop exhaustive satisfiability oracle, independent of the
    package's vectorized brute force.  Returns the satisfying assignment of
    smallest code (variable i at bit i-1) or None."""
    n = formula.num_vars
    for code in range(1 << n):
        values = tuple(bool((code >> i) & 1) for i in range(n))
        if all(
            any(lit.holds(values[lit.var - 1]) for lit in clause.literals)
            for clause in formula.clauses
        ):
            return values
    return None
