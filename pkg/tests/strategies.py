from fractions import Fraction

import hypothesis.strategies as st

from classes.DiffOperator import DiffOperator
from classes.EvolutionEquation import U, U_X
from classes.Expression import Expression
from classes.FunctionTable import FunctionTable

X = Expression.indep("x")
Y = Expression.indep("y")
T = Expression.indep("t")
A = Expression.symbol("a")
B = Expression.symbol("b")

PALETTE = [
    X,
    Y,
    T,
    A,
    B,
    U,
    U_X,
    Expression.jet(0, 1),
    Expression.jet(2, 0),
    Expression.jet(1, 1),
    Expression.atom("g", [U, U_X]),
    Expression.atom("h", [Y]),
    Expression.exp(2 * X),
]

coefficients = st.one_of(
    st.integers(min_value=-3, max_value=3),
    st.sampled_from([Fraction(1, 2), Fraction(-2, 3)]),
)


def _product(c, factors):
    result = Expression.constant(c)
    for factor in factors:
        result = result * factor
    return result


monomials = st.builds(_product, coefficients, st.lists(st.sampled_from(PALETTE), max_size=3))

expressions = st.lists(monomials, max_size=4).map(Expression.sum)

operators = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 1)), expressions, max_size=3
).map(DiffOperator)


def functions() -> FunctionTable:
    """The declarations the palette needs for printing and parsing back."""
    return FunctionTable({"g": 2, "h": 1})


VARIABLES = [X, Y, A, U, U_X, Expression.jet(0, 1)]

_leaves = st.one_of(
    coefficients,
    st.sampled_from(PALETTE),
    st.tuples(st.just("^"), st.sampled_from(PALETTE), st.integers(0, 3)),
)


def trees(depth: int = 6) -> st.SearchStrategy:
    """
    Raw trees for ``Expression.normalize``, at most ``depth`` nodes deep.

    Products always take one leaf factor, which keeps the expanded forms small.
    """
    if depth == 0:
        return _leaves
    inner = trees(depth - 1)
    return st.one_of(
        _leaves,
        st.tuples(st.just("+"), inner, inner),
        st.tuples(st.just("*"), inner, _leaves),
        st.tuples(st.just("*"), _leaves, inner),
        st.tuples(st.just("-"), inner),
        st.tuples(st.just("-"), inner, inner),
    )
