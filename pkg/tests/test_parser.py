from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given

from classes.Errors import ArityError, EquationSpecError, NormalizationError, ParseError
from classes.EvolutionEquation import U, U_X
from classes.Expression import Expression
from classes.FunctionTable import FunctionTable
from classes.Parser import Parser, parse, tokenize
from strategies import A, T, X, Y, expressions, functions


@given(expressions)
def test_printed_expressions_parse_back(e):
    assert Parser(functions()).parse(str(e)) == e


@pytest.mark.parametrize(
    "source, expected",
    [
        ("1 + 2*x", 1 + 2 * X),
        ("-x^2", -(X**2)),
        ("2^3", Expression.constant(8)),
        ("x/2", X * Fraction(1, 2)),
        ("(x + 1)^2", X**2 + 2 * X + 1),
        ("a^-1*a", Expression.constant(1)),
        ("x - y - t", X - Y - T),
        ("2*x/4", X / 2),
        ("u", U),
        ("u[1,0]*u", U * U_X),
        ("--x", X),
        ("exp(x)", Expression.exp(X)),
    ],
)
def test_parse_examples(source, expected):
    assert parse(source) == expected


def test_declared_functions_and_derivatives():
    table = FunctionTable({"g": 2})
    parser = Parser(table)
    assert parser.parse("g(u, u[1,0])") == Expression.atom("g", [U, U_X])
    assert parser.parse("d(g;1,0)(u, u[1,0])") == Expression.atom("g", [U, U_X], deriv=[1, 0])


def test_symbols_are_constants():
    assert parse("a*x") == A * X


@pytest.mark.parametrize(
    "source, span",
    [
        ("x $ y", (2, 3)),
        ("x/u", (2, 3)),
        ("u^-1", (0, 4)),
        ("g(x)", (0, 1)),
    ],
)
def test_errors_carry_spans(source, span):
    with pytest.raises(ParseError) as caught:
        parse(source)
    assert caught.value.span == span
    assert "^" in str(caught.value)


@pytest.mark.parametrize(
    "source",
    ["(x", "x +", "d", "u[1]", "x y", "g(u)", "g", "d(g;1)(u, u[1,0])", "d(g;1,0)"],
)
def test_malformed_sources(source):
    with pytest.raises(ParseError):
        Parser(FunctionTable({"g": 2})).parse(source)


def test_tokenize_spans():
    tokens = tokenize("u[1,0] + 12")
    assert [(t.kind, t.text, t.start) for t in tokens] == [
        ("name", "u", 0),
        ("op", "[", 1),
        ("num", "1", 2),
        ("op", ",", 3),
        ("num", "0", 4),
        ("op", "]", 5),
        ("op", "+", 7),
        ("num", "12", 9),
        ("end", "", 11),
    ]


def test_parse_gir_with_opaque_f():
    table = FunctionTable()
    eq = Parser(table).parse_equation("gir(a=a, f=f)")
    assert table.arity("f") == 2
    assert eq.f == Expression.atom("f", [U, U_X])
    assert eq.a == A


def test_parse_gir_with_explicit_f():
    eq = Parser().parse_equation("gir(a=1, f=u^2/2)")
    assert eq.rhs == -Expression.jet(4, 0) - Expression.jet(1, 1) - U * U_X


def test_parse_rhs_equation():
    eq = Parser().parse_equation("rhs=u[2,0] + u*u[1,0]")
    assert eq.rhs == Expression.jet(2, 0) + U * U_X
    assert eq.a is None


@pytest.mark.parametrize(
    "source",
    [
        "heat(a=1)",
        "gir(a=1)",
        "gir(a=1, b=2)",
        "gir(a=1, a=2, f=f)",
        "gir(a=1, f=u[2,0])",
        "gir(a=x, f=f)",
    ],
)
def test_bad_equation_specs(source):
    with pytest.raises(EquationSpecError):
        Parser().parse_equation(source)


def test_function_declarations():
    table = FunctionTable()
    table.declare_all(["M/1", " F / 2 "])
    assert table.arity("M") == 1
    assert table.arity("F") == 2
    assert table.arity("exp") == 1
    assert "M" in table
    for bad in ("M", "x/1", "M/2", "q/0"):
        with pytest.raises(ArityError):
            table.declare_all([bad])


@given(st.from_regex(r"[a-z][a-z0-9_]{0,4}", fullmatch=True))
def test_symbol_names_print_and_parse_back(name):
    if name in ("x", "y", "t", "u", "d", "exp"):
        with pytest.raises(NormalizationError):
            Expression.symbol(name)
    else:
        c = Expression.symbol(name)
        assert parse(str(c)) == c
        assert parse(f"{name}*u[1,0]") == c * U_X
