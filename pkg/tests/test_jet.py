import pytest
from hypothesis import given

from classes.Errors import ArityError, EquationSpecError
from classes.EvolutionEquation import U, U_X, EvolutionEquation
from classes.Expression import Expression
from classes.TotalDerivative import total_power, total_x, total_y
from strategies import A, T, X, Y, expressions


def test_total_derivatives_on_generators():
    assert total_x(Expression.jet(2, 1)) == Expression.jet(3, 1)
    assert total_y(Expression.jet(2, 1)) == Expression.jet(2, 2)
    assert total_x(X) == 1
    assert total_x(Y).is_zero()
    assert total_y(T).is_zero()
    assert total_x(A).is_zero()


def test_total_x_through_atom():
    g = Expression.atom("g", [U, U_X])
    expected = (
        Expression.atom("g", [U, U_X], deriv=[1, 0]) * U_X
        + Expression.atom("g", [U, U_X], deriv=[0, 1]) * Expression.jet(2, 0)
    )
    assert total_x(g) == expected


def test_total_x_of_exp():
    e = Expression.exp(X * U)
    assert total_x(e) == e * (U + X * U_X)


@given(expressions)
def test_total_derivatives_commute(e):
    assert total_x(total_y(e)) == total_y(total_x(e))


@given(expressions, expressions)
def test_total_x_leibniz(e1, e2):
    assert total_x(e1 * e2) == total_x(e1) * e2 + e1 * total_x(e2)


@given(expressions, expressions)
def test_total_y_leibniz(e1, e2):
    assert total_y(e1 * e2) == total_y(e1) * e2 + e1 * total_y(e2)


@given(expressions, expressions)
def test_total_t_leibniz(quadratic_equation, e1, e2):
    d_t = quadratic_equation.total_t
    assert d_t(e1 * e2) == d_t(e1) * e2 + e1 * d_t(e2)


@given(expressions)
def test_total_t_commutes_with_total_x(quadratic_equation, e):
    d_t = quadratic_equation.total_t
    assert d_t(total_x(e)) == total_x(d_t(e))


@given(expressions)
def test_total_power_iterates(e):
    assert total_power(e, 2, 1) == total_x(total_x(total_y(e)))


def test_total_power_rejects_negative_orders():
    with pytest.raises(ValueError):
        total_power(U, -1, 0)


def test_make_gir_builds_the_right_hand_side():
    eq = EvolutionEquation.make_gir("a", U**2)
    expected = -Expression.jet(4, 0) - A * Expression.jet(1, 1) - 2 * U * U_X
    assert eq.rhs == expected
    assert eq.a == A
    assert eq.f == U**2


def test_make_gir_with_opaque_f(generic_equation):
    f = Expression.atom("f", [U, U_X])
    assert generic_equation.f == f
    assert generic_equation.rhs == -Expression.jet(4, 0) - A * Expression.jet(1, 1) - total_x(f)


def test_ks_reduction_has_no_second_derivative_term():
    eq = EvolutionEquation.make_gir(1, U**2 / 2)
    assert eq.rhs == -Expression.jet(4, 0) - Expression.jet(1, 1) - U * U_X


@pytest.mark.parametrize(
    "a, f, error",
    [
        ("a", Expression.jet(2, 0), ArityError),
        ("a", X * U, ArityError),
        (X, U**2, EquationSpecError),
        ("a", Expression.atom("f", [U]).as_scaled_generator()[1], ArityError),
    ],
)
def test_make_gir_rejects_bad_data(a, f, error):
    with pytest.raises(error):
        EvolutionEquation.make_gir(a, f)


def test_total_t_along_the_equation(quadratic_equation):
    eq = quadratic_equation
    assert eq.total_t(U) == eq.rhs
    assert eq.total_t(U_X) == total_x(eq.rhs)
    assert eq.total_t(Expression.jet(1, 1)) == total_power(eq.rhs, 1, 1)
    assert eq.total_t(T) == 1
    assert eq.total_t(X).is_zero()
    assert eq.total_t(A).is_zero()


def test_prolongations_are_cached(quadratic_equation):
    first = quadratic_equation.prolongation(2, 1)
    assert quadratic_equation.prolongation(2, 1) is first
