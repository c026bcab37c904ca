from hypothesis import given

from classes.DiffOperator import DiffOperator
from classes.EvolutionEquation import U, U_X
from classes.Expression import Expression
from classes.TotalDerivative import total_x, total_y
from classes.Variational import Variational
from strategies import T, X, Y, expressions, operators


@given(expressions)
def test_euler_annihilates_x_divergences(e):
    assert Variational.euler(total_x(e)).is_zero()


@given(expressions)
def test_euler_annihilates_y_divergences(e):
    assert Variational.euler(total_y(e)).is_zero()


@given(expressions, expressions)
def test_euler_is_linear(e1, e2):
    assert Variational.euler(e1 + 2 * e2) == Variational.euler(e1) + 2 * Variational.euler(e2)


def test_euler_examples():
    assert Variational.euler(U) == 1
    assert Variational.euler(U**2 / 2) == U
    assert Variational.euler(U_X**2 / 2) == -Expression.jet(2, 0)
    assert Variational.euler(Expression.jet(0, 1) ** 2 / 2) == -Expression.jet(0, 2)
    assert Variational.euler(X * U) == X
    assert Variational.euler(Expression.atom("M", [Y]) * U) == Expression.atom("M", [Y])
    assert Variational.euler(X).is_zero()


def test_frechet_of_a_product():
    assert Variational.frechet(U * U_X) == DiffOperator({(0, 0): U_X, (1, 0): U})


@given(operators, expressions, expressions)
def test_adjoint_bilinear_identity(operator, p, q):
    integrand = p * operator.apply(q) - q * operator.adjoint().apply(p)
    assert Variational.euler(integrand).is_zero()


def test_linearization_of_the_equation(generic_equation):
    D_F = generic_equation.linearization()
    assert D_F.deg() == (4, 1)
    assert D_F.coefficient(4, 0) == -1
    assert D_F.coefficient(1, 1) == -Expression.symbol("a")
    assert generic_equation.linearization() is D_F


@given(expressions)
def test_linearization_carries_the_time_derivative(generic_equation, e):
    h = e.substitute({T: 0})
    assert generic_equation.total_t(h) == Variational.frechet(h).apply(generic_equation.rhs)
