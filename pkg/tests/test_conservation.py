import hypothesis.strategies as st
import pytest
from hypothesis import given

from classes.ConservationLaw import ConservationLaw
from classes.Errors import EquationSpecError, VerificationError
from classes.EvolutionEquation import U, U_X, EvolutionEquation
from classes.Expression import Expression
from classes.Families import Families, constant
from strategies import T, X, Y, coefficients, expressions

M = Expression.atom("M", [Y])
L = Expression.atom("L", [Y])


def test_m_of_y_law(generic_equation):
    law = Families.m_of_y(generic_equation)
    assert law.verifies()
    assert law.characteristic() == M
    assert not law.is_trivial_by_characteristic()


def test_density_alone_is_not_a_law(generic_equation):
    law = ConservationLaw(U**2, 0, 0, generic_equation)
    assert not law.verifies()
    with pytest.raises(VerificationError):
        law.is_trivial_by_characteristic()


def test_degenerate_triple(generic_equation):
    law = ConservationLaw(0, 0, 0, generic_equation)
    assert law.is_degenerate()
    assert law.verifies()
    assert law.is_trivial_by_characteristic()


@given(expressions, expressions, expressions)
def test_potentials_give_trivial_laws(quadratic_equation, alpha, beta, gamma):
    law = ConservationLaw.trivial_from_potentials(alpha, beta, gamma, quadratic_equation)
    assert law.residual().is_zero()
    assert law.characteristic().is_zero()


def test_combination_is_componentwise(generic_equation):
    N = Expression.atom("N", [Y])
    combined = ConservationLaw.combine(
        2, Families.m_of_y(generic_equation, "M"), 3, Families.m_of_y(generic_equation, "N")
    )
    direct = Families.m_of_y(generic_equation, 2 * M + 3 * N)
    assert combined.verifies()
    assert combined.rho == direct.rho
    assert combined.sigma == direct.sigma
    assert combined.characteristic() == 2 * M + 3 * N


def test_combining_laws_of_different_equations_fails(generic_equation, quadratic_equation):
    with pytest.raises(VerificationError):
        ConservationLaw.combine(
            1, Families.m_of_y(generic_equation), 1, Families.m_of_y(quadratic_equation)
        )


def test_linear_ux_family():
    eq, law = Families.linear_ux()
    a, k1 = Expression.symbol("a"), Expression.symbol("k1")
    assert law.verifies()
    assert law.characteristic() == X * L + T * (a * L.pdiff(Y) - k1 * L)


def test_linear_ux_family_absorbs_an_integration_constant():
    _, law = Families.linear_ux(K0="K0")
    assert law.verifies()


def test_linear_ux_family_with_the_opposite_constant_fails():
    _, law = Families.linear_ux(K2=-Expression.symbol("k0"))
    assert not law.verifies()


def test_exponential_family():
    eq, law = Families.exponential()
    assert law.verifies()
    assert eq.f == (
        Expression.symbol("c1") * Expression.atom("h", [U]).pdiff(U) + Expression.symbol("c0")
    ) * U_X + Expression.atom("h", [U])


def test_exponential_family_with_concrete_data():
    _, law = Families.exponential(a=3, h=U**2, c0=0, c1=1)
    assert law.verifies()


def test_exponential_family_needs_nonzero_c1():
    with pytest.raises(VerificationError):
        Families.exponential(c1=0)


@pytest.mark.parametrize("ct1", [0, "ct1"])
def test_uniform_family(ct1):
    _, law = Families.uniform(ct1=ct1)
    assert law.verifies()


def test_families_need_gir_data():
    with pytest.raises(EquationSpecError):
        Families.m_of_y(EvolutionEquation(U))


def test_constants_reject_variables():
    assert constant("k") == Expression.symbol("k")
    assert constant(2) == 2
    with pytest.raises(EquationSpecError):
        constant(X)


triples = st.tuples(expressions, expressions, expressions)


@given(coefficients, triples, coefficients, triples)
def test_residual_of_a_combination(quadratic_equation, c1, first, c2, second):
    cl1 = ConservationLaw(*first, quadratic_equation)
    cl2 = ConservationLaw(*second, quadratic_equation)
    combined = ConservationLaw.combine(c1, cl1, c2, cl2)
    assert combined.residual() == cl1.residual().scale(c1) + cl2.residual().scale(c2)
