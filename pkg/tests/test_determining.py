import pytest

from classes.Determining import Determining
from classes.DiffOperator import DiffOperator
from classes.Errors import SplittingError
from classes.EvolutionEquation import U, U_X, EvolutionEquation
from classes.Expression import Expression
from classes.Generator import FnAtom
from strategies import X, Y

M = Expression.atom("M", [Y])


def test_functions_of_y_are_cosymmetries(generic_equation):
    assert Determining.cosym_residual(generic_equation, M).is_zero()


@pytest.mark.parametrize("G", [U_X, Expression.jet(0, 1)])
def test_translations_are_symmetries(generic_equation, G):
    assert Determining.sym_residual(generic_equation, G).is_zero()


def test_constant_characteristic_is_not_a_symmetry(generic_equation):
    f = generic_equation.f
    expected = f.pdiff(U).pdiff(U) * U_X + f.pdiff(U).pdiff(U_X) * Expression.jet(2, 0)
    assert Determining.sym_residual(generic_equation, 1) == expected


def test_x_is_not_a_cosymmetry_for_ux_squared():
    eq = EvolutionEquation.make_gir(1, U_X**2)
    assert Determining.cosym_residual(eq, X) == -2 * Expression.jet(2, 0)


@pytest.mark.parametrize("k, l", [(0, 0), (1, 0)])
def test_cosymmetry_residual_is_linear_in_the_top_jet(generic_equation, k, l):
    gamma = Determining.generic_function("gamma", k, l)
    residual = Determining.cosym_residual(generic_equation, gamma)
    split = dict(Determining.split_by_jet(residual, Expression.jet(k + 4, l)))
    assert set(split) <= {0, 1}
    assert split[1] == -2 * gamma.pdiff(Expression.jet(k, l))
    assert Determining.separant(residual, Expression.jet(k + 4, l)) == split[1]


def test_generic_function_arguments():
    assert Determining.generic_function("gamma").as_scaled_generator()[1].arity == 3
    assert Determining.generic_function("gamma", 1, 1).as_scaled_generator()[1].arity == 7
    assert Determining.generic_function("gamma", 2, 0).as_scaled_generator()[1].arity == 6


def test_split_by_jet_needs_a_jet_variable():
    with pytest.raises(SplittingError):
        Determining.split_by_jet(X * U, X)


def test_split_by_fn_atoms():
    f1, f0 = Expression.atom("f1", [U]), Expression.atom("f0", [U])
    e = f1 * X + 2 * f0 * Y * f1.pdiff(U) + f0 + Y
    coefficients, remainder = Determining.split_by_fn_atoms(e, [f1, f0])
    g1, g0 = (atom.as_scaled_generator()[1] for atom in (f1, f0))
    assert coefficients[g1] == X
    assert coefficients[g0] == 2 * Y * f1.pdiff(U) + 1
    assert remainder == Y


def test_split_by_fn_atoms_reports_absent_atoms_as_zero():
    f1 = Expression.atom("f1", [U])
    coefficients, remainder = Determining.split_by_fn_atoms(X, [f1])
    assert all(isinstance(g, FnAtom) for g in coefficients)
    assert coefficients[f1.as_scaled_generator()[1]].is_zero()
    assert remainder == X


@pytest.mark.parametrize(
    "build",
    [
        lambda f1, f0: f1**2,
        lambda f1, f0: f1 * f0,
        lambda f1, f0: Expression.atom("h", [f1]),
    ],
)
def test_split_by_fn_atoms_refuses_nonlinear_occurrences(build):
    f1, f0 = Expression.atom("f1", [U]), Expression.atom("f0", [U])
    with pytest.raises(SplittingError):
        Determining.split_by_fn_atoms(build(f1, f0), [f1, f0])


def test_identity_is_not_a_noether_operator(generic_equation):
    residual = Determining.noether_residual(generic_equation, DiffOperator.identity())
    assert residual.top_key() == (4, 0)
    assert residual.coefficient(4, 0) == 2


def test_maps_symmetries_matches_cosymmetry_residual(generic_equation):
    identity = DiffOperator.identity()
    assert Determining.maps_symmetries(generic_equation, identity, U_X) == (
        Determining.cosym_residual(generic_equation, U_X)
    )
    assert Determining.maps_cosymmetries(generic_equation, DiffOperator.zero(), M).is_zero()
