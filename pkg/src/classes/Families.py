from typing import Any, Optional, Tuple, Union

from .ConservationLaw import ConservationLaw
from .Errors import EquationSpecError, VerificationError
from .EvolutionEquation import U, U_X, EvolutionEquation
from .Expression import ZERO, Expression
from .Generator import SymConst
from .TotalDerivative import total_x

X = Expression.indep("x")
Y = Expression.indep("y")
T = Expression.indep("t")

Spec = Union[str, int, Expression]


def constant(value: Spec) -> Expression:
    """A symbol name, a rational, or an Expression built from symbolic constants."""
    value = Expression.symbol(value) if isinstance(value, str) else Expression.coerce(value)
    if any(not isinstance(g, SymConst) for g in value.generators()):
        raise EquationSpecError(f"expected a constant, got {value}")
    return value


def function_of(spec: Spec, *args: Expression) -> Expression:
    """An opaque function applied to ``args`` when ``spec`` is a name, else ``spec`` itself."""
    if isinstance(spec, str):
        return Expression.atom(spec, args)
    return Expression.coerce(spec)


class Families:
    """Explicit conservation-law families of u_t = -(u_xxx + a u_y + f)_x."""

    @staticmethod
    def _gir_data(eq: EvolutionEquation) -> Tuple[Expression, Expression]:
        if eq.a is None or eq.f is None:
            raise EquationSpecError(f"{eq.label} was not built from a and f")
        return eq.a, eq.f

    @staticmethod
    def m_of_y(eq: EvolutionEquation, M: Spec = "M") -> ConservationLaw:
        """rho = M(y) u, sigma = (u_xxx + a u_y + f) M(y), zeta = 0."""
        a, f = Families._gir_data(eq)
        M = function_of(M, Y)
        sigma = (Expression.jet(3, 0) + a * Expression.jet(0, 1) + f) * M
        return ConservationLaw(M * U, sigma, ZERO, eq, label="rho = M(y) u")

    @staticmethod
    def from_zeta(
        eq: EvolutionEquation,
        zeta: Expression,
        q: Expression,
        K1: Any,
        K2: Any,
        label: str = "rho = zeta u",
    ) -> ConservationLaw:
        """
        rho = zeta u,
        sigma = -(u_xx - K1 u_x + q) zeta_x + (u_xxx + a u_y + f - K2) zeta,
        y-flux = -a u zeta_x.
        """
        a, f = Families._gir_data(eq)
        zeta_x = total_x(zeta)
        sigma = -(Expression.jet(2, 0) - K1 * U_X + q) * zeta_x + (
            Expression.jet(3, 0) + a * Expression.jet(0, 1) + f - K2
        ) * zeta
        return ConservationLaw(zeta * U, sigma, -a * U * zeta_x, eq, label=label)

    @staticmethod
    def linear_ux(
        a: Spec = "a",
        q: Spec = "q",
        k0: Spec = "k0",
        k1: Spec = "k1",
        L: Spec = "L",
        K2: Optional[Spec] = None,
        K0: Spec = 0,
    ) -> Tuple[EvolutionEquation, ConservationLaw]:
        """
        f = g(u) u_x + k1 u + k0 with g = q'.

        Args:
            q: The primitive of g; a function name or an Expression in u[0,0].
            K2: The constant subtracted in the x-flux; defaults to k0.
            K0: An integration constant added to q.

        Returns:
            The equation and the law with zeta = t(a L' - k1 L) + x L.
        """
        a, k0, k1 = constant(a), constant(k0), constant(k1)
        q = function_of(q, U)
        f = q.pdiff(U) * U_X + k1 * U + k0
        eq = EvolutionEquation.make_gir(a, f, label="linear in u_x")
        L = function_of(L, Y)
        zeta = T * (a * L.pdiff(Y) - k1 * L) + X * L
        K2 = k0 if K2 is None else constant(K2)
        return eq, Families.from_zeta(eq, zeta, q + constant(K0), ZERO, K2, label="linear in u_x")

    @staticmethod
    def exponential(
        a: Spec = "a",
        h: Spec = "h",
        c0: Spec = "c0",
        c1: Spec = "c1",
        F: str = "F",
    ) -> Tuple[EvolutionEquation, ConservationLaw]:
        """
        f = (c1 h'(u) + c0) u_x + h(u), with q = c1 h + (c0 + 1/c1^2) u, K1 = 1/c1, K2 = 0
        and zeta = exp(x/c1 + t(c0/c1^2 + 1/c1^4)) F(a t + c1 y).

        Raises:
            VerificationError: If c1 is literally zero.
        """
        a, c0, c1 = constant(a), constant(c0), constant(c1)
        if c1.is_zero():
            raise VerificationError("the exponential family needs c1 != 0")
        inv = c1 ** -1
        h = function_of(h, U)
        f = (c1 * h.pdiff(U) + c0) * U_X + h
        eq = EvolutionEquation.make_gir(a, f, label="exponential")
        q = c1 * h + (c0 + inv**2) * U
        zeta = Expression.exp(X * inv + T * (c0 * inv**2 + inv**4)) * Expression.atom(
            F, [a * T + c1 * Y]
        )
        return eq, Families.from_zeta(eq, zeta, q, inv, ZERO, label="exponential")

    @staticmethod
    def uniform(
        a: Spec = "a",
        g: Spec = "g",
        ct0: Spec = "ct0",
        ct1: Spec = "ct1",
        ct2: Spec = "ct2",
        L: Spec = "L",
        F: str = "F",
    ) -> Tuple[EvolutionEquation, ConservationLaw]:
        """
        The uniform presentation f = u_x g'(u) + ct1 g + ct0 u + ct2.

        A literal ct1 = 0 gives zeta = x L + t(a L' - ct0 L) with q = g, K1 = 0; otherwise
        zeta = exp(ct1 x + (ct0 - ct1^3) y / a) F(y/ct1 + a t) with q = g + ct1^2 u and
        K1 = ct1. K2 = ct2 in both branches; the second branch needs an invertible a.
        """
        a, ct0, ct1, ct2 = constant(a), constant(ct0), constant(ct1), constant(ct2)
        g = function_of(g, U)
        f = U_X * g.pdiff(U) + ct1 * g + ct0 * U + ct2
        eq = EvolutionEquation.make_gir(a, f, label="uniform")
        if ct1.is_zero():
            L = function_of(L, Y)
            zeta = X * L + T * (a * L.pdiff(Y) - ct0 * L)
            return eq, Families.from_zeta(eq, zeta, g, ZERO, ct2, label="uniform, ct1 = 0")
        zeta = Expression.exp(ct1 * X + (ct0 - ct1**3) * Y / a) * Expression.atom(
            F, [Y / ct1 + a * T]
        )
        return eq, Families.from_zeta(eq, zeta, g + ct1**2 * U, ct1, ct2, label="uniform, ct1 != 0")
