from fractions import Fraction
from typing import Any, Optional, Union

from .Errors import VerificationError
from .EvolutionEquation import EvolutionEquation
from .Expression import Expression
from .TotalDerivative import total_x, total_y
from .Variational import Variational


class ConservationLaw:
    """
    A triple (rho, sigma, zeta) with D_t(rho) + D_x(sigma) + D_y(zeta) = 0 on ``eq``.

    rho is the density, sigma and zeta the x- and y-flux. The all-zero triple is
    representable but reported as degenerate.
    """

    def __init__(
        self,
        rho: Any,
        sigma: Any,
        zeta: Any,
        eq: EvolutionEquation,
        label: str = "",
    ):
        self.rho = Expression.coerce(rho)
        self.sigma = Expression.coerce(sigma)
        self.zeta = Expression.coerce(zeta)
        self.eq = eq
        self.label = label
        self._residual: Optional[Expression] = None

    def residual(self) -> Expression:
        """D_t(rho) + D_x(sigma) + D_y(zeta) along the equation."""
        if self._residual is None:
            self._residual = (
                self.eq.total_t(self.rho) + total_x(self.sigma) + total_y(self.zeta)
            )
        return self._residual

    def verifies(self) -> bool:
        return self.residual().is_zero()

    def characteristic(self) -> Expression:
        return Variational.euler(self.rho)

    def is_degenerate(self) -> bool:
        return self.rho.is_zero() and self.sigma.is_zero() and self.zeta.is_zero()

    def is_trivial_by_characteristic(self) -> bool:
        """
        Trivial in the sense of vanishing characteristic.

        Raises:
            VerificationError: If the triple is not a conservation law of its equation.
        """
        if not self.verifies():
            raise VerificationError(
                f"{self.label or 'triple'} does not verify; residual {self.residual()}"
            )
        return self.characteristic().is_zero()

    @staticmethod
    def trivial_from_potentials(
        alpha: Any, beta: Any, gamma: Any, eq: EvolutionEquation
    ) -> "ConservationLaw":
        """
        The trivial law built from potentials:
        rho = D_x(alpha) - D_y(beta), sigma = D_y(gamma) - D_t(alpha),
        zeta = D_t(beta) - D_x(gamma).
        """
        alpha, beta, gamma = (Expression.coerce(p) for p in (alpha, beta, gamma))
        return ConservationLaw(
            total_x(alpha) - total_y(beta),
            total_y(gamma) - eq.total_t(alpha),
            eq.total_t(beta) - total_x(gamma),
            eq,
            label="trivial",
        )

    @staticmethod
    def combine(
        c1: Union[int, Fraction],
        cl1: "ConservationLaw",
        c2: Union[int, Fraction],
        cl2: "ConservationLaw",
    ) -> "ConservationLaw":
        """
        Component-wise c1*cl1 + c2*cl2.

        Raises:
            VerificationError: If the two laws belong to different equations.
        """
        if not cl1.eq.same_as(cl2.eq):
            raise VerificationError(
                f"cannot combine laws of different equations: {cl1.eq} and {cl2.eq}"
            )
        return ConservationLaw(
            cl1.rho.scale(c1) + cl2.rho.scale(c2),
            cl1.sigma.scale(c1) + cl2.sigma.scale(c2),
            cl1.zeta.scale(c1) + cl2.zeta.scale(c2),
            cl1.eq,
            label=f"{c1}*({cl1.label}) + {c2}*({cl2.label})",
        )

    def __str__(self) -> str:
        return f"(rho={self.rho}, sigma={self.sigma}, zeta={self.zeta})"

    def __repr__(self) -> str:
        return f"ConservationLaw({self.label or self})"

