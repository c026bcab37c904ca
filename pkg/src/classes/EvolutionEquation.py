import threading
from typing import Dict, Optional, Tuple, Union

from .Errors import ArityError, EquationSpecError
from .Expression import Expression
from .Generator import FnAtom, IndepVar, JetVar, SymConst
from .TotalDerivative import TimeDerivative, total_power, total_x
from .Variational import Variational

U = Expression.jet(0, 0)
U_X = Expression.jet(1, 0)


class EvolutionEquation:
    """
    An evolution equation u_t = F in normal form.

    ``rhs`` is F; it never mentions t-derivatives of u because the engine has no
    t-jet generators. Prolongations D_x^i D_y^j(F) are computed on demand and cached
    per equation, so several threads may share one equation.
    """

    def __init__(
        self,
        rhs: Expression,
        label: str = "",
        a: Optional[Expression] = None,
        f: Optional[Expression] = None,
    ):
        self.rhs = Expression.coerce(rhs)
        self.label = label or "custom"
        self.a = a
        self.f = f
        self._prolongations: Dict[Tuple[int, int], Expression] = {(0, 0): self.rhs}
        self._lock = threading.Lock()
        self._time_derivative = TimeDerivative(self.prolongation)
        self._linearization = None
        self._linearization_adjoint = None

    @staticmethod
    def make_gir(
        a: Union[Expression, int, str],
        f: Union[Expression, FnAtom, str],
        label: Optional[str] = None,
    ) -> "EvolutionEquation":
        """
        Build the equation u_t = -(u_xxx + a u_y + f)_x.

        Args:
            a: The constant coefficient; a symbol name, a rational, or an Expression
                over symbolic constants.
            f: Either the name of an opaque function f(u[0,0], u[1,0]), an FnAtom of
                arity two on those arguments, or an Expression in u[0,0] and u[1,0].
            label: Optional display label.

        Returns:
            EvolutionEquation: The equation with ``a`` and ``f`` kept as metadata.

        Raises:
            ArityError: If f is not a function of u[0,0] and u[1,0].
            EquationSpecError: If a is not a constant.
        """
        a = Expression.symbol(a) if isinstance(a, str) else Expression.coerce(a)
        if any(not isinstance(g, SymConst) for g in a.generators()):
            raise EquationSpecError(f"a must be built from symbolic constants, got {a}")
        f = EvolutionEquation._gir_nonlinearity(f)
        rhs = -Expression.jet(4, 0) - a * Expression.jet(1, 1) - total_x(f)
        return EvolutionEquation(rhs, label or f"gir(a={a}, f={f})", a=a, f=f)

    @staticmethod
    def _gir_nonlinearity(f: Union[Expression, FnAtom, str]) -> Expression:
        if isinstance(f, str):
            return Expression.atom(f, [U, U_X])
        if isinstance(f, FnAtom):
            if f.arity != 2 or f.args != (U, U_X):
                raise ArityError(f"f must be declared as {f.name}(u[0,0],u[1,0]), got {f}")
            return Expression.from_generator(f)
        f = Expression.coerce(f)
        allowed = {JetVar(0, 0), JetVar(1, 0)}
        stray = [str(v) for v in f.jet_vars() if v not in allowed]
        if stray:
            raise ArityError(f"f may depend on u[0,0] and u[1,0] only, found {', '.join(stray)}")
        if any(isinstance(g, IndepVar) for g in f.generators()):
            raise ArityError(f"f may not depend explicitly on x, y or t: {f}")
        return f

    def prolongation(self, i: int, j: int) -> Expression:
        """D_x^i D_y^j applied to the right-hand side, cached per (i, j)."""
        key = (i, j)
        cached = self._prolongations.get(key)
        if cached is not None:
            return cached
        result = total_power(self.rhs, i, j)
        with self._lock:
            return self._prolongations.setdefault(key, result)

    def total_t(self, e: Expression) -> Expression:
        """D_t = d/dt + sum D_x^i D_y^j(F) d/du[i,j] restricted to the jets of ``e``."""
        return self._time_derivative(Expression.coerce(e))

    def linearization(self):
        """The Frechet derivative D_F of the right-hand side."""
        if self._linearization is None:
            self._linearization = Variational.frechet(self.rhs)
        return self._linearization

    def linearization_adjoint(self):
        """The formal adjoint D_F* of the linearization."""
        if self._linearization_adjoint is None:
            self._linearization_adjoint = self.linearization().adjoint()
        return self._linearization_adjoint

    def same_as(self, other: "EvolutionEquation") -> bool:
        return self is other or self.rhs == other.rhs

    def __str__(self) -> str:
        return f"u_t = {self.rhs}"

    def __repr__(self) -> str:
        return f"EvolutionEquation({self.label})"
