from functools import lru_cache
from typing import Callable

from .Derivation import Derivation
from .Expression import ONE, ZERO, Expression
from .Generator import Generator, IndepVar, JetVar


class TotalDerivative(Derivation):
    """
    The total derivative D_x (resp. D_y): d/dx + sum u[i+1,j] d/du[i,j].

    Only the finitely many jet variables present in an expression contribute, and
    function atoms are differentiated through their arguments.
    """

    def __init__(self, direction: str):
        super().__init__()
        if direction not in ("x", "y"):
            raise ValueError(f"total derivative direction must be x or y, got {direction}")
        self.direction = direction
        self._shift = (1, 0) if direction == "x" else (0, 1)

    def on_generator(self, g: Generator) -> Expression:
        if isinstance(g, IndepVar):
            return ONE if g.name == self.direction else ZERO
        if isinstance(g, JetVar):
            return Expression.from_generator(g.shifted(*self._shift))
        return ZERO


class TimeDerivative(Derivation):
    """
    D_t adapted to an evolution equation u_t = F.

    ``prolongation(i, j)`` must return D_x^i D_y^j(F); it stands in for the
    t-derivative of u[i,j], so no t-jets are ever produced.
    """

    def __init__(self, prolongation: Callable[[int, int], Expression]):
        super().__init__()
        self._prolongation = prolongation

    def on_generator(self, g: Generator) -> Expression:
        if isinstance(g, IndepVar):
            return ONE if g.name == "t" else ZERO
        if isinstance(g, JetVar):
            return self._prolongation(g.i, g.j)
        return ZERO


D_X = TotalDerivative("x")
D_Y = TotalDerivative("y")


def total_x(e: Expression) -> Expression:
    return D_X(e)


def total_y(e: Expression) -> Expression:
    return D_Y(e)


@lru_cache(maxsize=1 << 16)
def total_power(e: Expression, i: int, j: int) -> Expression:
    """D_x^i D_y^j applied to ``e``; intermediate powers are memoized."""
    if i < 0 or j < 0:
        raise ValueError(f"negative derivative order ({i}, {j})")
    if i == 0 and j == 0:
        return e
    if i > 0:
        return D_X(total_power(e, i - 1, j))
    return D_Y(total_power(e, 0, j - 1))
