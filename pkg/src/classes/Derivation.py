from functools import lru_cache

import sympy

from .Expression import ONE, ZERO, Expression
from .Generator import FnAtom, Generator, merge_arities

IMAGE_CACHE_SIZE = 1 << 12


class Derivation:
    """
    A derivation of the expression ring, fixed by its value on each generator.

    Subclasses only say what happens to independent variables, constants and jet
    variables; function atoms are handled here by the chain rule, bumping the
    derivative multi-index of the atom for every argument the derivation touches.
    Applying the derivation sums sympy's partial derivative by each generator times
    that generator's image. Images are memoized per instance in a bounded cache.
    """

    def __init__(self):
        self.image = lru_cache(maxsize=IMAGE_CACHE_SIZE)(self._image)

    def on_generator(self, g: Generator) -> Expression:
        raise NotImplementedError

    def _image(self, g: Generator) -> Expression:
        if isinstance(g, FnAtom):
            return self._chain_rule(g)
        return self.on_generator(g)

    def _chain_rule(self, atom: FnAtom) -> Expression:
        if atom.is_exp:
            return Expression.from_generator(atom) * self(atom.args[0])
        parts = []
        for k, arg in enumerate(atom.args):
            inner = self(arg)
            if not inner.is_zero():
                parts.append(Expression.from_generator(atom.bump(k)) * inner)
        return Expression.sum(parts)

    def __call__(self, e: Expression) -> Expression:
        expr = e.as_sympy()
        parts = []
        arities = [e.arities()]
        for g in e.generators():
            d = self.image(g)
            if d.is_zero():
                continue
            arities.append(d.arities())
            parts.append(sympy.diff(expr, g.symbol) * d.as_sympy())
        merge_arities(*arities)
        return Expression.from_sympy(sympy.Add(*parts))


class PartialDerivative(Derivation):
    """Partial derivative with respect to a single generator."""

    def __init__(self, target: Generator):
        self.target = target
        super().__init__()

    def _image(self, g: Generator) -> Expression:
        if g == self.target:
            return ONE
        return super()._image(g)

    def on_generator(self, g: Generator) -> Expression:
        return ZERO

    @staticmethod
    @lru_cache(maxsize=4096)
    def of(target: Generator) -> "PartialDerivative":
        return PartialDerivative(target)
