from typing import Any

from .DiffOperator import DiffOperator
from .Expression import Expression
from .TotalDerivative import total_power


class Variational:
    """The variational derivative and the linearization of local functions."""

    @staticmethod
    def euler(e: Any) -> Expression:
        """
        delta/delta u = sum (-1)^(i+j) D_x^i D_y^j o d/du[i,j].

        Only the jet variables present in ``e`` contribute, so the sum is finite.
        """
        e = Expression.coerce(e)
        parts = []
        for v in e.jet_vars():
            partial = e.pdiff(v)
            if partial.is_zero():
                continue
            term = total_power(partial, v.i, v.j)
            parts.append(-term if (v.i + v.j) % 2 else term)
        return Expression.sum(parts)

    @staticmethod
    def frechet(h: Any) -> DiffOperator:
        """D_h = sum dh/du[i,j] D_x^i D_y^j."""
        h = Expression.coerce(h)
        return DiffOperator({(v.i, v.j): h.pdiff(v) for v in h.jet_vars()})
