from math import comb
from typing import Any, Dict, Iterable, List, Tuple, Union

from .Expression import ONE, ZERO, Expression
from .TotalDerivative import total_power

Key = Tuple[int, int]
Degree = Union[int, float]
NEG_INF = float("-inf")


def graded_key(key: Key) -> Tuple[int, int]:
    """Graded-lex rank of a D_x^i D_y^j monomial: total order first, then i."""
    i, j = key
    return (i + j, i)


class DiffOperator:
    """
    A linear differential operator sum h_ij D_x^i D_y^j in standard form.

    Coefficients sit to the left of the derivatives and zero coefficients are never
    stored, so the leading coefficient of any bidegree is a dictionary lookup.
    Composition and adjoint always return operators in standard form.
    """

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Dict[Key, Any] = None):
        self._coefficients: Dict[Key, Expression] = {}
        for (i, j), h in (coefficients or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative derivative order ({i}, {j})")
            h = Expression.coerce(h)
            if not h.is_zero():
                self._coefficients[(i, j)] = h

    @staticmethod
    def zero() -> "DiffOperator":
        return DiffOperator()

    @staticmethod
    def identity() -> "DiffOperator":
        return DiffOperator({(0, 0): ONE})

    @staticmethod
    def monomial(i: int, j: int, coefficient: Any = 1) -> "DiffOperator":
        return DiffOperator({(i, j): coefficient})

    @staticmethod
    def dx(n: int = 1) -> "DiffOperator":
        return DiffOperator({(n, 0): ONE})

    @staticmethod
    def dy(n: int = 1) -> "DiffOperator":
        return DiffOperator({(0, n): ONE})

    @staticmethod
    def multiplication(h: Any) -> "DiffOperator":
        return DiffOperator({(0, 0): h})

    # access

    def coefficient(self, i: int, j: int) -> Expression:
        return self._coefficients.get((i, j), ZERO)

    def keys(self) -> List[Key]:
        return sorted(self._coefficients, key=graded_key)

    def items(self) -> List[Tuple[Key, Expression]]:
        return [(k, self._coefficients[k]) for k in self.keys()]

    def is_zero(self) -> bool:
        return not self._coefficients

    def top_key(self) -> Key:
        """The largest stored key in graded-lex order on (i+j, i)."""
        if not self._coefficients:
            raise ValueError("the zero operator has no top coefficient")
        return max(self._coefficients, key=graded_key)

    def deg(self) -> Tuple[Degree, Degree]:
        """(deg_x, deg_y); both are -inf for the zero operator."""
        if not self._coefficients:
            return NEG_INF, NEG_INF
        return (
            max(i for i, _ in self._coefficients),
            max(j for _, j in self._coefficients),
        )

    # linear structure

    @staticmethod
    def _collect(parts: Dict[Key, List[Expression]]) -> "DiffOperator":
        return DiffOperator({key: Expression.sum(exprs) for key, exprs in parts.items()})

    def __add__(self, other: "DiffOperator") -> "DiffOperator":
        if not isinstance(other, DiffOperator):
            return NotImplemented
        parts: Dict[Key, List[Expression]] = {}
        for key, h in list(self._coefficients.items()) + list(other._coefficients.items()):
            parts.setdefault(key, []).append(h)
        return DiffOperator._collect(parts)

    def __neg__(self) -> "DiffOperator":
        return DiffOperator({key: -h for key, h in self._coefficients.items()})

    def __sub__(self, other: "DiffOperator") -> "DiffOperator":
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Any) -> "DiffOperator":
        """Multiply every coefficient on the left by ``factor``."""
        factor = Expression.coerce(factor)
        return DiffOperator({key: factor * h for key, h in self._coefficients.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(frozenset(self._coefficients.items()))

    # action

    def apply(self, e: Any) -> Expression:
        """sum h_ij * D_x^i D_y^j(e)."""
        e = Expression.coerce(e)
        return Expression.sum(h * total_power(e, i, j) for (i, j), h in self._coefficients.items())

    __call__ = apply

    def compose(self, other: "DiffOperator") -> "DiffOperator":
        """
        The operator ``self`` after ``other``.

        D_x^i D_y^j is moved past each coefficient b of ``other`` with the Leibniz rule
        D_x^i D_y^j b = sum C(i,m) C(j,n) D_x^(i-m) D_y^(j-n)(b) D_x^m D_y^n.
        """
        parts: Dict[Key, List[Expression]] = {}
        for (i, j), a in self._coefficients.items():
            for (k, l), b in other._coefficients.items():
                for m in range(i + 1):
                    for n in range(j + 1):
                        derived = total_power(b, i - m, j - n)
                        if derived.is_zero():
                            continue
                        term = (a * derived).scale(comb(i, m) * comb(j, n))
                        parts.setdefault((m + k, n + l), []).append(term)
        return DiffOperator._collect(parts)

    def __matmul__(self, other: "DiffOperator") -> "DiffOperator":
        return self.compose(other)

    def adjoint(self) -> "DiffOperator":
        """The formal adjoint sum (-D_x)^i (-D_y)^j o h_ij, brought to standard form."""
        parts: Dict[Key, List[Expression]] = {}
        for (i, j), h in self._coefficients.items():
            sign = -1 if (i + j) % 2 else 1
            for m in range(i + 1):
                for n in range(j + 1):
                    derived = total_power(h, i - m, j - n)
                    if derived.is_zero():
                        continue
                    parts.setdefault((m, n), []).append(
                        derived.scale(sign * comb(i, m) * comb(j, n))
                    )
        return DiffOperator._collect(parts)

    def dt(self, eq) -> "DiffOperator":
        """Coefficient-wise D_t along ``eq``."""
        return DiffOperator({key: eq.total_t(h) for key, h in self._coefficients.items()})

    def map_coefficients(self, fn) -> "DiffOperator":
        return DiffOperator({key: fn(h) for key, h in self._coefficients.items()})

    def vanish(self, names: Iterable[str]) -> "DiffOperator":
        names = frozenset(names)
        return self.map_coefficients(lambda h: h.vanish(names))

    def substitute(self, mapping: Dict[Any, Any]) -> "DiffOperator":
        return self.map_coefficients(lambda h: h.substitute(mapping))

    def __str__(self) -> str:
        from .Printer import Printer

        return Printer().render_operator(self)

    def __repr__(self) -> str:
        return f"DiffOperator({self})"
