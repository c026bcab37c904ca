from typing import Dict, List, Tuple

from .DiffOperator import DiffOperator, graded_key
from .Expression import Expression


class AnsatzOperator:
    """
    The general operator sum_{i<=r, j<=s} p_ij D_x^i D_y^j with opaque coefficients.

    Every p_ij is a distinct function atom named ``{prefix}_{i}_{j}`` depending on
    x, y, t and on the jet variables u[a,b] with a + b <= ``order``. Negative ``r`` or
    ``s`` gives the empty ansatz.
    """

    def __init__(self, r: int, s: int, order: int = 0, prefix: str = "p"):
        if order < 0:
            raise ValueError(f"coefficient jet order must be nonnegative, got {order}")
        self.r = r
        self.s = s
        self.order = order
        self.prefix = prefix
        self.arguments: List[Expression] = [Expression.indep(v) for v in ("x", "y", "t")]
        for total in range(order + 1):
            for a in range(total, -1, -1):
                self.arguments.append(Expression.jet(a, total - a))
        self.coefficients: Dict[Tuple[int, int], Expression] = {
            (i, j): Expression.atom(self.name(i, j), self.arguments)
            for i in range(max(r + 1, 0))
            for j in range(max(s + 1, 0))
        }

    def name(self, i: int, j: int) -> str:
        return f"{self.prefix}_{i}_{j}"

    def names(self) -> List[str]:
        """Coefficient names, highest graded-lex key first."""
        keys = sorted(self.coefficients, key=graded_key, reverse=True)
        return [self.name(i, j) for i, j in keys]

    def is_empty(self) -> bool:
        return not self.coefficients

    def operator(self) -> DiffOperator:
        return DiffOperator(self.coefficients)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __str__(self) -> str:
        return f"sum {self.prefix}_ij Dx^i Dy^j, i<={self.r}, j<={self.s}, order {self.order}"
