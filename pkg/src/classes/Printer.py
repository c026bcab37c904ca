from fractions import Fraction
from typing import List

from .Generator import FnAtom, Generator


class Printer:
    """
    Renders Expressions and DiffOperators in the DSL accepted by the Parser.

    Terms come out in canonical order, coefficients as ``p`` or ``p/q``, powers as
    ``^k`` with negative exponents written ``c1^-1``.
    """

    def render(self, expression) -> str:
        terms = expression.terms()
        if not terms:
            return "0"
        out: List[str] = []
        for index, (mono, c) in enumerate(terms):
            body = self._monomial(mono, abs(c))
            if index == 0:
                out.append(f"-{body}" if c < 0 else body)
            else:
                out.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(out)

    def _monomial(self, mono, magnitude: Fraction) -> str:
        factors = [self._power(g, e) for g, e in mono]
        if magnitude != 1 or not factors:
            factors.insert(0, self._rational(magnitude))
        return "*".join(factors)

    @staticmethod
    def _rational(value: Fraction) -> str:
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    def _power(self, g: Generator, e: int) -> str:
        text = self.generator(g)
        return text if e == 1 else f"{text}^{e}"

    def generator(self, g: Generator) -> str:
        if isinstance(g, FnAtom):
            arguments = ",".join(self.render(arg) for arg in g.args)
            if any(g.deriv):
                index = ",".join(str(d) for d in g.deriv)
                return f"d({g.name};{index})({arguments})"
            return f"{g.name}({arguments})"
        return str(g)

    def render_operator(self, operator) -> str:
        """Highest graded-lex key first, each term as ``(coefficient)*Dx^i*Dy^j``."""
        if operator.is_zero():
            return "0"
        rendered = []
        for (i, j), h in reversed(operator.items()):
            derivatives = []
            if i:
                derivatives.append("Dx" if i == 1 else f"Dx^{i}")
            if j:
                derivatives.append("Dy" if j == 1 else f"Dy^{j}")
            coefficient = self.render(h)
            if not derivatives:
                rendered.append(f"({coefficient})")
            else:
                rendered.append(f"({coefficient})*{'*'.join(derivatives)}")
        return " + ".join(rendered)
