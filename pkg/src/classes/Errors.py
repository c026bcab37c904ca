from typing import Optional, Tuple


class JetlawError(Exception):
    """Base class for every error raised by the engine."""


class NormalizationError(JetlawError):
    """An expression left the representable class (e.g. a negative power of a jet variable)."""


class ArityError(JetlawError):
    """A function atom was used with the wrong number of arguments or derivative indices."""


class EquationSpecError(JetlawError):
    """An equation spec such as ``gir(a=1, f=f)`` could not be understood."""


class SplittingError(JetlawError):
    """Coefficient splitting met an occurrence it cannot split on."""


class VerificationError(JetlawError):
    """A verification routine was called outside its precondition."""


class ParseError(JetlawError):
    """
    Syntax error in the expression DSL.

    Carries the offending source text and the (start, end) character span so that
    callers can point at the problem.
    """

    def __init__(
        self,
        message: str,
        source: str = "",
        span: Optional[Tuple[int, int]] = None,
    ):
        self.message = message
        self.source = source
        self.span = span
        super().__init__(self.render())

    def render(self) -> str:
        if self.span is None or not self.source:
            return self.message
        start, end = self.span
        width = max(1, end - start)
        return (
            f"{self.message} at {start}..{end}\n"
            f"  {self.source}\n"
            f"  {' ' * start}{'^' * width}"
        )
