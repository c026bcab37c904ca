import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

from .AnsatzOperator import AnsatzOperator
from .Determining import Determining
from .DiffOperator import DiffOperator
from .EvolutionEquation import EvolutionEquation
from .Expression import Expression
from .Generator import FnAtom

FORCED_ZERO = "forced-zero"
INCONCLUSIVE = "inconclusive"
NOETHER = "noether"
INVERSE = "inverse"
INVERSE_ADJOINT = "inverse-adjoint"


@dataclass
class ScanStep:
    key: Tuple[int, int]
    coefficient_name: str
    factor: Fraction


@dataclass
class ScanReport:
    pattern: str
    r: int
    s: int
    order: int
    verdict: str
    chain: List[ScanStep] = field(default_factory=list)
    offending: Optional[Expression] = None
    offending_key: Optional[Tuple[int, int]] = None
    millis: float = 0.0

    @property
    def forced_zero(self) -> bool:
        return self.verdict == FORCED_ZERO

    def factors(self) -> List[Fraction]:
        return sorted({step.factor for step in self.chain})

    def chain_names(self) -> List[str]:
        return [step.coefficient_name for step in self.chain]


class NoetherScan:
    """
    Leading-term elimination for Noether and inverse Noether operators.

    The residual of the general ansatz is computed once. Its top coefficient in
    graded-lex order on (i+j, i) must be a constant multiple of a single ansatz
    coefficient; that coefficient is then set to zero in the whole residual and the
    next top coefficient is examined, until the residual vanishes.
    """

    def __init__(
        self,
        eq: EvolutionEquation,
        on_step: Optional[Callable[[ScanStep], None]] = None,
    ):
        self.eq = eq
        self.on_step = on_step

    def residual(self, ansatz: AnsatzOperator, pattern: str) -> DiffOperator:
        operator = ansatz.operator()
        if pattern == NOETHER:
            return Determining.noether_residual(self.eq, operator)
        if pattern == INVERSE:
            return Determining.inverse_noether_residual(self.eq, operator)
        if pattern == INVERSE_ADJOINT:
            return Determining.inverse_noether_residual(self.eq, operator, adjoint_left=True)
        raise ValueError(f"unknown operator pattern {pattern!r}")

    def run(self, r_max: int, s_max: int, order: int, pattern: str = NOETHER) -> ScanReport:
        """
        Scan the ansatz with orders up to (r_max, s_max).

        Returns:
            ScanReport: ``forced-zero`` with the elimination chain, or ``inconclusive``
            with the top coefficient that did not have the expected shape.
        """
        started = time.perf_counter()
        ansatz = AnsatzOperator(r_max, s_max, order, prefix="b" if pattern != NOETHER else "p")
        report = ScanReport(pattern, r_max, s_max, order, FORCED_ZERO)
        residual = self.residual(ansatz, pattern) if not ansatz.is_empty() else DiffOperator()
        remaining = set(ansatz.names())

        while not residual.is_zero():
            key = residual.top_key()
            top = residual.coefficient(*key)
            name, factor = self._single_coefficient(top, remaining)
            if name is None:
                report.verdict = INCONCLUSIVE
                report.offending = top
                report.offending_key = key
                break
            step = ScanStep(key, name, factor)
            report.chain.append(step)
            if self.on_step is not None:
                self.on_step(step)
            remaining.discard(name)
            residual = residual.vanish([name])

        if report.verdict == FORCED_ZERO and remaining:
            # residual vanished while some coefficients were never pinned down
            report.verdict = INCONCLUSIVE
        report.millis = (time.perf_counter() - started) * 1000
        return report

    @staticmethod
    def _single_coefficient(top: Expression, remaining) -> Tuple[Optional[str], Fraction]:
        scaled = top.as_scaled_generator()
        if scaled is None:
            return None, Fraction(0)
        factor, g = scaled
        if not isinstance(g, FnAtom) or any(g.deriv) or g.name not in remaining:
            return None, Fraction(0)
        return g.name, factor
