from typing import Any, Dict, Iterable, List, Tuple

from .DiffOperator import DiffOperator
from .Errors import SplittingError
from .EvolutionEquation import EvolutionEquation
from .Expression import Expression, Monomial, _as_generator
from .Generator import FnAtom, JetVar


class Determining:
    """
    Determining equations of an evolution equation u_t = F and the coefficient
    splitting used to read consequences off them.

    Residuals are returned exactly as computed from the defining identities:
    cosymmetries D_t(gamma) + D_F*(gamma), symmetries D_t(G) - D_F(G), Noether operators
    D_t(N) - D_F o N - N o D_F*, inverse Noether operators D_t(B) + D_F o B + B o D_F.
    """

    @staticmethod
    def cosym_residual(eq: EvolutionEquation, gamma: Any) -> Expression:
        gamma = Expression.coerce(gamma)
        return eq.total_t(gamma) + eq.linearization_adjoint().apply(gamma)

    @staticmethod
    def sym_residual(eq: EvolutionEquation, G: Any) -> Expression:
        G = Expression.coerce(G)
        return eq.total_t(G) - eq.linearization().apply(G)

    @staticmethod
    def noether_residual(eq: EvolutionEquation, N: DiffOperator) -> DiffOperator:
        linearization = eq.linearization()
        return N.dt(eq) - linearization.compose(N) - N.compose(eq.linearization_adjoint())

    @staticmethod
    def inverse_noether_residual(
        eq: EvolutionEquation, B: DiffOperator, adjoint_left: bool = False
    ) -> DiffOperator:
        """
        D_t(B) + D_F o B + B o D_F.

        With ``adjoint_left`` the left factor is D_F* instead, the pattern under which
        B maps symmetry characteristics to cosymmetries.
        """
        linearization = eq.linearization()
        left = eq.linearization_adjoint() if adjoint_left else linearization
        return B.dt(eq) + left.compose(B) + B.compose(linearization)

    @staticmethod
    def maps_cosymmetries(eq: EvolutionEquation, N: DiffOperator, gamma: Any) -> Expression:
        """Symmetry residual of N(gamma); zero when N sends the cosymmetry to a symmetry."""
        return Determining.sym_residual(eq, N.apply(gamma))

    @staticmethod
    def maps_symmetries(eq: EvolutionEquation, J: DiffOperator, G: Any) -> Expression:
        """Cosymmetry residual of J(G)."""
        return Determining.cosym_residual(eq, J.apply(G))

    @staticmethod
    def generic_function(name: str, k: int = -1, l: int = -1) -> Expression:
        """
        An opaque function of x, y, t and of every u[a,b] with a <= k and b <= l.

        ``k`` or ``l`` negative gives a function of x, y and t alone.
        """
        args = [Expression.indep(v) for v in ("x", "y", "t")]
        if k >= 0 and l >= 0:
            args.extend(Expression.jet(a, b) for a in range(k + 1) for b in range(l + 1))
        return Expression.atom(name, args)

    @staticmethod
    def separant(e: Expression, v: Any) -> Expression:
        """Partial derivative of a determining equation by a jet variable."""
        return Expression.coerce(e).pdiff(v)

    @staticmethod
    def split_by_jet(e: Expression, v: Any) -> List[Tuple[int, Expression]]:
        """
        Coefficients of the powers of ``v`` as (power, coefficient) pairs, lowest first.

        Raises:
            SplittingError: If ``v`` is not a jet variable or ``e`` is not polynomial in it.
        """
        g = _as_generator(v)
        if not isinstance(g, JetVar):
            raise SplittingError(f"split_by_jet needs a jet variable, got {g}")
        return list(Expression.coerce(e).coefficients_in(g).items())

    @staticmethod
    def split_by_fn_atoms(
        e: Expression, atoms: Iterable[Any]
    ) -> Tuple[Dict[FnAtom, Expression], Expression]:
        """
        Split an expression linear in the given atoms.

        Returns:
            The coefficient of every listed atom (zero when absent) and the remainder free
            of all of them.

        Raises:
            SplittingError: If a listed atom occurs with a power other than one, together
                with another listed atom, or inside the argument of another atom.
        """
        targets = []
        for atom in atoms:
            g = _as_generator(atom)
            if not isinstance(g, FnAtom):
                raise SplittingError(f"split_by_fn_atoms needs function atoms, got {g}")
            targets.append(g)
        wanted = frozenset(targets)
        grouped: Dict[FnAtom, Dict[Monomial, Any]] = {g: {} for g in targets}
        remainder: Dict[Monomial, Any] = {}
        for mono, c in Expression.coerce(e).items():
            hits = [(g, k) for g, k in mono if g in wanted]
            for g, _ in mono:
                if g not in wanted and isinstance(g, FnAtom):
                    if any(arg.mentions(t) for arg in g.args for t in targets):
                        raise SplittingError(f"a listed atom occurs inside {g}")
            if not hits:
                remainder[mono] = c
                continue
            if len(hits) > 1 or hits[0][1] != 1:
                listed = ", ".join(f"{g}^{k}" for g, k in hits)
                raise SplittingError(f"nonlinear occurrence of listed atoms: {listed}")
            atom = hits[0][0]
            rest = tuple((g, k) for g, k in mono if g != atom)
            grouped[atom][rest] = c
        coefficients = {g: Expression(terms) for g, terms in grouped.items()}
        return coefficients, Expression(remainder)
