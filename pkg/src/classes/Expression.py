from fractions import Fraction
from typing import (
    Any,
    Callable,
    Dict,
    FrozenSet,
    Iterable,
    List,
    Optional,
    Tuple,
    Union,
)

import sympy

from .Errors import NormalizationError, SplittingError
from .Generator import (
    FnAtom,
    Generator,
    IndepVar,
    JetVar,
    SymConst,
    intern,
    merge_arities,
)

Monomial = Tuple[Tuple[Generator, int], ...]
Scalar = Union[int, Fraction]


def _mono_key(mono: Monomial) -> Tuple[Any, ...]:
    return tuple((g.sort_key, e) for g, e in mono)


def _check_power(g: Generator, e: int) -> None:
    if e < 0 and not g.allows_negative_powers():
        raise NormalizationError(f"negative power {e} of {g} is not representable")


def _rational(value: Scalar) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def _fraction(value: sympy.Rational) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def _term_map(expr: sympy.Expr) -> Dict[Monomial, Fraction]:
    terms: Dict[Monomial, Fraction] = {}
    for term in sympy.Add.make_args(expr):
        coefficient, rest = term.as_coeff_Mul()
        if coefficient == 0:
            continue
        powers = []
        for factor in sympy.Mul.make_args(rest):
            if factor == 1:
                continue
            base, e = factor.as_base_exp()
            powers.append((base.generator, int(e)))
        powers.sort(key=lambda item: item[0].sort_key)
        terms[tuple(powers)] = _fraction(coefficient)
    return terms


class Expression:
    """
    Exact canonical form of a local function.

    An Expression wraps an expanded sympy polynomial whose symbols are generators:
    Laurent in symbolic constants, polynomial in everything else, with rational
    coefficients. Like monomials are merged by sympy, so two Expressions are equal
    exactly when their expanded forms are. ``terms()`` lays the monomials out in the
    generator order for printing and splitting.

    Expressions are immutable and safe to share between threads.
    """

    __slots__ = ("_expr", "_terms", "_hash", "_sort_key", "_jets", "_arities")

    def __init__(self, terms: Optional[Dict[Monomial, Scalar]] = None):
        parts = []
        for mono, c in (terms or {}).items():
            if not c:
                continue
            factors = []
            for g, e in mono:
                _check_power(g, e)
                factors.append(intern(g).symbol ** e)
            parts.append(sympy.Mul(_rational(c), *factors))
        self._reset(sympy.Add(*parts))

    def _reset(self, expr: sympy.Expr) -> None:
        self._expr = expr
        self._terms: Optional[Dict[Monomial, Fraction]] = None
        self._hash: Optional[int] = None
        self._sort_key: Optional[Tuple[Any, ...]] = None
        self._jets: Optional[FrozenSet[JetVar]] = None
        self._arities: Optional[Dict[str, int]] = None

    # construction

    @staticmethod
    def from_sympy(expr: sympy.Expr, expand: bool = True) -> "Expression":
        """
        Wrap a sympy expression over generator symbols.

        With ``expand`` off the caller guarantees ``expr`` is already expanded.
        """
        expression = Expression.__new__(Expression)
        expression._reset(sympy.expand(expr) if expand else expr)
        return expression

    @staticmethod
    def constant(value: Scalar) -> "Expression":
        return Expression.from_sympy(_rational(value), expand=False)

    @staticmethod
    def from_generator(g: Generator, power: int = 1) -> "Expression":
        _check_power(g, power)
        if power == 0:
            return ONE
        return Expression.from_sympy(intern(g).symbol**power, expand=False)

    @staticmethod
    def indep(name: str) -> "Expression":
        return Expression.from_generator(IndepVar(name))

    @staticmethod
    def symbol(name: str) -> "Expression":
        return Expression.from_generator(SymConst(name))

    @staticmethod
    def jet(i: int, j: int) -> "Expression":
        return Expression.from_generator(JetVar(i, j))

    @staticmethod
    def atom(
        name: str,
        args: Iterable[Any],
        deriv: Optional[Iterable[int]] = None,
    ) -> "Expression":
        arguments = tuple(Expression.coerce(arg) for arg in args)
        return Expression.from_generator(FnAtom(name, arguments, tuple(deriv or ())))

    @staticmethod
    def exp(argument: Any) -> "Expression":
        return Expression.atom("exp", [argument])

    @staticmethod
    def coerce(value: Any) -> "Expression":
        if isinstance(value, Expression):
            return value
        if isinstance(value, Generator):
            return Expression.from_generator(value)
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return Expression.constant(value)
        raise TypeError(f"cannot interpret {value!r} as an Expression")

    @staticmethod
    def sum(expressions: Iterable["Expression"]) -> "Expression":
        parts = [Expression.coerce(e) for e in expressions]
        merge_arities(*(e.arities() for e in parts))
        return Expression.from_sympy(sympy.Add(*(e._expr for e in parts)), expand=False)

    @staticmethod
    def normalize(tree: Any) -> "Expression":
        """
        Bring a raw expression tree into canonical form.

        Trees are Expressions, Generators, integers, Fractions, or tuples
        ``("+", a, b, ...)``, ``("*", a, b, ...)``, ``("-", a)``, ``("-", a, b)`` and
        ``("^", a, n)`` with integer ``n``.

        Raises:
            NormalizationError: On malformed trees or unrepresentable powers.
        """
        if not isinstance(tree, tuple):
            try:
                return Expression.coerce(tree)
            except TypeError as e:
                raise NormalizationError(str(e)) from e
        if not tree:
            raise NormalizationError("empty expression tree")
        op, operands = tree[0], tree[1:]
        if op == "+":
            return Expression.sum(Expression.normalize(o) for o in operands)
        if op == "*":
            result = ONE
            for operand in operands:
                result = result * Expression.normalize(operand)
            return result
        if op == "-" and len(operands) == 1:
            return -Expression.normalize(operands[0])
        if op == "-" and len(operands) == 2:
            return Expression.normalize(operands[0]) - Expression.normalize(operands[1])
        if op == "^" and len(operands) == 2 and isinstance(operands[1], int):
            return Expression.normalize(operands[0]) ** operands[1]
        raise NormalizationError(f"malformed expression tree node: {op!r}")

    def as_sympy(self) -> sympy.Expr:
        return self._expr

    # arithmetic

    def _combine(self, other: "Expression", expr: sympy.Expr, expand: bool) -> "Expression":
        merge_arities(self.arities(), other.arities())
        return Expression.from_sympy(expr, expand=expand)

    def __add__(self, other: Any) -> "Expression":
        try:
            other = Expression.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        return self._combine(other, self._expr + other._expr, expand=False)

    __radd__ = __add__

    def __neg__(self) -> "Expression":
        return Expression.from_sympy(-self._expr)

    def __pos__(self) -> "Expression":
        return self

    def __sub__(self, other: Any) -> "Expression":
        try:
            other = Expression.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            return self
        return self._combine(other, self._expr - other._expr, expand=True)

    def __rsub__(self, other: Any) -> "Expression":
        try:
            return Expression.coerce(other) - self
        except TypeError:
            return NotImplemented

    def __mul__(self, other: Any) -> "Expression":
        try:
            other = Expression.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        return self._combine(other, self._expr * other._expr, expand=True)

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> "Expression":
        if not factor:
            return ZERO
        return Expression.from_sympy(self._expr * _rational(factor))

    def __pow__(self, n: int) -> "Expression":
        if not isinstance(n, int) or isinstance(n, bool):
            raise NormalizationError(f"only integer powers are representable, got {n!r}")
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return ONE
        return Expression.from_sympy(self._expr**n)

    def inverse(self) -> "Expression":
        """
        Multiplicative inverse of a single monomial built from symbolic constants.

        Raises:
            NormalizationError: If the expression is not invertible in the Laurent class.
        """
        if len(self) != 1:
            raise NormalizationError(f"cannot invert {self}: division only by constants")
        for g in self.generators():
            if not g.allows_negative_powers():
                raise NormalizationError(f"cannot invert {self}: {g} is not a constant")
        return Expression.from_sympy(1 / self._expr)

    def __truediv__(self, other: Any) -> "Expression":
        try:
            other = Expression.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Any) -> "Expression":
        try:
            return Expression.coerce(other) / self
        except TypeError:
            return NotImplemented

    # comparison

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if isinstance(other, Expression):
            return self._expr == other._expr
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._expr == _rational(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            value = self.constant_value()
            self._hash = hash(value) if value is not None else hash(self._expr)
        return self._hash

    @property
    def sort_key(self) -> Tuple[Any, ...]:
        if self._sort_key is None:
            self._sort_key = tuple((_mono_key(m), c) for m, c in self.terms())
        return self._sort_key

    # queries

    def is_zero(self) -> bool:
        return self._expr == 0

    def is_constant(self) -> bool:
        return bool(self._expr.is_Rational)

    def constant_value(self) -> Optional[Fraction]:
        if self._expr.is_Rational:
            return _fraction(self._expr)
        return None

    def is_free_of_jets(self) -> bool:
        return not self.jet_vars()

    def __len__(self) -> int:
        return 0 if self.is_zero() else len(sympy.Add.make_args(self._expr))

    def _term_map(self) -> Dict[Monomial, Fraction]:
        if self._terms is None:
            self._terms = _term_map(self._expr)
        return self._terms

    def items(self):
        return self._term_map().items()

    def terms(self) -> List[Tuple[Monomial, Fraction]]:
        """Monomials with their coefficients in canonical order."""
        return sorted(self._term_map().items(), key=lambda item: _mono_key(item[0]))

    def generators(self) -> FrozenSet[Generator]:
        return frozenset(s.generator for s in self._expr.free_symbols)

    def fn_atoms(self) -> FrozenSet[FnAtom]:
        return frozenset(g for g in self.generators() if isinstance(g, FnAtom))

    def arities(self) -> Dict[str, int]:
        """Every function name in the expression, nested ones included, with its arity."""
        if self._arities is None:
            self._arities = merge_arities(*(g.arities for g in self.fn_atoms()))
        return self._arities

    def jet_vars(self) -> FrozenSet[JetVar]:
        """All jet variables, including those inside function-atom arguments."""
        if self._jets is None:
            found = set()
            for g in self.generators():
                if isinstance(g, JetVar):
                    found.add(g)
                elif isinstance(g, FnAtom):
                    for arg in g.args:
                        found.update(arg.jet_vars())
            self._jets = frozenset(found)
        return self._jets

    def mentions(self, target: Generator) -> bool:
        for g in self.generators():
            if g == target:
                return True
            if isinstance(g, FnAtom) and any(arg.mentions(target) for arg in g.args):
                return True
        return False

    def as_scaled_generator(self) -> Optional[Tuple[Fraction, Generator]]:
        """Return (c, g) when the expression is exactly c * g, else None."""
        coefficient, rest = self._expr.as_coeff_Mul()
        if coefficient == 0 or not isinstance(rest, sympy.Symbol):
            return None
        return _fraction(coefficient), rest.generator

    def degree_in(self, g: Generator) -> int:
        return max((e for m in self._term_map() for h, e in m if h == g), default=0)

    # transformations

    def pdiff(self, g: Union[Generator, "Expression"]) -> "Expression":
        """Exact partial derivative with the chain rule through function atoms."""
        from .Derivation import PartialDerivative

        return PartialDerivative.of(_as_generator(g))(self)

    def rewrite(self, rule: Callable[[Generator], Optional["Expression"]]) -> "Expression":
        """
        Replace generators simultaneously and renormalize.

        ``rule`` returns the image of a generator or None to keep it; function-atom
        arguments are rewritten recursively when the atom itself is kept.

        Raises:
            NormalizationError: If a negative power ends up on a non-invertible image.
        """
        mapping: Dict[sympy.Symbol, sympy.Expr] = {}
        arities = [self.arities()]
        for g in self.generators():
            image = rule(g)
            if image is None and isinstance(g, FnAtom):
                args = tuple(arg.rewrite(rule) for arg in g.args)
                if args != g.args:
                    image = Expression.from_generator(g.with_args(args))
            if image is None:
                continue
            image = Expression.coerce(image)
            if isinstance(g, SymConst) and self._lowest_power(g) < 0:
                try:
                    image.inverse()
                except NormalizationError as err:
                    raise NormalizationError(
                        f"substituting {g} -> {image} produces a negative power: {err}"
                    ) from err
            mapping[g.symbol] = image._expr
            arities.append(image.arities())
        if not mapping:
            return self
        merge_arities(*arities)
        return Expression.from_sympy(self._expr.xreplace(mapping))

    def _lowest_power(self, g: Generator) -> int:
        return min((e for m in self._term_map() for h, e in m if h == g), default=0)

    def substitute(self, mapping: Dict[Any, Any]) -> "Expression":
        """Simultaneous substitution of generators by expressions."""
        if not mapping:
            return self
        table = {_as_generator(k): Expression.coerce(v) for k, v in mapping.items()}
        return self.rewrite(table.get)

    def vanish(self, names: Iterable[str]) -> "Expression":
        """Set the named functions, together with all of their derivatives, to zero."""
        names = frozenset(names)
        if not names:
            return self
        return self.rewrite(
            lambda g: ZERO if isinstance(g, FnAtom) and g.name in names else None
        )

    def coefficients_in(self, g: Union[Generator, "Expression"]) -> Dict[int, "Expression"]:
        """
        Coefficients of the powers of a generator the expression is polynomial in.

        Raises:
            SplittingError: If the generator also occurs inside a function-atom argument.
        """
        g = _as_generator(g)
        for h in self.fn_atoms():
            if any(arg.mentions(g) for arg in h.args):
                raise SplittingError(f"{g} occurs inside {h}; not polynomial in {g}")
        if self.is_zero():
            return {}
        collected = sympy.collect(self._expr, g.symbol, evaluate=False)
        grouped: Dict[int, Expression] = {}
        for key, coefficient in collected.items():
            power = 0 if key == 1 else int(key.as_base_exp()[1])
            if power < 0:
                raise SplittingError(f"negative power of {g} in {self}")
            grouped[power] = Expression.from_sympy(coefficient)
        return {p: c for p, c in sorted(grouped.items()) if not c.is_zero()}

    def __str__(self) -> str:
        from .Printer import Printer

        return Printer().render(self)

    def __repr__(self) -> str:
        return f"Expression({self})"


def _as_generator(g: Union[Generator, Expression]) -> Generator:
    if isinstance(g, Generator):
        return intern(g)
    if isinstance(g, Expression):
        scaled = g.as_scaled_generator()
        if scaled is not None and scaled[0] == 1:
            return scaled[1]
    raise TypeError(f"expected a single generator, got {g!r}")


ZERO = Expression()
ONE = Expression.constant(1)
