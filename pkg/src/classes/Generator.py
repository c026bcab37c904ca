import threading
import weakref
from typing import Any, Dict, Mapping, Optional, Tuple

import sympy

from .Errors import ArityError, NormalizationError

INDEPENDENT_VARIABLES: Tuple[str, ...] = ("x", "y", "t")
EXP = "exp"
RESERVED = frozenset({*INDEPENDENT_VARIABLES, "u", "d"})


def merge_arities(*maps: Mapping[str, int]) -> Dict[str, int]:
    """
    Union of name -> arity maps.

    Raises:
        ArityError: If one function name shows up with two different arities.
    """
    merged: Dict[str, int] = {}
    for arities in maps:
        for name, arity in arities.items():
            known = merged.setdefault(name, arity)
            if known != arity:
                raise ArityError(f"function {name} is used with arity {known} and with arity {arity}")
    return merged


class GeneratorSymbol(sympy.Symbol):
    """
    The sympy symbol a Generator stands behind inside sympy expressions.

    The symbol is named by the generator's DSL text, so structurally equal generators
    always meet as equal sympy atoms.
    """

    __slots__ = ("generator",)

    def __new__(cls, generator: "Generator"):
        symbol = sympy.Symbol.__xnew__(cls, str(generator))
        symbol.generator = generator
        return symbol

    def __getnewargs_ex__(self):
        return (self.generator,), {}


class Generator:
    """
    A polynomial generator of the expression ring.

    Generators are compared structurally through a precomputed ``sort_key``; the key
    also fixes the total order used to lay out monomials:
    IndepVar < SymConst < JetVar (graded by i+j, then lex) < FnAtom
    (by name, then derivative index, then arguments).
    """

    __slots__ = ("sort_key", "_hash", "_symbol", "__weakref__")

    def __init__(self, sort_key: Tuple[Any, ...]):
        self.sort_key = sort_key
        self._hash = hash(sort_key)
        self._symbol: Optional[GeneratorSymbol] = None

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return (
            isinstance(other, Generator)
            and self._hash == other._hash
            and self.sort_key == other.sort_key
        )

    def __lt__(self, other: "Generator") -> bool:
        return self.sort_key < other.sort_key

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"

    @property
    def symbol(self) -> GeneratorSymbol:
        if self._symbol is None:
            self._symbol = GeneratorSymbol(self)
        return self._symbol

    def allows_negative_powers(self) -> bool:
        return False


class IndepVar(Generator):
    __slots__ = ("name",)

    def __init__(self, name: str):
        if name not in INDEPENDENT_VARIABLES:
            raise NormalizationError(f"unknown independent variable: {name}")
        self.name = name
        super().__init__((0, INDEPENDENT_VARIABLES.index(name)))

    def __str__(self) -> str:
        return self.name


class SymConst(Generator):
    """Symbolic constant; the only generator allowed to carry negative exponents."""

    __slots__ = ("name",)

    def __init__(self, name: str):
        if not name.isidentifier() or name in RESERVED or name == EXP:
            raise NormalizationError(f"{name!r} cannot name a symbolic constant")
        self.name = name
        super().__init__((1, name))

    def __str__(self) -> str:
        return self.name

    def allows_negative_powers(self) -> bool:
        return True


class JetVar(Generator):
    """The jet coordinate u[i,j] standing for the (i,j)-th x/y derivative of u."""

    __slots__ = ("i", "j")

    def __init__(self, i: int, j: int):
        if i < 0 or j < 0:
            raise NormalizationError(f"jet orders must be nonnegative, got u[{i},{j}]")
        self.i = i
        self.j = j
        super().__init__((2, i + j, i, j))

    def __str__(self) -> str:
        return f"u[{self.i},{self.j}]"

    def shifted(self, di: int, dj: int) -> "JetVar":
        return intern(JetVar(self.i + di, self.j + dj))


class FnAtom(Generator):
    """
    Opaque smooth function applied to canonical Expressions.

    ``deriv`` is the partial-derivative multi-index, one entry per argument.
    The builtin ``exp`` has arity one and is its own derivative, so its index is
    always ``(0,)``. ``arities`` records every function name used by the atom and its
    arguments; a name nested with two different arities is refused.
    """

    __slots__ = ("name", "deriv", "args", "arities")

    def __init__(self, name: str, args: Tuple[Any, ...], deriv: Tuple[int, ...] = ()):
        args = tuple(args)
        deriv = tuple(deriv) if deriv else (0,) * len(args)
        if not args:
            raise ArityError(f"function {name} needs at least one argument")
        if len(deriv) != len(args):
            raise ArityError(
                f"derivative index {deriv} does not match arity {len(args)} of {name}"
            )
        if any(d < 0 for d in deriv):
            raise ArityError(f"negative derivative index {deriv} for {name}")
        if name == EXP:
            if len(args) != 1:
                raise ArityError("exp takes exactly one argument")
            deriv = (0,)
        self.name = name
        self.deriv = deriv
        self.args = args
        self.arities = merge_arities(*(arg.arities() for arg in args), {name: len(args)})
        super().__init__((3, name, deriv, tuple(arg.sort_key for arg in args)))

    def __str__(self) -> str:
        arguments = ",".join(str(arg) for arg in self.args)
        if any(self.deriv):
            index = ",".join(str(d) for d in self.deriv)
            return f"d({self.name};{index})({arguments})"
        return f"{self.name}({arguments})"

    @property
    def arity(self) -> int:
        return len(self.args)

    @property
    def is_exp(self) -> bool:
        return self.name == EXP

    def bump(self, k: int) -> "FnAtom":
        """Differentiate once more with respect to argument ``k``."""
        if self.is_exp:
            return self
        deriv = list(self.deriv)
        deriv[k] += 1
        return intern(FnAtom(self.name, self.args, tuple(deriv)))

    def with_args(self, args: Tuple[Any, ...]) -> "FnAtom":
        return intern(FnAtom(self.name, tuple(args), self.deriv))

    def base(self) -> "FnAtom":
        """The underived atom with the same name and arguments."""
        return intern(FnAtom(self.name, self.args))


# entries go away with the last expression holding the generator
_TABLE: "weakref.WeakValueDictionary[Tuple[Any, ...], Generator]" = weakref.WeakValueDictionary()
_TABLE_LOCK = threading.Lock()


def intern(generator: Generator) -> Generator:
    """Return the shared instance structurally equal to ``generator``."""
    with _TABLE_LOCK:
        return _TABLE.setdefault(generator.sort_key, generator)
