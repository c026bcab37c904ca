import re
from typing import Dict, Iterable, Optional

from .Errors import ArityError
from .Generator import EXP, RESERVED

_DECLARATION = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*/\s*(\d+)\s*$")


class FunctionTable:
    """
    Declared opaque functions and their arities.

    The builtin ``exp`` is always present with arity one. A name keeps the arity it
    was first declared with.
    """

    def __init__(self, declarations: Optional[Dict[str, int]] = None):
        self._arities: Dict[str, int] = {EXP: 1}
        for name, arity in (declarations or {}).items():
            self.declare(name, arity)

    def declare(self, name: str, arity: int) -> None:
        """
        Declare a function name.

        Raises:
            ArityError: If the name is reserved, the arity is not positive, or the
                name was already declared with a different arity.
        """
        if name in RESERVED:
            raise ArityError(f"{name} is reserved and cannot name a function")
        if arity < 1:
            raise ArityError(f"function {name} needs a positive arity, got {arity}")
        known = self._arities.get(name)
        if known is not None and known != arity:
            raise ArityError(f"function {name} already declared with arity {known}, not {arity}")
        self._arities[name] = arity

    def declare_all(self, specs: Iterable[str]) -> None:
        for spec in specs:
            name, arity = FunctionTable.parse_declaration(spec)
            self.declare(name, arity)

    def arity(self, name: str) -> Optional[int]:
        return self._arities.get(name)

    def __contains__(self, name: str) -> bool:
        return name in self._arities

    def copy(self) -> "FunctionTable":
        table = FunctionTable()
        table._arities = dict(self._arities)
        return table

    @staticmethod
    def parse_declaration(spec: str):
        """Split a ``NAME/ARITY`` declaration such as ``f/2``."""
        match = _DECLARATION.match(spec)
        if not match:
            raise ArityError(f"malformed function declaration {spec!r}, expected NAME/ARITY")
        return match.group(1), int(match.group(2))
