import re
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from .Errors import ArityError, EquationSpecError, NormalizationError, ParseError
from .EvolutionEquation import EvolutionEquation
from .Expression import Expression
from .FunctionTable import FunctionTable
from .Generator import EXP, INDEPENDENT_VARIABLES

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()\[\],;=]))"
)

# operator -> (precedence, left-associative); higher binds tighter
BINARY: Dict[str, Tuple[int, bool]] = {
    "+": (1, True),
    "-": (1, True),
    "*": (2, True),
    "/": (2, True),
}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    start: int
    end: int


def tokenize(source: str) -> List[Token]:
    """
    Split DSL source into tokens carrying their character spans.

    Raises:
        ParseError: On a character that starts no token.
    """
    tokens: List[Token] = []
    position = 0
    while position < len(source):
        if source[position:].strip() == "":
            break
        match = _TOKEN.match(source, position)
        if not match or match.end() == position:
            start = position + (len(source[position:]) - len(source[position:].lstrip()))
            raise ParseError(f"unexpected character {source[start]!r}", source, (start, start + 1))
        kind = match.lastgroup
        text = match.group(kind)
        tokens.append(Token(kind, text, match.start(kind), match.end(kind)))
        position = match.end()
    tokens.append(Token("end", "", len(source), len(source)))
    return tokens


class Parser:
    """
    Precedence-climbing parser for the expression DSL.

    Grammar, loosest first: ``+ -``, then ``* /``, then unary minus, then ``^`` with an
    integer exponent. Atoms are rationals, ``x y t``, ``u`` or ``u[i,j]``, symbolic
    constants, ``name(args)`` for declared functions and ``d(name;i,...)(args)`` for
    their partial derivatives. Division is only by constants.
    """

    def __init__(self, functions: Optional[FunctionTable] = None):
        self.functions = functions if functions is not None else FunctionTable()
        self._source = ""
        self._tokens: List[Token] = []
        self._index = 0

    # entry points

    def parse(self, source: str) -> Expression:
        self._start(source)
        expression = self._expression(0)
        self._expect_end()
        return expression

    def parse_equation(self, source: str) -> EvolutionEquation:
        """
        Parse ``gir(a=<expr>, f=<name|expr>)`` or ``rhs=<expr>``.

        A bare function name for f declares an opaque f(u[0,0],u[1,0]).

        Raises:
            EquationSpecError: On a spec of neither shape or with missing fields.
            ParseError: On malformed embedded expressions.
        """
        self._start(source)
        head = self._peek()
        if head.kind != "name" or head.text not in ("gir", "rhs"):
            raise EquationSpecError(f"equation spec must start with gir(...) or rhs=, got {source!r}")
        self._advance()
        if head.text == "rhs":
            self._expect("=")
            rhs = self._expression(0)
            self._expect_end()
            return EvolutionEquation(rhs, label=f"rhs={rhs}")

        self._expect("(")
        fields: Dict[str, Any] = {}
        while True:
            key = self._expect_kind("name")
            if key.text not in ("a", "f"):
                raise EquationSpecError(f"unknown field {key.text!r} in gir(...); expected a and f")
            if key.text in fields:
                raise EquationSpecError(f"field {key.text!r} given twice")
            self._expect("=")
            if key.text == "f" and self._is_bare_function_name():
                name = self._advance()
                try:
                    self.functions.declare(name.text, 2)
                except ArityError as e:
                    raise ParseError(str(e), self._source, (name.start, name.end)) from e
                fields["f"] = name.text
            else:
                fields[key.text] = self._expression(0)
            if self._peek().text == ",":
                self._advance()
                continue
            break
        self._expect(")")
        self._expect_end()
        missing = [k for k in ("a", "f") if k not in fields]
        if missing:
            raise EquationSpecError(f"gir(...) is missing {', '.join(missing)}")
        try:
            return EvolutionEquation.make_gir(fields["a"], fields["f"])
        except ArityError as e:
            raise EquationSpecError(str(e)) from e

    # token plumbing

    def _start(self, source: str) -> None:
        self._source = source
        self._tokens = tokenize(source)
        self._index = 0

    def _peek(self, offset: int = 0) -> Token:
        return self._tokens[min(self._index + offset, len(self._tokens) - 1)]

    def _advance(self) -> Token:
        token = self._peek()
        self._index += 1
        return token

    def _error(self, message: str, token: Token) -> ParseError:
        return ParseError(message, self._source, (token.start, max(token.end, token.start + 1)))

    def _expect(self, text: str) -> Token:
        token = self._peek()
        if token.text != text or token.kind == "end":
            found = token.text or "end of input"
            raise self._error(f"expected {text!r}, found {found!r}", token)
        return self._advance()

    def _expect_kind(self, kind: str) -> Token:
        token = self._peek()
        if token.kind != kind:
            found = token.text or "end of input"
            raise self._error(f"expected {kind}, found {found!r}", token)
        return self._advance()

    def _expect_end(self) -> None:
        token = self._peek()
        if token.kind != "end":
            raise self._error(f"unexpected {token.text!r}", token)

    def _is_bare_function_name(self) -> bool:
        token, after = self._peek(), self._peek(1)
        return (
            token.kind == "name"
            and token.text not in INDEPENDENT_VARIABLES
            and token.text not in ("u", "d", EXP)
            and after.text in (",", ")")
        )

    # grammar

    def _expression(self, min_precedence: int) -> Expression:
        left = self._unary()
        while True:
            token = self._peek()
            if token.kind != "op" or token.text not in BINARY:
                return left
            precedence, left_assoc = BINARY[token.text]
            if precedence < min_precedence:
                return left
            self._advance()
            right_start = self._peek()
            right = self._expression(precedence + 1 if left_assoc else precedence)
            left = self._combine(token, left, right, right_start)

    def _combine(self, op: Token, left: Expression, right: Expression, right_start: Token) -> Expression:
        if op.text == "+":
            return left + right
        if op.text == "-":
            return left - right
        if op.text == "*":
            return left * right
        try:
            return left / right
        except NormalizationError as e:
            span_end = self._tokens[self._index - 1].end
            raise ParseError(
                f"division only by nonzero constants: {e}",
                self._source,
                (right_start.start, span_end),
            ) from e

    def _unary(self) -> Expression:
        token = self._peek()
        if token.text == "-" and token.kind == "op":
            self._advance()
            return -self._unary()
        if token.text == "+" and token.kind == "op":
            self._advance()
            return self._unary()
        return self._power()

    def _power(self) -> Expression:
        base_token = self._peek()
        base = self._primary()
        if self._peek().text != "^":
            return base
        self._advance()
        sign = 1
        if self._peek().text in ("-", "+") and self._peek().kind == "op":
            sign = -1 if self._advance().text == "-" else 1
        exponent = self._expect_kind("num")
        try:
            return base ** (sign * int(exponent.text))
        except NormalizationError as e:
            raise ParseError(str(e), self._source, (base_token.start, exponent.end)) from e

    def _primary(self) -> Expression:
        token = self._peek()
        if token.kind == "num":
            self._advance()
            return Expression.constant(int(token.text))
        if token.text == "(":
            self._advance()
            inner = self._expression(0)
            self._expect(")")
            return inner
        if token.kind != "name":
            found = token.text or "end of input"
            raise self._error(f"expected an operand, found {found!r}", token)
        self._advance()
        if token.text in INDEPENDENT_VARIABLES:
            return Expression.indep(token.text)
        if token.text == "u":
            return self._jet()
        if token.text == "d" and self._peek().text == "(":
            return self._derivative(token)
        if self._peek().text == "(":
            return self._application(token, self._arity_of(token), ())
        if token.text in self.functions:
            raise self._error(f"function {token.text} needs arguments", token)
        if token.text == "d":
            raise self._error("d is reserved for derivative markers d(name;i,...)(args)", token)
        return Expression.symbol(token.text)

    def _jet(self) -> Expression:
        if self._peek().text != "[":
            return Expression.jet(0, 0)
        self._advance()
        i = int(self._expect_kind("num").text)
        self._expect(",")
        j = int(self._expect_kind("num").text)
        self._expect("]")
        return Expression.jet(i, j)

    def _arity_of(self, token: Token) -> int:
        arity = self.functions.arity(token.text)
        if arity is None:
            raise self._error(
                f"unknown function {token.text}; declare it with --fn {token.text}/ARITY", token
            )
        return arity

    def _derivative(self, marker: Token) -> Expression:
        self._expect("(")
        name = self._expect_kind("name")
        arity = self._arity_of(name)
        self._expect(";")
        index = [int(self._expect_kind("num").text)]
        while self._peek().text == ",":
            self._advance()
            index.append(int(self._expect_kind("num").text))
        close = self._expect(")")
        if len(index) != arity:
            raise ParseError(
                f"derivative index of {name.text} has {len(index)} entries, arity is {arity}",
                self._source,
                (marker.start, close.end),
            )
        if self._peek().text != "(":
            raise self._error(f"derivative of {name.text} needs arguments", self._peek())
        return self._application(name, arity, tuple(index))

    def _application(self, name: Token, arity: int, index: Tuple[int, ...]) -> Expression:
        self._expect("(")
        args = [self._expression(0)]
        while self._peek().text == ",":
            self._advance()
            args.append(self._expression(0))
        close = self._expect(")")
        if len(args) != arity:
            raise ParseError(
                f"{name.text} takes {arity} argument(s), got {len(args)}",
                self._source,
                (name.start, close.end),
            )
        return Expression.atom(name.text, args, index or None)


def parse(source: str, functions: Optional[FunctionTable] = None) -> Expression:
    return Parser(functions).parse(source)

