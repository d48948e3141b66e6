# sympow/utils/parser.py
"""
Text grammar for rings and polynomials.

Ring grammar::

    FIELD '[' ident (',' ident)* ']'        FIELD := 'QQ' | 'Fp(' prime ')'

Polynomial grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'] factor)*
    factor := atom ['^' integer]
    atom   := integer ['/' integer] | identifier | '(' expr ')'

Juxtaposition multiplies (``2xz``, ``x^2y``, ``(x+1)(x-1)``). An identifier
that is not a declared variable is split into declared variable names,
longest match first, so ``yzw`` reads as ``y*z*w`` in ``QQ[x,y,z,w]``.
"""

import re
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from sympy import isprime

from ..exceptions import ParseError, RingError

MAX_EXPONENT = 4096

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^/()\[\],])"
)


class Token(NamedTuple):
    kind: str  # 'num', 'ident', 'op', 'end'
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    """
    Split text into tokens.

    Raises:
        ParseError: On a character outside the grammar
    """
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", position=pos)
        kind = match.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, match.group(), pos))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class RingText(NamedTuple):
    field: str  # 'QQ' or 'Fp'
    modulus: Optional[int]
    variables: Tuple[str, ...]


def parse_ring_text(text: str) -> RingText:
    """
    Parse a ring descriptor.

    Args:
        text: e.g. ``"QQ[x,y,z,w]"`` or ``"Fp(32003)[x,y]"``

    Returns:
        RingText with field tag, modulus and variable names

    Raises:
        ParseError: Syntax error (with position)
        RingError: Duplicate variable or non-prime modulus

    Examples:
        >>> parse_ring_text("Fp(7)[a,b]")
        RingText(field='Fp', modulus=7, variables=('a', 'b'))
    """
    tokens = tokenize(text)
    cursor = _Cursor(tokens)

    head = cursor.expect("ident", "field name")
    modulus: Optional[int] = None
    if head.text == "QQ":
        field = "QQ"
    elif head.text == "Fp":
        field = "Fp"
        cursor.expect_op("(")
        number = cursor.expect("num", "modulus")
        cursor.expect_op(")")
        modulus = int(number.text)
        if modulus <= 2 or not isprime(modulus):
            raise RingError(f"modulus {modulus} is not a prime > 2")
    else:
        raise ParseError(f"unknown field {head.text!r}, expected QQ or Fp(p)", position=head.position)

    cursor.expect_op("[")
    names: List[str] = []
    while True:
        name = cursor.expect("ident", "variable name")
        if name.text in names:
            raise RingError(f"duplicate variable {name.text!r}")
        names.append(name.text)
        if cursor.peek_op(","):
            cursor.advance()
            continue
        cursor.expect_op("]")
        break
    cursor.expect("end", "end of input")
    return RingText(field, modulus, tuple(names))


class _Cursor:
    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        if token.kind != "end":
            self.index += 1
        return token

    def peek_op(self, op: str) -> bool:
        token = self.current
        return token.kind == "op" and token.text == op

    def expect(self, kind: str, what: str) -> Token:
        token = self.current
        if token.kind != kind:
            found = token.text or "end of input"
            raise ParseError(f"expected {what}, found {found!r}", position=token.position)
        return self.advance()

    def expect_op(self, op: str) -> Token:
        if not self.peek_op(op):
            token = self.current
            found = token.text or "end of input"
            raise ParseError(f"expected {op!r}, found {found!r}", position=token.position)
        return self.advance()


def split_identifier(ident: str, names: Sequence[str]) -> Optional[List[int]]:
    """Split ``ident`` into variable indices, longest names first; None if impossible."""
    index = {name: i for i, name in enumerate(names)}
    by_length = sorted(names, key=len, reverse=True)
    memo: Dict[int, Optional[List[int]]] = {}

    def solve(start: int) -> Optional[List[int]]:
        if start == len(ident):
            return []
        if start in memo:
            return memo[start]
        memo[start] = None
        for name in by_length:
            if ident.startswith(name, start):
                rest = solve(start + len(name))
                if rest is not None:
                    memo[start] = [index[name]] + rest
                    break
        return memo[start]

    return solve(0)


class PolyParser:
    """
    Recursive-descent polynomial parser over a sympy sparse ring.

    The caller passes the sympy ``PolyRing`` to build into; the parser only
    uses its ring arithmetic, so every coefficient stays exact.
    """

    def __init__(self, sympy_ring, names: Sequence[str], modulus: Optional[int] = None):
        self.ring = sympy_ring
        self.names = tuple(names)
        self.modulus = modulus
        self._index = {name: i for i, name in enumerate(self.names)}

    def parse(self, text: str):
        self.cursor = _Cursor(tokenize(text))
        if self.cursor.current.kind == "end":
            raise ParseError("empty polynomial", position=0)
        value = self._expr()
        self.cursor.expect("end", "end of polynomial")
        return value

    def _expr(self):
        sign = 1
        if self.cursor.peek_op("+") or self.cursor.peek_op("-"):
            sign = -1 if self.cursor.advance().text == "-" else 1
        value = self._term()
        if sign < 0:
            value = -value
        while self.cursor.peek_op("+") or self.cursor.peek_op("-"):
            op = self.cursor.advance().text
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self):
        value = self._factor()
        while True:
            token = self.cursor.current
            if self.cursor.peek_op("*"):
                self.cursor.advance()
                value = value * self._factor()
            elif token.kind == "ident" or self.cursor.peek_op("("):
                value = value * self._factor()
            else:
                return value

    def _factor(self):
        # xy^2 is x*y^2: the exponent binds to the last variable of a split identifier
        prefix, base = self._atom()
        if self.cursor.peek_op("^"):
            caret = self.cursor.advance()
            token = self.cursor.current
            if token.kind != "num":
                raise ParseError("malformed exponent", position=token.position if token.kind != "end" else caret.position)
            self.cursor.advance()
            exponent = int(token.text)
            if exponent > MAX_EXPONENT:
                raise ParseError(f"malformed exponent {exponent} (limit {MAX_EXPONENT})", position=token.position)
            base = base ** exponent
        return prefix * base

    def _atom(self):
        token = self.cursor.current
        if token.kind == "num":
            self.cursor.advance()
            numerator, denominator = int(token.text), 1
            if self.cursor.peek_op("/"):
                self.cursor.advance()
                denominator = int(self.cursor.expect("num", "denominator").text)
                if denominator == 0:
                    raise ParseError("division by zero", position=token.position)
            return self.ring.one, self._constant(numerator, denominator, token.position)
        if token.kind == "ident":
            self.cursor.advance()
            return self._variable(token)
        if self.cursor.peek_op("("):
            self.cursor.advance()
            value = self._expr()
            self.cursor.expect_op(")")
            return self.ring.one, value
        found = token.text or "end of input"
        raise ParseError(f"unexpected {found!r}", position=token.position)

    def _constant(self, numerator: int, denominator: int, position: int):
        if self.modulus is not None and denominator % self.modulus == 0:
            raise ParseError(
                f"coefficient {numerator}/{denominator} is not in Fp({self.modulus})",
                position=position,
            )
        domain = self.ring.domain
        value = domain.quo(domain.convert(numerator), domain.convert(denominator))
        return self.ring.ground_new(value)

    def _variable(self, token: Token):
        if token.text in self._index:
            return self.ring.one, self.ring.gens[self._index[token.text]]
        parts = split_identifier(token.text, self.names)
        if parts is None:
            raise ParseError(f"unknown variable {token.text!r}", position=token.position)
        prefix = self.ring.one
        for i in parts[:-1]:
            prefix = prefix * self.ring.gens[i]
        return prefix, self.ring.gens[parts[-1]]


def split_top_level(text: str, separator: str = ",") -> List[Tuple[int, str]]:
    """
    Split on ``separator`` outside parentheses.

    Returns:
        (offset, piece) pairs; offsets index into ``text``, pieces are stripped
    """
    pieces: List[Tuple[int, str]] = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == separator and depth == 0:
            pieces.append((start, text[start:i]))
            start = i + 1
    pieces.append((start, text[start:]))

    result = []
    for offset, piece in pieces:
        stripped = piece.strip()
        if not stripped:
            raise ParseError("empty list entry", position=offset)
        result.append((offset + (len(piece) - len(piece.lstrip())), stripped))
    return result


__all__ = ["tokenize", "parse_ring_text", "RingText", "PolyParser", "split_identifier", "split_top_level"]
