"""Ring-element expressions such as ``p1^2 + 3*c2`` or ``1/2*(e - c2)^3``.

Grammar (``^`` binds tighter than unary minus, which binds tighter than ``*``)::

    expr  := term (('+' | '-') term)*
    term  := unary ('*' unary)*
    unary := '-' unary | power
    power := atom ('^' INT)?
    atom  := INT ('/' INT)? | IDENT | '(' expr ')'

``^`` does not chain: ``a^2^3`` is rejected. Positions reported in errors
are byte offsets into the UTF-8 encoded input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from isograss.core.errors import (
    ExprSyntaxError,
    UnexpectedEnd,
    UnexpectedToken,
    UnknownCharacter,
    UnknownGeneratorError,
)
from isograss.core.polyring import GeneratorAlphabet, GradedPoly, power

MAX_INTEGER_DIGITS = 4000
MAX_EXPONENT = 10**6
MAX_DEPTH = 100


class TokenKind(str, Enum):
    INT = "integer"
    SLASH = "'/'"
    IDENT = "generator"
    PLUS = "'+'"
    MINUS = "'-'"
    STAR = "'*'"
    CARET = "'^'"
    LPAREN = "'('"
    RPAREN = "')'"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    position: int


_TOKEN = re.compile(r"(?P<INT>[0-9]+)|(?P<IDENT>[pc][0-9]+'?|e'?)|(?P<OP>[/+\-*^()])")
_OPERATORS = {
    "/": TokenKind.SLASH,
    "+": TokenKind.PLUS,
    "-": TokenKind.MINUS,
    "*": TokenKind.STAR,
    "^": TokenKind.CARET,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
}


def tokenize(text: str) -> list[Token]:
    """
    Split an expression into tokens.

    Args:
        text: Expression text

    Returns:
        Tokens with their byte offsets in the UTF-8 encoding of text

    Raises:
        UnknownCharacter: At the first character no token starts with
        ExprSyntaxError: If an integer literal is too long
    """
    tokens = []
    index, offset = 0, 0
    while index < len(text):
        char = text[index]
        if char.isspace():
            index += 1
            offset += len(char.encode("utf-8"))
            continue
        match = _TOKEN.match(text, index)
        if match is None:
            raise UnknownCharacter(char, offset)
        lexeme = match.group(0)
        if match.lastgroup == "INT":
            if len(lexeme) > MAX_INTEGER_DIGITS:
                raise ExprSyntaxError(
                    f"integer literal longer than {MAX_INTEGER_DIGITS} digits", offset
                )
            kind = TokenKind.INT
        elif match.lastgroup == "IDENT":
            kind = TokenKind.IDENT
        else:
            kind = _OPERATORS[lexeme]
        tokens.append(Token(kind, lexeme, offset))
        index = match.end()
        offset += len(lexeme)
    return tokens


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "ExprAst"


@dataclass(frozen=True)
class Add:
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Mul:
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Pow:
    base: "ExprAst"
    exponent: int


ExprAst = Union[Num, Gen, Neg, Add, Mul, Pow]


class _Parser:
    def __init__(self, tokens: Sequence[Token], end: int):
        self.tokens = list(tokens)
        self.index = 0
        self.end = end
        self.depth = 0

    def peek(self) -> Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def take(self, kind: TokenKind, expected: str) -> Token:
        token = self.peek()
        if token is None:
            raise UnexpectedEnd(self.end, expected)
        if token.kind is not kind:
            raise UnexpectedToken(token.text, token.position, expected)
        self.index += 1
        return token

    def accept(self, *kinds: TokenKind) -> Optional[Token]:
        token = self.peek()
        if token is not None and token.kind in kinds:
            self.index += 1
            return token
        return None

    def descend(self, token: Token):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise ExprSyntaxError(f"expression nested deeper than {MAX_DEPTH}", token.position)

    def parse(self) -> ExprAst:
        tree = self.expr()
        token = self.peek()
        if token is not None:
            raise UnexpectedToken(token.text, token.position, "operator or end of input")
        return tree

    def expr(self) -> ExprAst:
        tree = self.term()
        while (token := self.accept(TokenKind.PLUS, TokenKind.MINUS)) is not None:
            right = self.term()
            tree = Add(tree, right if token.kind is TokenKind.PLUS else Neg(right))
        return tree

    def term(self) -> ExprAst:
        tree = self.unary()
        while self.accept(TokenKind.STAR) is not None:
            tree = Mul(tree, self.unary())
        return tree

    def unary(self) -> ExprAst:
        token = self.accept(TokenKind.MINUS)
        if token is None:
            return self.power()
        self.descend(token)
        operand = self.unary()
        self.depth -= 1
        return Neg(operand)

    def power(self) -> ExprAst:
        base = self.atom()
        if self.accept(TokenKind.CARET) is None:
            return base
        token = self.take(TokenKind.INT, "integer exponent")
        exponent = int(token.text)
        if exponent > MAX_EXPONENT:
            raise ExprSyntaxError(f"exponent larger than {MAX_EXPONENT}", token.position)
        extra = self.accept(TokenKind.CARET)
        if extra is not None:
            raise UnexpectedToken(extra.text, extra.position, "no further '^'")
        return Pow(base, exponent)

    def atom(self) -> ExprAst:
        token = self.peek()
        if token is None:
            raise UnexpectedEnd(self.end, "number, generator or '('")
        self.index += 1
        if token.kind is TokenKind.INT:
            if self.accept(TokenKind.SLASH) is None:
                return Num(Fraction(int(token.text)))
            denominator = self.take(TokenKind.INT, "integer denominator")
            if int(denominator.text) == 0:
                raise ExprSyntaxError("zero denominator", denominator.position)
            return Num(Fraction(int(token.text), int(denominator.text)))
        if token.kind is TokenKind.IDENT:
            return Gen(token.text)
        if token.kind is TokenKind.LPAREN:
            self.descend(token)
            inner = self.expr()
            self.take(TokenKind.RPAREN, "')'")
            self.depth -= 1
            return inner
        raise UnexpectedToken(token.text, token.position, "number, generator or '('")


def parse(tokens: Sequence[Token], end: Optional[int] = None) -> ExprAst:
    """Build the syntax tree; ``end`` is the position reported for a premature end."""
    if end is None:
        end = tokens[-1].position + len(tokens[-1].text) if tokens else 0
    return _Parser(tokens, end).parse()


def parse_expression(text: str) -> ExprAst:
    """
    Tokenize and parse an expression.

    Args:
        text: Expression such as ``p1^2 + 3*c2'``

    Returns:
        The syntax tree

    Raises:
        ExprSyntaxError: With the byte offset of the offending token
    """
    return parse(tokenize(text), len(text.encode("utf-8")))


def evaluate(
    ast: ExprAst,
    alphabet: GeneratorAlphabet,
    bindings: Optional[Mapping[str, GradedPoly]] = None,
) -> GradedPoly:
    """
    Exact value of a syntax tree.

    Args:
        ast: Parsed expression
        alphabet: Generators the expression may name
        bindings: Derived classes such as p1 = e^2, looked up before the alphabet

    Returns:
        The polynomial the expression denotes

    Raises:
        UnknownGeneratorError: If a name is neither bound nor a generator
    """
    bindings = bindings or {}
    if isinstance(ast, Num):
        return alphabet.constant(ast.value)
    if isinstance(ast, Gen):
        if ast.name in bindings:
            return bindings[ast.name]
        if ast.name in alphabet:
            return alphabet.generator(ast.name)
        available = list(alphabet.names) + sorted(set(bindings) - set(alphabet.names))
        raise UnknownGeneratorError(ast.name, available)
    if isinstance(ast, Neg):
        return -evaluate(ast.operand, alphabet, bindings)
    if isinstance(ast, Add):
        return evaluate(ast.left, alphabet, bindings) + evaluate(ast.right, alphabet, bindings)
    if isinstance(ast, Mul):
        return evaluate(ast.left, alphabet, bindings) * evaluate(ast.right, alphabet, bindings)
    if isinstance(ast, Pow):
        return power(evaluate(ast.base, alphabet, bindings), ast.exponent)
    raise TypeError(f"not an expression node: {ast!r}")


def evaluate_text(
    text: str,
    alphabet: GeneratorAlphabet,
    bindings: Optional[Mapping[str, GradedPoly]] = None,
) -> GradedPoly:
    """Parse and evaluate in one step; see :func:`evaluate`."""
    return evaluate(parse_expression(text), alphabet, bindings)
