"""A tiny expression language over the tower field.

Grammar, with the usual precedence (power binds tightest, then unary
minus as part of the atom rule, then * and /, then + and -):

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := atom ("^" int)?
    atom   := int ("/" int)? | name | "(" expr ")" | "-" atom

An integer followed by "/" and another integer is a single rational
literal, so 1/2 is the number one half while 1/u is a division. Names
come from the fixed vocabulary of field constants.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .tower import CONSTANT_NAMES, FieldElement, constant

__all__ = [
    "ExpressionError",
    "Literal",
    "Name",
    "Unary",
    "BinOp",
    "Pow",
    "parse_expression",
    "evaluate_expression",
    "format_expression",
]


class ExpressionError(ValueError):
    """Parse failure, carrying the byte offset of the problem."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class Literal:
    value: Fraction


@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class Unary:
    operand: Node


@dataclass(frozen=True)
class BinOp:
    op: str
    left: Node
    right: Node


@dataclass(frozen=True)
class Pow:
    base: Node
    exponent: int


Node = Union[Literal, Name, Unary, BinOp, Pow]

_TOKEN = re.compile(
    r"(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()])"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ExpressionError(
                f"unexpected character {text[pos]!r}", pos,
            )
        kind = match.lastgroup
        tokens.append((kind, match.group(), pos))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self, ahead: int = 0) -> tuple[str, str, int]:
        return self.tokens[min(self.index + ahead, len(self.tokens) - 1)]

    def advance(self) -> tuple[str, str, int]:
        token = self.tokens[self.index]
        if token[0] != "end":
            self.index += 1
        return token

    def expect_op(self, op: str) -> None:
        kind, text, pos = self.peek()
        if kind != "op" or text != op:
            raise ExpressionError(f"expected {op!r}", pos)
        self.advance()

    def parse(self) -> Node:
        node = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ExpressionError(f"unexpected token {text!r}", pos)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.advance()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.advance()[1]
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> Node:
        node = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.advance()
            node = Pow(node, self.exponent())
        return node

    def exponent(self) -> int:
        sign = 1
        if self.peek()[0] == "op" and self.peek()[1] == "-":
            self.advance()
            sign = -1
        kind, text, pos = self.peek()
        if kind != "int":
            raise ExpressionError("expected an integer exponent", pos)
        self.advance()
        return sign * int(text)

    def atom(self) -> Node:
        kind, text, pos = self.peek()
        if kind == "int":
            self.advance()
            # a rational literal only when an integer follows the slash
            if (self.peek()[0], self.peek()[1]) == ("op", "/") and \
                    self.peek(1)[0] == "int":
                self.advance()
                denom = int(self.advance()[1])
                if denom == 0:
                    raise ExpressionError("zero denominator", pos)
                return Literal(Fraction(int(text), denom))
            return Literal(Fraction(int(text)))
        if kind == "name":
            self.advance()
            if text not in CONSTANT_NAMES:
                known = ", ".join(CONSTANT_NAMES)
                raise ExpressionError(
                    f"unknown name {text!r} (known names: {known})", pos,
                )
            return Name(text)
        if kind == "op" and text == "(":
            self.advance()
            node = self.expr()
            self.expect_op(")")
            return node
        if kind == "op" and text == "-":
            self.advance()
            return Unary(self.atom())
        raise ExpressionError(
            "expected a number, name, or parenthesized expression", pos,
        )


def parse_expression(text: str) -> Node:
    """Parse the expression language into an AST."""
    return _Parser(text).parse()


def evaluate_expression(expression: str | Node) -> FieldElement:
    """Evaluate source text or an AST to an exact field element."""
    node = parse_expression(expression) if isinstance(expression, str) else expression
    return _evaluate(node)


def _evaluate(node: Node) -> FieldElement:
    if isinstance(node, Literal):
        return FieldElement.from_rational(node.value)
    if isinstance(node, Name):
        return constant(node.name)
    if isinstance(node, Unary):
        return -_evaluate(node.operand)
    if isinstance(node, Pow):
        return _evaluate(node.base) ** node.exponent
    if isinstance(node, BinOp):
        left = _evaluate(node.left)
        right = _evaluate(node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        return left / right
    raise TypeError(f"not an expression node: {node!r}")


_PRECEDENCE = {"+": 1, "-": 1, "*": 2, "/": 2}

# a rendering that ends in a bare integer atom would swallow a
# following "/ int" into a rational literal; integers after "^" or the
# inner slash of a literal are already spoken for and stay safe
_RISKY_INT_TAIL = re.compile(r"(?:^|[\s(-])\d+$")


def _merges_across_slash(left_text: str, right_text: str) -> bool:
    return bool(_RISKY_INT_TAIL.search(left_text)) and right_text[:1].isdigit()


def _level(node: Node) -> int:
    if isinstance(node, BinOp):
        return _PRECEDENCE[node.op]
    if isinstance(node, (Unary, Pow)):
        return 3
    return 4


def format_expression(node: Node) -> str:
    """Render an AST back to source that reparses at the same shape."""
    if isinstance(node, Literal):
        return str(node.value)
    if isinstance(node, Name):
        return node.name
    if isinstance(node, Unary):
        inner = format_expression(node.operand)
        if not isinstance(node.operand, (Literal, Name, Unary)):
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(node, Pow):
        base = format_expression(node.base)
        if not isinstance(node.base, (Literal, Name)):
            base = f"({base})"
        return f"{base}^{node.exponent}"
    if isinstance(node, BinOp):
        me = _PRECEDENCE[node.op]
        left = format_expression(node.left)
        if _level(node.left) < me:
            left = f"({left})"
        right = format_expression(node.right)
        # the grammar associates left, so a same-level right child needs
        # parentheses to come back in the same shape
        if _level(node.right) <= me or (
            node.op == "/" and _merges_across_slash(left, right)
        ):
            right = f"({right})"
        return f"{left} {node.op} {right}"
    raise TypeError(f"not an expression node: {node!r}")
