"""Recursive-descent parser for the calculator's polynomial expressions.

Grammar (ASCII, explicit '*', '^' for powers, no implicit multiplication):

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := int | var | '(' expr ')'

Ring expressions use the variables h and c (c standing in for the dual
hyperplane class, which has no keyboard spelling); web polynomials use
x, y and p.  Every printed canonical form re-parses to the same value.
"""

from __future__ import annotations

from dataclasses import dataclass


class ParseError(ValueError):
    """Syntax or vocabulary error, carrying 1-based line/column position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Lit:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


# -- lexer ---------------------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str  # 'int' | 'name' | 'op' | 'end'
    text: str
    line: int
    column: int


def _tokenize(source: str) -> list[_Token]:
    tokens = []
    line, column = 1, 1
    i = 0
    while i < len(source):
        ch = source[i]
        if ch == "\n":
            line += 1
            column = 1
            i += 1
            continue
        if ch.isspace():
            column += 1
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < len(source) and source[i].isdigit():
                i += 1
            text = source[start:i]
            tokens.append(_Token("int", text, line, column))
            column += len(text)
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < len(source) and (source[i].isalnum() or source[i] == "_"):
                i += 1
            text = source[start:i]
            tokens.append(_Token("name", text, line, column))
            column += len(text)
            continue
        if ch in "+-*^()":
            tokens.append(_Token("op", ch, line, column))
            column += 1
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, column)
    tokens.append(_Token("end", "", line, column))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], allowed: frozenset[str]):
        self.tokens = tokens
        self.pos = 0
        self.allowed = allowed

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def fail(self, message: str, token: _Token | None = None):
        token = token or self.peek()
        raise ParseError(message, token.line, token.column)

    def expr(self):
        if self.peek().kind == "op" and self.peek().text == "-":
            self.advance()
            node = Neg(self.term())
        else:
            node = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.advance().text
            right = self.term()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def term(self):
        node = self.factor()
        while self.peek().kind == "op" and self.peek().text == "*":
            self.advance()
            node = Mul(node, self.factor())
        return node

    def factor(self):
        node = self.base()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.advance()
            token = self.peek()
            if token.kind != "int":
                if token.kind == "op" and token.text == "-":
                    self.fail("exponent must be a nonnegative integer", token)
                self.fail("expected an integer exponent after '^'", token)
            self.advance()
            node = Pow(node, int(token.text))
        return node

    def base(self):
        token = self.peek()
        if token.kind == "int":
            self.advance()
            return Lit(int(token.text))
        if token.kind == "name":
            self.advance()
            if token.text not in self.allowed:
                expected = ", ".join(sorted(self.allowed))
                self.fail(f"unknown variable {token.text!r} (expected one of: {expected})", token)
            return Var(token.text)
        if token.kind == "op" and token.text == "(":
            self.advance()
            node = self.expr()
            closing = self.peek()
            if closing.kind != "op" or closing.text != ")":
                self.fail("expected ')'", closing)
            self.advance()
            return node
        self.fail(f"expected a number, variable or '(', found {token.text or 'end of input'!r}")


def parse_expr(source: str, allowed: frozenset[str] | set[str]):
    """Parse to an AST, restricted to the given variable vocabulary."""
    parser = _Parser(_tokenize(source), frozenset(allowed))
    node = parser.expr()
    trailing = parser.peek()
    if trailing.kind != "end":
        parser.fail(f"unexpected {trailing.text!r} after expression", trailing)
    return node


def evaluate(node, env: dict, const):
    """Fold an AST in any commutative ring given variable values and an
    integer embedding."""
    if isinstance(node, Lit):
        return const(node.value)
    if isinstance(node, Var):
        return env[node.name]
    if isinstance(node, Neg):
        return -evaluate(node.operand, env, const)
    if isinstance(node, Add):
        return evaluate(node.left, env, const) + evaluate(node.right, env, const)
    if isinstance(node, Sub):
        return evaluate(node.left, env, const) - evaluate(node.right, env, const)
    if isinstance(node, Mul):
        return evaluate(node.left, env, const) * evaluate(node.right, env, const)
    if isinstance(node, Pow):
        return evaluate(node.base, env, const) ** node.exponent
    raise TypeError(f"not an expression node: {node!r}")


def parse_ring_expr(source: str, n: int):
    """Parse and evaluate a ring expression in h and c."""
    from .ring import RingElement, dual_hyperplane, hyperplane

    node = parse_expr(source, {"h", "c"})
    env = {"h": hyperplane(n), "c": dual_hyperplane(n)}
    return evaluate(node, env, lambda v: RingElement(n, {(0, 0): v}))


def parse_poly_expr(source: str, allowed: set[str]):
    """Parse and evaluate a polynomial expression over the given variables."""
    from .multipoly import MultiPoly

    node = parse_expr(source, allowed)
    env = {name: MultiPoly.variable(name) for name in allowed}
    return evaluate(node, env, MultiPoly.const)
