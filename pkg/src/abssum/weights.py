"""Integer weight expressions such as ``abs(k1^2 - k2^2)``.

Grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := uint | ident | '(' expr ')' | 'abs' '(' expr ')' | '-' factor

Identifiers are ``k1`` .. ``kd``; ``i``, ``j`` and ``k`` are aliases for
``k1``, ``k2`` and ``k3``. A leading minus applies to a whole factor, so
``-x^2`` means ``-(x^2)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence, Union


class WeightSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


@dataclass(frozen=True)
class Num:
    value: int

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("integer literals are non-negative; use Neg")


@dataclass(frozen=True)
class Var:
    index: int  # 1-based


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class Add:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Sub:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Mul:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Abs:
    arg: "Node"


Node = Union[Num, Var, Neg, Add, Sub, Mul, Pow, Abs]


@dataclass(frozen=True)
class WeightExpr:
    root: Node
    arity: int

    def __call__(self, *point: int) -> int:
        return eval_weight(self, point)

    def __str__(self) -> str:
        return format_node(self.root)


_ALIASES = {"i": 1, "j": 2, "k": 3}
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(src: str):
    tokens = []
    pos = 0
    while src[pos:].strip():
        m = _TOKEN.match(src, pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("ident", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^()":
                raise WeightSyntaxError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, arity: int):
        self.tokens = _tokenize(src)
        self.i = 0
        self.arity = arity
        self.depth = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_close(self):
        kind, _, pos = self.peek()
        if kind != ")":
            if kind == "end":
                raise WeightSyntaxError("unbalanced parenthesis", pos)
            raise WeightSyntaxError(f"expected ')' but found {kind!r}", pos)
        self.take()

    def parse(self) -> Node:
        node = self.expr()
        kind, _, pos = self.peek()
        if kind == ")":
            raise WeightSyntaxError("unbalanced parenthesis", pos)
        if kind != "end":
            raise WeightSyntaxError(f"unexpected token {kind!r}", pos)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.peek()[0] == "*":
            self.take()
            node = Mul(node, self.factor())
        return node

    def factor(self) -> Node:
        node = self.base()
        if self.peek()[0] == "^":
            self.take()
            kind, value, pos = self.take()
            if kind != "int":
                raise WeightSyntaxError(
                    "exponent must be a non-negative integer literal", pos)
            node = Pow(node, value)
        return node

    def base(self) -> Node:
        kind, value, pos = self.take()
        if kind == "int":
            return Num(value)
        if kind == "-":
            return Neg(self.factor())
        if kind == "(":
            node = self.expr()
            self.expect_close()
            return node
        if kind == "ident":
            if value == "abs":
                if self.peek()[0] != "(":
                    raise WeightSyntaxError("expected '(' after abs", self.peek()[2])
                self.take()
                node = self.expr()
                self.expect_close()
                return Abs(node)
            return Var(self._var_index(value, pos))
        if kind == "end":
            raise WeightSyntaxError("unexpected end of input", pos)
        raise WeightSyntaxError(f"unexpected token {kind!r}", pos)

    def _var_index(self, name: str, pos: int) -> int:
        if name in _ALIASES:
            idx = _ALIASES[name]
        elif re.fullmatch(r"k[1-9]\d*", name):
            idx = int(name[1:])
        else:
            raise WeightSyntaxError(f"unknown variable {name!r}", pos)
        if idx > self.arity:
            raise WeightSyntaxError(
                f"variable {name!r} exceeds arity {self.arity}", pos)
        return idx


def parse_weight(src: str, arity: int) -> WeightExpr:
    if arity < 1:
        raise ValueError("arity must be >= 1")
    return WeightExpr(_Parser(src, arity).parse(), arity)


def _eval(node: Node, point: Sequence[int]) -> int:
    t = type(node)
    if t is Var:
        return point[node.index - 1]
    if t is Num:
        return node.value
    if t is Abs:
        return abs(_eval(node.arg, point))
    if t is Pow:
        # Python defines 0 ** 0 == 1
        return _eval(node.base, point) ** node.exponent
    if t is Mul:
        return _eval(node.left, point) * _eval(node.right, point)
    if t is Sub:
        return _eval(node.left, point) - _eval(node.right, point)
    if t is Add:
        return _eval(node.left, point) + _eval(node.right, point)
    if t is Neg:
        return -_eval(node.arg, point)
    raise TypeError(f"not a weight node: {node!r}")


def eval_weight(expr: WeightExpr, point: Sequence[int]) -> int:
    if len(point) != expr.arity:
        raise ValueError(
            f"arity mismatch: weight takes {expr.arity} values, got {len(point)}")
    return _eval(expr.root, point)


def max_var_index(node: Node) -> int:
    if isinstance(node, Var):
        return node.index
    if isinstance(node, Num):
        return 0
    if isinstance(node, (Neg, Abs)):
        return max_var_index(node.arg)
    if isinstance(node, Pow):
        return max_var_index(node.base)
    return max(max_var_index(node.left), max_var_index(node.right))


def format_node(node: Node) -> str:
    """Render a node so that re-parsing gives back the same tree."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Var):
        return f"k{node.index}"
    if isinstance(node, Abs):
        return f"abs({format_node(node.arg)})"
    if isinstance(node, Neg):
        return f"-({format_node(node.arg)})"
    if isinstance(node, Pow):
        return f"({format_node(node.base)})^{node.exponent}"
    op = {Add: "+", Sub: "-", Mul: "*"}[type(node)]
    return f"({format_node(node.left)} {op} {format_node(node.right)})"
