"""Arithmetic expressions in one variable ``s``.

Grammar: numbers, ``s``, the constants ``pi`` and ``e``, the operators
``+ - * / ^`` (``**`` also accepted) and the functions sin, cos, tan, sinh,
cosh, tanh, sech, exp, sqrt. Expressions are parsed with :mod:`ast` and
compiled into closures; nothing is passed to ``eval``.
"""
from __future__ import annotations

import ast
import math
import operator
from typing import Callable

from .errors import ConfigurationError


class ExpressionError(ConfigurationError):
    pass


FUNCTIONS = {
    "sin": math.sin,
    "cos": math.cos,
    "tan": math.tan,
    "sinh": math.sinh,
    "cosh": math.cosh,
    "tanh": math.tanh,
    "sech": lambda x: 1.0 / math.cosh(x),
    "exp": math.exp,
    "sqrt": math.sqrt,
}
CONSTANTS = {"pi": math.pi, "e": math.e}
BINARY = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
}
UNARY = {ast.USub: operator.neg, ast.UAdd: operator.pos}

Compiled = Callable[[float], float]


def _compile(node: ast.AST, text: str) -> Compiled:
    if isinstance(node, ast.Expression):
        return _compile(node.body, text)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) and not isinstance(node.value, bool):
        value = float(node.value)
        return lambda s: value
    if isinstance(node, ast.Name):
        if node.id == "s":
            return lambda s: s
        if node.id in CONSTANTS:
            value = CONSTANTS[node.id]
            return lambda s: value
        raise ExpressionError(f"unknown name {node.id!r} in {text!r}")
    if isinstance(node, ast.BinOp) and type(node.op) in BINARY:
        op = BINARY[type(node.op)]
        left, right = _compile(node.left, text), _compile(node.right, text)
        return lambda s: op(left(s), right(s))
    if isinstance(node, ast.UnaryOp) and type(node.op) in UNARY:
        op = UNARY[type(node.op)]
        operand = _compile(node.operand, text)
        return lambda s: op(operand(s))
    if isinstance(node, ast.Call):
        if not isinstance(node.func, ast.Name) or node.func.id not in FUNCTIONS:
            raise ExpressionError(f"unsupported function in {text!r}")
        if len(node.args) != 1 or node.keywords:
            raise ExpressionError(f"{node.func.id} takes exactly one argument in {text!r}")
        fn = FUNCTIONS[node.func.id]
        arg = _compile(node.args[0], text)
        return lambda s: fn(arg(s))
    raise ExpressionError(f"unsupported syntax {type(node).__name__} in {text!r}")


def parse_expression(text: str) -> Compiled:
    """Compile ``text`` into a function of ``s``.

    >>> parse_expression("2^3 + s")(1.0)
    9.0
    """
    try:
        # '^' must bind like '**', not like Python's xor
        tree = ast.parse(text.strip().replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"cannot parse {text!r}: {exc.msg}") from None
    compiled = _compile(tree, text)

    def evaluate(s: float) -> float:
        try:
            return float(compiled(s))
        except (ArithmeticError, ValueError) as exc:
            raise ExpressionError(f"{text!r} cannot be evaluated at s={s!r}: {exc}") from None

    return evaluate


def parse_constant(text: str) -> float:
    """Evaluate an expression that must not depend on ``s``."""
    f = parse_expression(text)
    tree = ast.parse(text.strip().replace("^", "**"), mode="eval")
    if any(isinstance(n, ast.Name) and n.id == "s" for n in ast.walk(tree)):
        raise ExpressionError(f"{text!r} must be a constant")
    return f(0.0)


def parse_triple(text: str):
    """Split ``"fx; fy; fz"`` and compile each component."""
    parts = text.split(";")
    if len(parts) != 3:
        raise ExpressionError(f"expected three ';'-separated components, got {len(parts)}")
    return tuple(parse_expression(p) for p in parts)
