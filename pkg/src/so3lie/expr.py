"""A tiny, safe expression language for catalog data.

Expressions use Python syntax restricted to numbers, names, ``+ - * / **``
and parentheses.  Names resolve to parameters, to ``r3`` (the square root
of three) or to basis forms written ``e`` followed by 1-based digits, e.g.
``e24`` is ``e^2 ^ e^4`` and ``e2345`` a 4-form.
"""

from __future__ import annotations

import ast
import re
from collections.abc import Mapping
from fractions import Fraction

from .exterior import KForm
from .scalars import R3, Scalar

_BASIS = re.compile(r"^e([1-9]+)$")


class ExpressionError(ValueError):
    pass


Value = Scalar | KForm


def _binop(op: ast.operator, x: Value, y: Value) -> Value:
    if isinstance(op, ast.Add):
        return _add(x, y)
    if isinstance(op, ast.Sub):
        return _add(x, _neg(y))
    if isinstance(op, ast.Mult):
        if isinstance(x, KForm) and isinstance(y, KForm):
            return x ^ y
        if isinstance(x, KForm):
            return x * y
        return y * x if isinstance(y, KForm) else x * y
    if isinstance(op, ast.Div):
        if isinstance(y, KForm):
            raise ExpressionError("cannot divide by a form")
        return x / y
    if isinstance(op, ast.Pow):
        if isinstance(x, KForm) or isinstance(y, KForm) or not y.is_rational() or y.a.denominator != 1:
            raise ExpressionError("only integer powers of scalars are allowed")
        return x ** int(y.a)
    raise ExpressionError(f"operator {type(op).__name__} not allowed")


def _neg(x: Value) -> Value:
    return -x


def _add(x: Value, y: Value) -> Value:
    if isinstance(x, KForm) and isinstance(y, KForm):
        return x + y
    if isinstance(x, Scalar) and isinstance(y, Scalar):
        return x + y
    # a scalar zero added to a form is harmless ("0 + e12")
    form, other = (x, y) if isinstance(x, KForm) else (y, x)
    if other:
        raise ExpressionError("cannot add a nonzero scalar to a form")
    return form


def evaluate(text: str, env: Mapping[str, Scalar], n: int = 5) -> Value:
    try:
        tree = ast.parse(text, mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"bad expression {text!r}: {exc.msg}") from None

    def walk(node: ast.AST) -> Value:
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) and not isinstance(node.value, bool):
            if isinstance(node.value, float):
                return Scalar(Fraction(str(node.value)))
            return Scalar(node.value)
        if isinstance(node, ast.Name):
            name = node.id
            if name in env:
                return Scalar.coerce(env[name])
            if name == "r3":
                return R3
            m = _BASIS.match(name)
            if m:
                idx = tuple(int(c) for c in m.group(1))
                if any(i > n for i in idx):
                    raise ExpressionError(f"{name} out of range for dimension {n}")
                return KForm.basis(n, *idx)
            raise ExpressionError(f"unknown name {name!r} in {text!r}")
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = walk(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            return _binop(node.op, walk(node.left), walk(node.right))
        raise ExpressionError(f"construct {type(node).__name__} not allowed in {text!r}")

    return walk(tree)


def evaluate_scalar(text: str, env: Mapping[str, Scalar]) -> Scalar:
    v = evaluate(text, env)
    if not isinstance(v, Scalar):
        raise ExpressionError(f"{text!r} is not a scalar")
    return v


def evaluate_form(text: str, env: Mapping[str, Scalar], n: int, k: int) -> KForm:
    v = evaluate(text, env, n)
    if isinstance(v, Scalar):
        if v:
            raise ExpressionError(f"{text!r} is a nonzero scalar, expected a {k}-form")
        return KForm.zero(n, k)
    if v.k != k:
        if v.is_zero():
            return KForm.zero(n, k)
        raise ExpressionError(f"{text!r} has degree {v.k}, expected {k}")
    return v
