"""Single-bit symbolic expressions over two operand buses.

Expressions are immutable trees of AND/OR/XOR/NOT gates over input bits of
operands ``a`` and ``b`` plus the constants 0 and 1.  The smart constructors
fold constants so degenerate gates collapse (x ^ 0 -> x, x & 0 -> 0, ...).

Evaluation works on lane masks: each input bit is bound to an integer whose
bit L holds that input bit's value in test vector L.  Gate operations are
then plain Python bigint bitwise ops, which evaluates every lane at once.
Scalar evaluation is the single-lane case with mask 1.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BitExpr:
    pass


@dataclass(frozen=True)
class Const(BitExpr):
    value: int  # 0 or 1


@dataclass(frozen=True)
class InputBit(BitExpr):
    operand: str  # "a" or "b"
    index: int


@dataclass(frozen=True)
class Not(BitExpr):
    x: BitExpr


@dataclass(frozen=True)
class And(BitExpr):
    x: BitExpr
    y: BitExpr


@dataclass(frozen=True)
class Or(BitExpr):
    x: BitExpr
    y: BitExpr


@dataclass(frozen=True)
class Xor(BitExpr):
    x: BitExpr
    y: BitExpr


CONST0 = Const(0)
CONST1 = Const(1)


def abit(i: int) -> BitExpr:
    """Bit ``i`` of operand a; negative indices are the constant 0."""
    return CONST0 if i < 0 else InputBit("a", i)


def bbit(i: int) -> BitExpr:
    """Bit ``i`` of operand b; negative indices are the constant 0."""
    return CONST0 if i < 0 else InputBit("b", i)


def enot(x: BitExpr) -> BitExpr:
    if x is CONST0:
        return CONST1
    if x is CONST1:
        return CONST0
    if isinstance(x, Not):
        return x.x
    return Not(x)


def eand(x: BitExpr, y: BitExpr) -> BitExpr:
    if x is CONST0 or y is CONST0:
        return CONST0
    if x is CONST1:
        return y
    if y is CONST1:
        return x
    if x == y:
        return x
    return And(x, y)


def eor(x: BitExpr, y: BitExpr) -> BitExpr:
    if x is CONST1 or y is CONST1:
        return CONST1
    if x is CONST0:
        return y
    if y is CONST0:
        return x
    if x == y:
        return x
    return Or(x, y)


def exor(x: BitExpr, y: BitExpr) -> BitExpr:
    if x is CONST0:
        return y
    if y is CONST0:
        return x
    if x is CONST1:
        return enot(y)
    if y is CONST1:
        return enot(x)
    if x == y:
        return CONST0
    return Xor(x, y)


def input_bits_used(expr: BitExpr) -> set[tuple[str, int]]:
    """All (operand, index) pairs the expression reads."""
    out: set[tuple[str, int]] = set()
    stack = [expr]
    while stack:
        e = stack.pop()
        if isinstance(e, InputBit):
            out.add((e.operand, e.index))
        elif isinstance(e, Not):
            stack.append(e.x)
        elif isinstance(e, (And, Or, Xor)):
            stack.append(e.x)
            stack.append(e.y)
    return out


def eval_masks(
    exprs: list[BitExpr],
    a_masks: list[int],
    b_masks: list[int],
    ones: int,
    cache: dict[int, int] | None = None,
) -> list[int]:
    """Evaluate expressions over lane masks.

    ``a_masks[i]``/``b_masks[i]`` carry input bit i across all lanes; ``ones``
    is the all-lanes-set mask (it bounds NOT).  Shared subtrees are evaluated
    once via an identity-keyed cache.
    """
    if cache is None:
        cache = {}
    results = []
    for root in exprs:
        stack = [root]
        while stack:
            e = stack[-1]
            key = id(e)
            if key in cache:
                stack.pop()
                continue
            if isinstance(e, Const):
                cache[key] = ones if e.value else 0
                stack.pop()
            elif isinstance(e, InputBit):
                masks = a_masks if e.operand == "a" else b_masks
                cache[key] = masks[e.index]
                stack.pop()
            elif isinstance(e, Not):
                if id(e.x) in cache:
                    cache[key] = ones ^ cache[id(e.x)]
                    stack.pop()
                else:
                    stack.append(e.x)
            else:
                cx, cy = cache.get(id(e.x)), cache.get(id(e.y))
                if cx is None or cy is None:
                    if cx is None:
                        stack.append(e.x)
                    if cy is None:
                        stack.append(e.y)
                    continue
                if isinstance(e, And):
                    cache[key] = cx & cy
                elif isinstance(e, Or):
                    cache[key] = cx | cy
                else:
                    cache[key] = cx ^ cy
                stack.pop()
        results.append(cache[id(root)])
    return results


def eval_bit(expr: BitExpr, a_bits: int, b_bits: int, width: int) -> int:
    """Scalar evaluation of one expression on concrete operand patterns."""
    a_masks = [(a_bits >> i) & 1 for i in range(width)]
    b_masks = [(b_bits >> i) & 1 for i in range(width)]
    return eval_masks([expr], a_masks, b_masks, 1)[0]
