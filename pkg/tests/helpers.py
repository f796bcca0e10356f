"""Shared test utilities: sympy-based linear algebra oracles and an
independent evaluator for the classical composition table.

The sympy routines are the second route for every matrix fact asserted in
the suite; they never touch gelfand.linalg.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from gelfand.diffalg import DiffPoly, ModelConfig, var
from gelfand.exprspace import OpSymbol


def sympy_matrix(rows) -> sympy.Matrix:
    return sympy.Matrix(
        [[sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else sympy.Rational(c) for c in row] for row in rows]
    )


def sympy_rank(rows) -> int:
    return sympy_matrix(rows).rank()


def sympy_nullity(rows, cols: int) -> int:
    if not rows:
        return cols
    m = sympy_matrix(rows)
    return m.cols - m.rank()


def sympy_rref_fractions(rows) -> list[list[Fraction]]:
    reduced, pivots = sympy_matrix(rows).rref()
    out = [
        [Fraction(int(v.p), int(v.q)) for v in reduced.row(i)]
        for i in range(reduced.rows)
    ]
    return out[: len(pivots)]  # nonzero rows only


def apply_op(op: OpSymbol, primed: bool, a: DiffPoly, b: DiffPoly) -> DiffPoly:
    """Direct image of an operation symbol, with the opposite product
    realized by an argument swap."""
    if primed:
        a, b = b, a
    if op.is_plain:
        return a * b
    return a * b.derive(op.index)


def composition_eval(
    slot: int,
    outer_primed: bool,
    inner_primed: bool,
    op_out: OpSymbol,
    op_in: OpSymbol,
    model: ModelConfig,
) -> DiffPoly:
    """Evaluate  outer^p o_slot inner^q  on (x, y, z) straight from the
    slot definition, independent of the (sigma, shape) encoding."""
    x, y, z = var(model, 0), var(model, 1), var(model, 2)
    if slot == 1:
        return apply_op(op_out, outer_primed, apply_op(op_in, inner_primed, x, y), z)
    if slot == 2:
        return apply_op(op_out, outer_primed, apply_op(op_in, inner_primed, y, z), x)
    if slot == 3:
        return apply_op(op_out, outer_primed, apply_op(op_in, inner_primed, z, x), y)
    raise ValueError(f"bad slot {slot}")
