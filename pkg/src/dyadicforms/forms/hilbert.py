"""Hilbert symbol over a dyadic field.

(a, b) = 1 iff b is a norm from F(sqrt a), i.e. iff b lies in the class group
N_a generated by the values x^2 - a y^2. For nonsquare a, N_a has index 2 in
F^x/F^x2, and every norm is a square multiple of 1 - a y^2 or of -a. So
N_a is collected by evaluating 1 - a y^2 on y = pi^k * (short digit strings)
until the span reaches half the class group. There is no search for primitive
solutions of a x^2 + b y^2 = z^2 modulo pi^(2e+3).

The symbol is bimultiplicative, so it is stored once as a GF(2) pairing
matrix on the class basis (see ``field.classes``) and evaluated as a
bilinear form on class coordinates.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from ..constants import NORM_SEARCH_MAX_DIGITS_PER_E, NORM_SEARCH_MIN_DIGITS
from ..errors import ClassTableError, PrecisionLoss
from ..field import FieldElement, SquareClass, as_class, class_table, square_class_of

if TYPE_CHECKING:
    from ..field import FieldContext

logger = logging.getLogger(__name__)

__all__ = ["PairingMatrix", "pairing_matrix", "norm_group", "hilbert", "hilbert_classes"]


def _span_add(span: set[int], v: int) -> set[int]:
    if v in span:
        return span
    return span | {s ^ v for s in span}


def _search_values(ctx: FieldContext):
    """y = pi^k * (digit string), shortest strings first."""
    e = ctx.e
    order = ctx.residue.order
    max_len = max(NORM_SEARCH_MIN_DIGITS, NORM_SEARCH_MAX_DIGITS_PER_E * e + 1)
    for length in range(1, max_len + 1):
        for k in range(-(2 * e + 1), 2 * e + 2):
            for tail in itertools.product(range(order), repeat=length - 1):
                for lead in range(1, order):
                    yield ctx.from_digits(k, (lead,) + tail)


def norm_group(ctx: FieldContext, c: SquareClass) -> frozenset[int]:
    """Coordinates of the classes represented by <1, -c> (norms from F(sqrt c))."""
    table = class_table(ctx)
    total = len(table.classes)
    if c.is_square:
        return frozenset(s.coords for s in table.classes)
    target = total // 2
    a = c.rep
    span = _span_add({0}, square_class_of(-a).coords)
    for y in _search_values(ctx):
        if len(span) == target:
            break
        try:
            value = 1 - a * y * y
            span = _span_add(span, square_class_of(value).coords)
        except PrecisionLoss:
            continue
    if len(span) != target:
        raise ClassTableError(f"norm search for {c.label} reached only {len(span)} of {target}")
    return frozenset(span)


@dataclass(frozen=True)
class PairingMatrix:
    """rows[i] has bit j set iff (b_i, b_j) = -1 for basis classes b_i, b_j."""

    rows: tuple[int, ...]

    def symbol(self, x: int, y: int) -> int:
        parity = 0
        i = 0
        while x:
            if x & 1:
                parity ^= bin(self.rows[i] & y).count("1") & 1
            x >>= 1
            i += 1
        return -1 if parity else 1

    def rank(self) -> int:
        rows = list(self.rows)
        rank = 0
        for bit in range(len(rows)):
            pivot = next((r for r in range(rank, len(rows)) if rows[r] >> bit & 1), None)
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            for r in range(len(rows)):
                if r != rank and rows[r] >> bit & 1:
                    rows[r] ^= rows[rank]
            rank += 1
        return rank


def _build_pairing(ctx: FieldContext) -> PairingMatrix:
    table = class_table(ctx)
    basis_classes = [square_class_of(b) for b in table.basis]
    rows = []
    for bi in basis_classes:
        norms = norm_group(ctx, bi)
        row = 0
        for j, bj in enumerate(basis_classes):
            if bj.coords not in norms:
                row |= 1 << j
        rows.append(row)
    matrix = PairingMatrix(tuple(rows))
    for i, r in enumerate(rows):
        for j in range(len(rows)):
            if (r >> j & 1) != (rows[j] >> i & 1):
                raise ClassTableError("Hilbert pairing matrix is not symmetric")
    if matrix.rank() != len(rows):
        raise ClassTableError("Hilbert pairing matrix is degenerate")
    logger.info(f"Hilbert pairing matrix built for [F:Q2]={ctx.degree}")
    return matrix


def pairing_matrix(ctx: FieldContext) -> PairingMatrix:
    matrix = ctx.cache.get("pairing")
    if matrix is None:
        with ctx.lock:
            matrix = ctx.cache.get("pairing")
            if matrix is None:
                matrix = _build_pairing(ctx)
                ctx.cache["pairing"] = matrix
    return matrix


def hilbert_classes(a: SquareClass, b: SquareClass) -> int:
    """(a, b) on square classes; d(a) + d(b) > 2e gives +1 immediately."""
    ctx = a.rep.ctx
    if a.dval + b.dval > 2 * ctx.e:
        return 1
    return pairing_matrix(ctx).symbol(a.coords, b.coords)


def hilbert(a: FieldElement | SquareClass, b: FieldElement | SquareClass) -> int:
    """Hilbert symbol (a, b) in {+1, -1}."""
    ctx = a.rep.ctx if isinstance(a, SquareClass) else a.ctx
    return hilbert_classes(as_class(a, ctx), as_class(b, ctx))
