"""Quadratic defect.

For c in F^x the defect order d(c) = ord(c^{-1} 𝔡(c)) takes values in
{0, 1, 3, ..., 2e-1, 2e, ∞}:

    d(c) = ∞    iff c is a square
    d(c) = 2e   iff c is Delta times a square
    d(c) = 0    iff ord(c) is odd

Units are handled by square absorption. With t = ord(u - 1):

    t odd, t < 2e    d(u) = t
    t even, t < 2e   divide u by (1 + b pi^{t/2})^2 where b^2 = (u-1)/pi^t mod pi;
                     t strictly increases
    t = 2e           (u-1)/4 mod pi = a; if z^2 + z = a has no root in k then
                     d(u) = 2e, else divide by (1 + 2z)^2
    t > 2e           u is a square (u = 1 mod 4 pi)

The product of the absorbed factors is the s of u = s^2 (1 + r pi^{d(u)}).

References:
    - O'Meara, Introduction to Quadratic Forms, 63:2, 63:3
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..constants import INFINITY
from ..errors import DefectOutOfRange, PrecisionLoss, SharpUndefined
from .element import FieldElement

logger = logging.getLogger(__name__)

__all__ = [
    "DefectDescent",
    "defect_descent",
    "defect_order",
    "defect_split",
    "is_square",
    "sharp",
]


@dataclass(frozen=True)
class DefectDescent:
    """Outcome of square absorption on a unit u.

    Attributes:
        dval: d(u)
        s: product of the absorbed square roots, u = s^2 * rest
        rest: u / s^2; equals 1 + r pi^{dval} when dval is odd and below 2e
    """

    dval: float
    s: FieldElement
    rest: FieldElement


def _check_precision(c: FieldElement) -> None:
    need = 2 * c.ctx.e + 1
    if c.rel_prec < need:
        raise PrecisionLoss(
            f"defect needs {need} digits past the valuation, element carries {c.rel_prec}"
        )


def defect_descent(u: FieldElement) -> DefectDescent:
    """Run square absorption on a unit."""
    ctx = u.ctx
    e = ctx.e
    if not u.is_unit():
        raise ValueError("defect_descent expects a unit")
    _check_precision(u)
    s = ctx.one
    while True:
        t = u.order_of_difference(1)
        if t > 2 * e:
            return DefectDescent(INFINITY, s, u)
        w = (u - 1).unit_part()
        if t < 2 * e:
            if t % 2 == 1:
                return DefectDescent(int(t), s, u)
            b = ctx.residue_lift(ctx.residue.sqrt(w.residue()))
            factor = 1 + b * ctx.pi ** (int(t) // 2)
        else:
            a = ((u - 1) / 4).residue()
            z = ctx.residue.artin_schreier_root(a)
            if z is None:
                return DefectDescent(2 * e, s, u)
            factor = 1 + 2 * ctx.residue_lift(z)
        u = u / (factor * factor)
        s = s * factor


def defect_order(c: FieldElement) -> float:
    """d(c) as an int, or ``math.inf`` for squares.

    Raises:
        PrecisionLoss: fewer than 2e+1 digits known past ord(c)
    """
    if c.is_zero:
        raise ValueError("defect of zero")
    if c.parity == 1:
        return 0
    _check_precision(c)
    ctx = c.ctx
    key = ("defect", c.class_key())
    cached = ctx.cache.get(key)
    if cached is not None:
        return cached
    dval = defect_descent(c.unit_part()).dval
    with ctx.lock:
        ctx.cache[key] = dval
    return dval


def is_square(x: FieldElement) -> bool:
    """x in F^{x2}, decided as d(x) = ∞."""
    return defect_order(x) == INFINITY


def defect_split(delta: FieldElement) -> tuple[FieldElement, FieldElement]:
    """Units (s, r) with delta = s^2 (1 + r pi^{d(delta)}).

    Raises:
        DefectOutOfRange: d(delta) is 0, 2e or ∞
    """
    if delta.is_zero or not delta.is_unit():
        raise DefectOutOfRange("defect_split needs a unit")
    e = delta.ctx.e
    descent = defect_descent(delta)
    d = descent.dval
    if not 1 <= d < 2 * e:
        raise DefectOutOfRange(f"d(delta) = {d} is outside [1, 2e) = [1, {2 * e})")
    r = (descent.rest - 1).unit_part()
    return descent.s, r


def sharp(c: FieldElement) -> FieldElement:
    """The companion unit c^# with d(c^#) = 2e - d(c) and (c^#, c) = -1.

    Delta when ord(c) is odd, else 1 + 4 rho r^{-1} pi^{-d(c)} where the unit
    part of c is s^2 (1 + r pi^{d(c)}).

    Raises:
        SharpUndefined: c is a square or Delta times a square
    """
    ctx = c.ctx
    if c.is_zero:
        raise SharpUndefined("sharp of zero")
    if c.parity == 1:
        return ctx.delta
    d = defect_order(c)
    if d >= 2 * ctx.e:
        raise SharpUndefined("c is a square or Delta times a square")
    _, r = defect_split(c.unit_part())
    return 1 + 4 * ctx.rho * r.inverse() * ctx.pi ** (-int(d))
