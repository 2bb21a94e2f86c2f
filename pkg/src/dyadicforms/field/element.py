"""Elements of a dyadic field with tracked absolute precision.

A nonzero element is pi^val * u with u a unit of O_F stored as a lift (see
``context``). ``prec`` is absolute: the element is known modulo pi^prec.
Exact zero has val = prec = infinity. Any operation whose result depends on
digits at or beyond ``prec`` raises ``PrecisionLoss``.
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING, Any, Union

from ..constants import INFINITY
from ..errors import DivisionByZero, FieldMismatch, PrecisionLoss

if TYPE_CHECKING:
    from .context import FieldContext, Lift

__all__ = ["FieldElement"]

Operand = Union["FieldElement", int]


class FieldElement:
    """pi^val * unit, known modulo pi^prec. Immutable."""

    __slots__ = ("ctx", "val", "unit", "prec")

    def __init__(self, ctx: FieldContext, val: float, unit: Lift | None, prec: float):
        if unit is not None and not val < prec:
            raise PrecisionLoss(f"valuation {val} is not below precision {prec}")
        self.ctx = ctx
        self.val = val
        self.unit = unit
        self.prec = prec

    @classmethod
    def zero_of(cls, ctx: FieldContext) -> FieldElement:
        return cls(ctx, INFINITY, None, INFINITY)

    # =========================================================================
    # Inspection
    # =========================================================================

    @property
    def is_zero(self) -> bool:
        return self.unit is None

    @property
    def rel_prec(self) -> float:
        return self.prec - self.val

    @property
    def parity(self) -> int:
        """ord mod 2."""
        if self.is_zero:
            raise DivisionByZero("zero has no valuation parity")
        return int(self.val) % 2

    def is_unit(self) -> bool:
        return self.val == 0

    def unit_part(self) -> FieldElement:
        """x * pi^{-ord x}, a unit with the same relative precision."""
        self._require_nonzero()
        return FieldElement(self.ctx, 0, self.unit, self.rel_prec)

    def residue(self) -> int:
        """Residue-field image of x (x must be integral)."""
        if self.is_zero or self.val > 0:
            return 0
        if self.val < 0:
            raise ValueError("residue of a non-integral element")
        assert self.unit is not None
        return self.ctx.lift_residue(self.unit)

    def digits(self, count: int | None = None) -> list[int]:
        """Residue digits d_0, d_1, ... of the unit part, little-endian in pi."""
        if self.is_zero:
            return []
        assert self.unit is not None
        available = int(self.rel_prec)
        count = available if count is None else min(count, available)
        ctx = self.ctx
        out: list[int] = []
        lift = self.unit
        for _ in range(count):
            d = ctx.lift_residue(lift)
            out.append(d)
            lift = ctx.lift_sub(lift, ctx.lift_const(ctx.o0_lift(d)))
            lift = ctx.lift_div_pi_power(lift, 1)
        return out

    def to_literal(self) -> dict[str, Any]:
        """{"val", "digits"} with trailing zero digits dropped."""
        if self.is_zero:
            return {"val": 0, "digits": []}
        digits = self.digits()
        while digits and digits[-1] == 0:
            digits.pop()
        return {"val": int(self.val), "digits": digits}

    def class_key(self) -> tuple[int, Any]:
        """Key that determines the square class: (parity, unit mod 4 pi)."""
        self._require_nonzero()
        assert self.unit is not None
        need = 2 * self.ctx.e + 1
        if self.rel_prec < need:
            raise PrecisionLoss(
                f"square class needs {need} digits past the valuation, have {self.rel_prec}"
            )
        return self.parity, self.ctx.lift_key(self.unit, need)

    def __repr__(self) -> str:
        if self.is_zero:
            return "FieldElement(0)"
        return f"FieldElement(val={self.val}, digits={self.digits(2 * self.ctx.e + 2)}, prec={self.prec})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        shown = self.digits(2 * self.ctx.e + 1)
        body = "(" + ",".join(str(d) for d in shown) + ")"
        return body if self.val == 0 else f"{body}·π^{int(self.val)}"

    # =========================================================================
    # Arithmetic
    # =========================================================================

    def _coerce(self, other: Operand) -> FieldElement:
        if isinstance(other, int):
            return self.ctx.from_int(other)
        if other.ctx is not self.ctx:
            raise FieldMismatch("operands belong to different fields")
        return other

    def _require_nonzero(self) -> None:
        if self.is_zero:
            raise DivisionByZero("operation undefined at zero")

    def __neg__(self) -> FieldElement:
        if self.is_zero:
            return self
        assert self.unit is not None
        return FieldElement(self.ctx, self.val, self.ctx.lift_neg(self.unit), self.prec)

    def __add__(self, other: Operand) -> FieldElement:
        y = self._coerce(other)
        if self.is_zero:
            return y
        if y.is_zero:
            return self
        assert self.unit is not None and y.unit is not None
        ctx = self.ctx
        prec = min(self.prec, y.prec)
        low, high = (self, y) if self.val <= y.val else (y, self)
        assert low.unit is not None and high.unit is not None
        if high.val >= prec:
            return FieldElement(ctx, low.val, low.unit, prec)
        shifted = ctx.lift_mul_pi_power(high.unit, int(high.val - low.val))
        total = ctx.lift_add(low.unit, shifted)
        t = ctx.lift_ord(total)
        if low.val + t >= prec:
            raise PrecisionLoss(f"sum vanishes to precision pi^{prec}")
        unit = ctx.lift_div_pi_power(total, int(t))
        return FieldElement(ctx, low.val + t, unit, prec)

    __radd__ = __add__

    def __sub__(self, other: Operand) -> FieldElement:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Operand) -> FieldElement:
        return self._coerce(other) - self

    def __mul__(self, other: Operand) -> FieldElement:
        y = self._coerce(other)
        if self.is_zero or y.is_zero:
            return self.ctx.zero
        assert self.unit is not None and y.unit is not None
        val = self.val + y.val
        rel = min(self.rel_prec, y.rel_prec)
        return FieldElement(self.ctx, val, self.ctx.lift_mul(self.unit, y.unit), val + rel)

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        self._require_nonzero()
        assert self.unit is not None
        unit = self.ctx.lift_unit_inverse(self.unit)
        return FieldElement(self.ctx, -self.val, unit, -self.val + self.rel_prec)

    def __truediv__(self, other: Operand) -> FieldElement:
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: Operand) -> FieldElement:
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> FieldElement:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.ctx.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, k: int) -> FieldElement:
        """x * pi^k (exact; k may be negative)."""
        if self.is_zero:
            return self
        return FieldElement(self.ctx, self.val + k, self.unit, self.prec + k)

    def div_by_pi(self) -> FieldElement:
        return self.shift(-1)

    # =========================================================================
    # Comparison
    # =========================================================================

    def order_of_difference(self, other: Operand) -> float:
        """ord(x - y), or infinity when x and y agree to the known precision."""
        try:
            diff = self - self._coerce(other)
        except PrecisionLoss:
            return INFINITY
        return diff.val

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (FieldElement, int)):
            return NotImplemented
        y = self._coerce(other)
        if self.is_zero or y.is_zero:
            return self.is_zero and y.is_zero
        return math.isinf(self.order_of_difference(y))

    __hash__ = None  # type: ignore[assignment]
