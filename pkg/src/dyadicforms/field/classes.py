"""Square classes F^x / F^x2.

The unit classes are represented by the system

    U = { 1 + A }  ∪  { Delta }  ∪  { 1 + A + c pi^{2e} : A != 0 }

where A = sum over odd j < 2e of [a_j] pi^j with residue digits a_j, and the
constant c is chosen so that 1 + A + c pi^{2e} lies in Delta (1 + A). Every
member satisfies d(delta) = ord(delta - 1). U is sorted by (d, digits), and
the class table lists U followed by pi * U.

Each class also carries coordinates over GF(2) on the basis

    pi, Delta, 1 + t^k pi^j  (j odd < 2e, 0 <= k < f)

so that products of classes are XORs of coordinates. The Hilbert pairing is
bilinear in these coordinates.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from ..constants import INFINITY
from ..errors import ClassTableError
from .defect import defect_order, is_square
from .element import FieldElement

if TYPE_CHECKING:
    from .context import FieldContext

logger = logging.getLogger(__name__)

__all__ = [
    "SquareClass",
    "ClassTable",
    "class_table",
    "unit_class_reps",
    "all_square_classes",
    "square_class_of",
    "class_product",
    "class_of_coords",
    "as_class",
]


@dataclass(frozen=True, eq=False)
class SquareClass:
    """An element of F^x/F^x2.

    Attributes:
        rep: Canonical representative delta or delta*pi with delta in U
        parity: ord(rep) mod 2
        dval: d of the class (0 when parity is 1)
        index: Position in the class table (units first)
        coords: GF(2) coordinates on the fixed basis, as a bitmask
    """

    rep: FieldElement = field(repr=False)
    parity: int
    dval: float
    index: int
    coords: int

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SquareClass):
            return NotImplemented
        return self.index == other.index and self.rep.ctx is other.rep.ctx

    def __hash__(self) -> int:
        return hash(self.index)

    @property
    def is_square(self) -> bool:
        return self.dval == INFINITY

    @property
    def label(self) -> str:
        """Short printable form of the representative."""
        return str(self.rep)

    def to_literal(self) -> dict:
        return self.rep.to_literal()

    def __mul__(self, other: SquareClass) -> SquareClass:
        return class_product(self, other)


@dataclass
class ClassTable:
    """All 2^{ef+2} square classes of one field."""

    unit_reps: list[FieldElement]
    classes: list[SquareClass]
    basis: list[FieldElement]
    by_coords: dict[int, SquareClass]
    one: SquareClass
    delta: SquareClass
    minus_one: SquareClass
    pi: SquareClass

    @property
    def unit_classes(self) -> list[SquareClass]:
        return self.classes[: len(self.unit_reps)]


def _candidate_units(ctx: FieldContext) -> list[FieldElement]:
    """1 + A and the Delta-twisted partner of each A."""
    e = ctx.e
    odd_positions = list(range(1, 2 * e, 2))
    lam2 = (ctx.pi**e / 2) ** 2  # pi^{2e} / 4
    twist = ctx.residue.mul(ctx.rho.residue(), ctx.residue.inv(lam2.residue()))
    twist_term = ctx.residue_lift(twist) * ctx.pi ** (2 * e)

    reps: list[FieldElement] = []
    n_a = ctx.residue.order ** len(odd_positions)
    for code in range(n_a):
        a_term = ctx.zero
        rest = code
        for j in odd_positions:
            digit = rest % ctx.residue.order
            rest //= ctx.residue.order
            if digit:
                a_term = a_term + ctx.residue_lift(digit) * ctx.pi**j
        reps.append(1 + a_term)
        reps.append(ctx.delta if a_term.is_zero else 1 + a_term + twist_term)
    return reps


def _sort_key(x: FieldElement) -> tuple[float, list[int]]:
    return defect_order(x), x.digits(2 * x.ctx.e + 1)


def _find_unit_index(unit_reps: list[FieldElement], u: FieldElement) -> int:
    for i, delta in enumerate(unit_reps):
        if is_square(u * delta):
            return i
    raise ClassTableError(f"unit {u!r} matches no representative")


def _build_table(ctx: FieldContext) -> ClassTable:
    e, f = ctx.e, ctx.f
    unit_reps = sorted(_candidate_units(ctx), key=_sort_key)
    n_units = len(unit_reps)
    if n_units != 2 ** (e * f + 1):
        raise ClassTableError(f"expected {2 ** (e * f + 1)} unit classes, built {n_units}")

    basis = [ctx.pi, ctx.delta]
    for j in range(1, 2 * e, 2):
        for k in range(f):
            basis.append(1 + ctx.residue_lift(1 << k) * ctx.pi**j)

    coords_of = [-1] * (2 * n_units)
    for mask in range(1 << len(basis)):
        product = ctx.one
        for b, elem in enumerate(basis):
            if mask >> b & 1:
                product = product * elem
        parity = product.parity
        idx = _find_unit_index(unit_reps, product.unit_part()) + parity * n_units
        if coords_of[idx] != -1:
            raise ClassTableError("square-class basis is linearly dependent")
        coords_of[idx] = mask

    classes = []
    for idx in range(2 * n_units):
        parity, u = divmod(idx, n_units)
        rep = unit_reps[u] * ctx.pi**parity
        dval = 0 if parity else defect_order(unit_reps[u])
        classes.append(SquareClass(rep, parity, dval, idx, coords_of[idx]))
    by_coords = {c.coords: c for c in classes}

    one = classes[_find_unit_index(unit_reps, ctx.one)]
    delta = classes[_find_unit_index(unit_reps, ctx.delta)]
    minus_one = classes[_find_unit_index(unit_reps, -ctx.one)]
    pi = classes[n_units + _find_unit_index(unit_reps, ctx.one)]
    logger.info(f"square-class table built: {len(classes)} classes, basis size {len(basis)}")
    return ClassTable(unit_reps, classes, basis, by_coords, one, delta, minus_one, pi)


def class_table(ctx: FieldContext) -> ClassTable:
    """The class table of ``ctx``, built on first use."""
    table = ctx.cache.get("class_table")
    if table is None:
        with ctx.lock:
            table = ctx.cache.get("class_table")
            if table is None:
                table = _build_table(ctx)
                ctx.cache["class_table"] = table
    return table


def unit_class_reps(ctx: FieldContext) -> list[SquareClass]:
    """The 2^{ef+1} unit classes, each represented by delta with d(delta) = ord(delta - 1)."""
    return class_table(ctx).unit_classes


def all_square_classes(ctx: FieldContext) -> list[SquareClass]:
    return list(class_table(ctx).classes)


def square_class_of(x: FieldElement) -> SquareClass:
    """Canonical class of a nonzero element.

    Raises:
        PrecisionLoss: fewer than 2e+1 digits known past ord(x)
    """
    ctx = x.ctx
    key = ("class", x.class_key())
    cached = ctx.cache.get(key)
    if cached is not None:
        return cached
    table = class_table(ctx)
    n_units = len(table.unit_reps)
    idx = _find_unit_index(table.unit_reps, x.unit_part()) + x.parity * n_units
    result = table.classes[idx]
    with ctx.lock:
        ctx.cache[key] = result
    return result


def class_product(a: SquareClass, b: SquareClass) -> SquareClass:
    return class_of_coords(a.rep.ctx, a.coords ^ b.coords)


def class_of_coords(ctx: FieldContext, coords: int) -> SquareClass:
    return class_table(ctx).by_coords[coords]


def as_class(x: FieldElement | SquareClass | int, ctx: FieldContext) -> SquareClass:
    """Accept an element, an integer or a class wherever a class is meant."""
    if isinstance(x, SquareClass):
        return x
    if isinstance(x, int):
        x = ctx.from_int(x)
    return square_class_of(x)
