"""Named building blocks and their good BONGs.

    H                   2^{-1}A(0,0)               ≺1, -π^{-2e}≻
    A22rho              2^{-1}A(2,2ρ)              ≺1, -Δπ^{-2e}≻
    piA22rho            2^{-1}πA(2,2ρ)             ≺π, -Δπ^{1-2e}≻
    unary(a)            ⟨a⟩                        ≺a≻
    binary_diag(a, b)   ⟨a, b⟩, ord a <= ord b     ≺a, b≻
    defect_binary(δ, 1)                            ≺1, -δπ^{1-d(δ)}≻
    defect_binary(δ, 2)                            ≺δ♯, -δ♯δπ^{1-d(δ)}≻
    ternary_kappa(δ)    2^{-1}πA(2,2ρ) ⊥ ⟨Δδ⟩     ≺δκ♯, -δκ♯κπ^{2-2e}, δκ≻

with κ a unit of defect 2e-1 (by default the first such class representative).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

from ..enums import LatticeKind
from ..errors import BadParams, DefectOutOfRange
from ..field import FieldElement, defect_order, sharp, unit_class_reps
from .bong import BongLattice, concat, validate_bong

if TYPE_CHECKING:
    from ..field import FieldContext

__all__ = [
    "LatticeDescriptor",
    "make_block",
    "hyperbolic_lattice",
    "default_kappa",
]


@dataclass(frozen=True)
class LatticeDescriptor:
    """A lattice by block kind and parameters.

    Parameters per kind:
        unary: a
        binary_diag: a, b
        defect_binary: delta, nu (1 or 2)
        ternary_kappa: delta, optional kappa
        bong_literal: a (list of entries)
        concat: blocks (list of LatticeDescriptor)
    """

    kind: LatticeKind
    params: dict[str, Any] = field(default_factory=dict)


def _param(desc: LatticeDescriptor, name: str) -> Any:
    try:
        return desc.params[name]
    except KeyError:
        raise BadParams(f"{desc.kind.value} needs parameter '{name}'") from None


def _unit(x: Any, name: str) -> FieldElement:
    if not isinstance(x, FieldElement) or x.is_zero or not x.is_unit():
        raise BadParams(f"{name} must be a unit")
    return x


def default_kappa(ctx: FieldContext) -> FieldElement:
    """First unit class representative with d = 2e - 1."""
    target = 2 * ctx.e - 1
    for c in unit_class_reps(ctx):
        if c.dval == target:
            return c.rep
    raise BadParams(f"no unit of defect {target}")


def _h(ctx: FieldContext) -> BongLattice:
    return validate_bong([ctx.one, -ctx.pi ** (-2 * ctx.e)], "H")


def _a22rho(ctx: FieldContext) -> BongLattice:
    return validate_bong([ctx.one, -ctx.delta * ctx.pi ** (-2 * ctx.e)], "2^{-1}A(2,2ρ)")


def _pi_a22rho(ctx: FieldContext) -> BongLattice:
    return validate_bong([ctx.pi, -ctx.delta * ctx.pi ** (1 - 2 * ctx.e)], "2^{-1}πA(2,2ρ)")


def _defect_binary(ctx: FieldContext, delta: FieldElement, nu: int) -> BongLattice:
    d = defect_order(delta)
    if not (isinstance(d, int) and 1 <= d < 2 * ctx.e):
        raise DefectOutOfRange(f"defect_binary needs 1 <= d(delta) < 2e, got {d}")
    tail = delta * ctx.pi ** (1 - d)
    k = (1 - d) // 2
    scale = f"π^{{{k}}}" if k else ""
    body = f"A(π^{{{-k}}}, -(δ-1)π^{{{k}}}) [δ={delta}]"
    if nu == 1:
        return validate_bong([ctx.one, -tail], f"{scale}{body}")
    if nu == 2:
        d_sharp = sharp(delta)
        return validate_bong([d_sharp, -d_sharp * tail], f"δ♯{scale}{body}")
    raise BadParams(f"nu must be 1 or 2, got {nu}")


def _ternary_kappa(ctx: FieldContext, delta: FieldElement, kappa: FieldElement | None) -> BongLattice:
    kappa = default_kappa(ctx) if kappa is None else _unit(kappa, "kappa")
    if defect_order(kappa) != 2 * ctx.e - 1:
        raise BadParams("kappa must have defect 2e-1")
    k_sharp = sharp(kappa)
    first = delta * k_sharp
    entries = [first, -first * kappa * ctx.pi ** (2 - 2 * ctx.e), delta * kappa]
    return validate_bong(entries, f"2^{{-1}}πA(2,2ρ) ⊥ ⟨Δ{delta}⟩")


def make_block(ctx: FieldContext, desc: LatticeDescriptor) -> BongLattice:
    """Build the good BONG of a described lattice.

    Raises:
        BadParams: missing or ill-typed parameters
        NotAGoodBong: a literal or composed sequence is not a good BONG
    """
    kind = desc.kind
    if kind is LatticeKind.H:
        return _h(ctx)
    if kind is LatticeKind.A22RHO:
        return _a22rho(ctx)
    if kind is LatticeKind.PI_A22RHO:
        return _pi_a22rho(ctx)
    if kind is LatticeKind.UNARY:
        a = _param(desc, "a")
        return validate_bong([a], f"⟨{a}⟩")
    if kind is LatticeKind.BINARY_DIAG:
        a, b = _param(desc, "a"), _param(desc, "b")
        if a.is_zero or b.is_zero or a.val > b.val:
            raise BadParams("binary_diag needs nonzero a, b with ord a <= ord b")
        return validate_bong([a, b], f"⟨{a}, {b}⟩")
    if kind is LatticeKind.DEFECT_BINARY:
        delta = _unit(_param(desc, "delta"), "delta")
        return _defect_binary(ctx, delta, int(_param(desc, "nu")))
    if kind is LatticeKind.TERNARY_KAPPA:
        delta = _unit(_param(desc, "delta"), "delta")
        return _ternary_kappa(ctx, delta, desc.params.get("kappa"))
    if kind is LatticeKind.BONG_LITERAL:
        return validate_bong(_param(desc, "a"))
    if kind is LatticeKind.CONCAT:
        blocks = _param(desc, "blocks")
        if not blocks:
            raise BadParams("concat needs at least one block")
        return concat(*(make_block(ctx, b) for b in blocks))
    raise BadParams(f"unknown lattice kind {kind}")


def hyperbolic_lattice(ctx: FieldContext, k: int, *tail: BongLattice) -> BongLattice:
    """H^k ⊥ tail."""
    parts = [_h(ctx)] * k + list(tail)
    if not parts:
        raise BadParams("empty lattice")
    return concat(*parts)
