"""Quadratic spaces over a dyadic field, up to isometry.

A nondegenerate space is determined by its dimension, determinant class and
Hasse symbol. The Hasse convention used throughout is

    s([a_1, ..., a_n]) = prod_{i<j} (a_i, a_j)

and is recorded in every JSON payload (see ``constants.HASSE_CONVENTION``).

Representation of spaces follows the codimension table:

    codim < 0   never
    codim 0     isometry
    codim 1     V = W + [det V det W]
    codim 2     always, unless det V det W = -1 and V is not W + H
    codim >= 3  always
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence, Union

from ..errors import BadParams, InternalFault, UndefinedSpace
from ..field import FieldElement, SquareClass, as_class, class_table, sharp
from .hilbert import hilbert_classes

if TYPE_CHECKING:
    from ..field import FieldContext

__all__ = [
    "SpaceInv",
    "hasse",
    "space_of_diagonal",
    "empty_space",
    "orthogonal_sum",
    "hyperbolic_space",
    "is_isometric",
    "is_isotropic",
    "space_represents",
    "w_space",
    "space_is_n_universal",
    "represented_w_index",
]

Entry = Union[FieldElement, SquareClass]


@dataclass(frozen=True)
class SpaceInv:
    """Complete isometry invariants of a quadratic space.

    Attributes:
        dim: Dimension
        det: Determinant square class
        hasse: prod_{i<j} (a_i, a_j) for any diagonalization, +1 or -1
    """

    dim: int
    det: SquareClass
    hasse: int

    @property
    def ctx(self) -> FieldContext:
        return self.det.rep.ctx

    def __add__(self, other: SpaceInv) -> SpaceInv:
        return orthogonal_sum(self, other)

    def __str__(self) -> str:
        return f"(dim={self.dim}, det={self.det.label}, hasse={self.hasse:+d})"


def _classes(diag: Sequence[Entry], ctx: FieldContext) -> list[SquareClass]:
    return [as_class(a, ctx) for a in diag]


def _context_of(diag: Sequence[Entry], ctx: FieldContext | None) -> FieldContext:
    if ctx is not None:
        return ctx
    if not diag:
        raise BadParams("empty diagonal needs an explicit field context")
    first = diag[0]
    return first.rep.ctx if isinstance(first, SquareClass) else first.ctx


def hasse(diag: Sequence[Entry], ctx: FieldContext | None = None) -> int:
    """prod_{i<j} (a_i, a_j); +1 for fewer than two entries."""
    if len(diag) < 2:
        return 1
    ctx = _context_of(diag, ctx)
    classes = _classes(diag, ctx)
    result = 1
    running = classes[0]
    for c in classes[1:]:
        result *= hilbert_classes(running, c)
        running = running * c
    return result


def space_of_diagonal(diag: Sequence[Entry], ctx: FieldContext | None = None) -> SpaceInv:
    """Invariants of [a_1, ..., a_n]."""
    ctx = _context_of(diag, ctx)
    classes = _classes(diag, ctx)
    det = class_table(ctx).one
    for c in classes:
        det = det * c
    return SpaceInv(len(classes), det, hasse(classes, ctx))


def empty_space(ctx: FieldContext) -> SpaceInv:
    return SpaceInv(0, class_table(ctx).one, 1)


def orthogonal_sum(v: SpaceInv, w: SpaceInv) -> SpaceInv:
    """V + W: hasse(V + W) = hasse(V) hasse(W) (det V, det W)."""
    h = v.hasse * w.hasse * hilbert_classes(v.det, w.det)
    return SpaceInv(v.dim + w.dim, v.det * w.det, h)


def hyperbolic_space(ctx: FieldContext, k: int = 1) -> SpaceInv:
    """H^k."""
    table = class_table(ctx)
    plane = space_of_diagonal([table.one, table.minus_one], ctx)
    result = empty_space(ctx)
    for _ in range(k):
        result = orthogonal_sum(result, plane)
    return result


def is_isometric(v: SpaceInv, w: SpaceInv) -> bool:
    return v.dim == w.dim and v.det == w.det and v.hasse == w.hasse


def is_isotropic(v: SpaceInv) -> bool:
    """Whether V has a nonzero isotropic vector."""
    ctx = v.ctx
    table = class_table(ctx)
    if v.dim >= 5:
        return True
    if v.dim == 4:
        if v.det != table.one:
            return True
        anisotropic = space_of_diagonal(
            [table.one, -table.delta.rep, table.pi, -table.delta.rep * ctx.pi], ctx
        )
        return v.hasse != anisotropic.hasse
    if v.dim == 3:
        minus_det = table.minus_one * v.det
        return is_isometric(v, hyperbolic_space(ctx) + space_of_diagonal([minus_det], ctx))
    if v.dim == 2:
        return v.det == table.minus_one
    return False


def space_represents(w: SpaceInv, v: SpaceInv) -> bool:
    """Whether W embeds isometrically in V."""
    ctx = v.ctx
    codim = v.dim - w.dim
    if codim < 0:
        return False
    if codim == 0:
        return is_isometric(w, v)
    ratio = v.det * w.det
    if codim == 1:
        return is_isometric(v, w + space_of_diagonal([ratio], ctx))
    if codim == 2:
        if ratio != class_table(ctx).minus_one:
            return True
        return is_isometric(v, w + hyperbolic_space(ctx))
    return True


# =============================================================================
# W_1^n(c), W_2^n(c)
# =============================================================================


def _w_tail(nu: int, n: int, c: SquareClass) -> tuple[int, list[Entry]]:
    """Number of hyperbolic planes and the anisotropic tail of W_nu^n(c)."""
    ctx = c.rep.ctx
    table = class_table(ctx)
    one, delta, pi = ctx.one, ctx.delta, ctx.pi
    if n % 2 == 0:
        if nu == 1:
            return (n - 2) // 2, [one, -c.rep]
        if c == table.one:
            if n == 2:
                raise UndefinedSpace("W_2^2(1) is not defined")
            return (n - 4) // 2, [one, -delta, pi, -delta * pi]
        if c == table.delta:
            return (n - 2) // 2, [pi, -delta * pi]
        if c.parity == 0:
            d_sharp = sharp(c.rep)
            return (n - 2) // 2, [d_sharp, -d_sharp * c.rep]
        return (n - 2) // 2, [delta, -delta * c.rep]
    if nu == 1:
        return (n - 1) // 2, [c.rep]
    if c.parity == 0:
        return (n - 3) // 2, [pi, -delta * pi, delta * c.rep]
    return (n - 3) // 2, [one, -delta, delta * c.rep]


def w_space(nu: int, n: int, c: SquareClass) -> SpaceInv:
    """Invariants of W_nu^n(c).

    W_1^n(c) is H^{(n-2)/2} + [1, -c] for even n and H^{(n-1)/2} + [c] for odd
    n; W_2^n(c) is the other n-dimensional space of the same determinant.

    Raises:
        UndefinedSpace: (nu, n, c) = (2, 2, 1)
        BadParams: nu outside {1, 2} or n < 2
    """
    if nu not in (1, 2):
        raise BadParams(f"nu must be 1 or 2, got {nu}")
    if n < 2:
        raise BadParams(f"W-spaces need n >= 2, got {n}")
    ctx = c.rep.ctx
    planes, tail = _w_tail(nu, n, c)
    return hyperbolic_space(ctx, planes) + space_of_diagonal(tail, ctx)


def space_is_n_universal(v: SpaceInv, n: int) -> bool:
    """V represents every n-dimensional space.

    True iff dim V >= n + 3, or n = 2 and V = H^2.
    """
    if v.dim >= n + 3:
        return True
    return n == 2 and is_isometric(v, hyperbolic_space(v.ctx, 2))


def represented_w_index(v: SpaceInv, n: int, c: SquareClass) -> int:
    """Which of W_1^n(c), W_2^n(c) the space V represents.

    V must have dimension n+1, or dimension n+2 with det V = -det W_1^n(c);
    exactly one of the two is then represented.

    Raises:
        BadParams: V has neither shape
        UndefinedSpace: W_2^n(c) does not exist
    """
    w1 = w_space(1, n, c)
    w2 = w_space(2, n, c)
    minus_one = class_table(v.ctx).minus_one
    if not (v.dim == n + 1 or (v.dim == n + 2 and v.det == minus_one * w1.det)):
        raise BadParams(f"dimension {v.dim} space does not split the pair W_1^{n}, W_2^{n}")
    first = space_represents(w1, v)
    second = space_represents(w2, v)
    if first == second:
        raise InternalFault("space represents both or neither of W_1, W_2")
    return 1 if first else 2
