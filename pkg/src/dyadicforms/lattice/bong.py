"""Lattices given by a good BONG (basis of norm generators).

A lattice enters the library as the sequence a_1, ..., a_m of Q-values of a
good BONG. The invariants read off that sequence are

    R_i      = ord(a_i)
    alpha_i  = min(T_0, ..., T_{m-1}) with
               T_0 = (R_{i+1} - R_i)/2 + e
               T_j = R_{i+1} - R_j + d(-a_j a_{j+1})    (j <= i)
               T_j = R_{j+1} - R_i + d(-a_j a_{j+1})    (j >= i)
    d[c a_{i,j}]           = min(d(c a_i...a_j), alpha_{i-1}, alpha_j)
    d[c a_{1,i} b_{1,j}]   = min(d(c a_1...a_i b_1...b_j), alpha_i, beta_j)

with the boundary alphas alpha_0 and alpha_m ignored (encoded as infinity).
Every alpha_i is also checked against the short form

    alpha_i = min((R_{i+1} - R_i)/2 + e, R_{i+1} - R_i + d[-a_{i,i+1}])

and a disagreement raises AlphaInconsistency.

Indices in the public API are 1-based to match the usual notation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import TYPE_CHECKING, Iterable, Sequence, Union

from ..constants import INFINITY
from ..errors import AlphaInconsistency, FieldMismatch, NotAGoodBong, NotIntegral
from ..field import FieldElement, SquareClass, as_class, class_of_coords, class_table, square_class_of
from ..forms import SpaceInv, space_of_diagonal

if TYPE_CHECKING:
    from ..field import FieldContext

logger = logging.getLogger(__name__)

__all__ = [
    "BongLattice",
    "BongViolation",
    "Value",
    "bong_violations",
    "validate_bong",
    "alpha",
    "d_bracket",
    "d_bracket_pair",
    "big_a",
    "concat",
    "space_of",
]

# alpha values are Fractions, d values ints or math.inf
Value = Union[int, Fraction, float]
Scalar = Union[FieldElement, SquareClass, int]

GOOD_ORDER = "R_i <= R_{i+2}"
DEFECT_STEP = "R_{i+1}-R_i+d(-a_i a_{i+1}) >= 0"
MIN_STEP = "R_{i+1}-R_i >= -2e"


@dataclass(frozen=True)
class BongViolation:
    """One failed good-BONG inequality (1-based index)."""

    index: int
    which: str
    detail: str


@dataclass(frozen=True, eq=False)
class BongLattice:
    """A validated good BONG a_1, ..., a_m with its invariants.

    Attributes:
        ctx: Field the entries live in
        a: The BONG entries
        classes: Square class of each entry
        R: ord(a_i), stored 0-based
        alpha: alpha_1 .. alpha_{m-1}, stored 0-based, exact
        label: Jordan-style description, empty for literal BONGs
    """

    ctx: FieldContext = field(repr=False)
    a: tuple[FieldElement, ...] = field(repr=False)
    classes: tuple[SquareClass, ...] = field(repr=False)
    R: tuple[int, ...]
    alpha: tuple[Fraction, ...]
    label: str = ""

    @property
    def rank(self) -> int:
        return len(self.a)

    @property
    def is_integral(self) -> bool:
        return self.R[0] >= 0

    def r(self, i: int) -> int:
        """R_i, 1-based."""
        if not 1 <= i <= self.rank:
            raise IndexError(f"R_{i} outside 1..{self.rank}")
        return self.R[i - 1]

    def alpha_at(self, i: int) -> Value:
        """alpha_i for 1 <= i <= m-1; infinity at the ignored ends 0 and m."""
        if i == 0 or i == self.rank:
            return INFINITY
        if not 0 < i < self.rank:
            raise IndexError(f"alpha_{i} outside 0..{self.rank}")
        return self.alpha[i - 1]

    @cached_property
    def _prefix_coords(self) -> tuple[int, ...]:
        coords = [0]
        for c in self.classes:
            coords.append(coords[-1] ^ c.coords)
        return tuple(coords)

    def product_coords(self, i: int, j: int) -> int:
        """Class coordinates of a_i ... a_j (1 for j = i - 1)."""
        if not 0 <= i - 1 <= j <= self.rank:
            raise IndexError(f"a_{{{i},{j}}} outside 1..{self.rank}")
        return self._prefix_coords[j] ^ self._prefix_coords[i - 1]

    def pair_defect(self, j: int) -> Value:
        """d(-a_j a_{j+1})."""
        minus_one = class_table(self.ctx).minus_one
        return class_of_coords(self.ctx, minus_one.coords ^ self.product_coords(j, j + 1)).dval

    @cached_property
    def space(self) -> SpaceInv:
        return space_of_diagonal(self.classes, self.ctx)

    def prefix_space(self, k: int) -> SpaceInv:
        """Invariants of [a_1, ..., a_k]."""
        if not 0 <= k <= self.rank:
            raise IndexError(f"prefix of length {k} outside 0..{self.rank}")
        return space_of_diagonal(self.classes[:k], self.ctx)

    def require_integral(self) -> None:
        if not self.is_integral:
            raise NotIntegral(f"R_1 = {self.R[0]} < 0")

    def __str__(self) -> str:
        body = ", ".join(str(x) for x in self.a)
        return f"≺{body}≻"


# =============================================================================
# Validation
# =============================================================================


def bong_violations(a: Sequence[FieldElement]) -> list[BongViolation]:
    """Every good-BONG inequality the sequence fails, in index order."""
    if not a:
        return []
    ctx = a[0].ctx
    e = ctx.e
    classes = [square_class_of(x) for x in a]
    R = [int(x.val) for x in a]
    minus_one = class_table(ctx).minus_one
    found: list[BongViolation] = []
    for i in range(len(a) - 1):
        step = R[i + 1] - R[i]
        d = class_of_coords(ctx, minus_one.coords ^ classes[i].coords ^ classes[i + 1].coords).dval
        if step + d < 0:
            found.append(BongViolation(i + 1, DEFECT_STEP, f"{step} + {d} < 0"))
        if step < -2 * e:
            found.append(BongViolation(i + 1, MIN_STEP, f"{step} < {-2 * e}"))
        if i + 2 < len(a) and R[i] > R[i + 2]:
            found.append(BongViolation(i + 1, GOOD_ORDER, f"{R[i]} > {R[i + 2]}"))
    return found


def _alpha_by_minimum(R: Sequence[int], pair_d: Sequence[Value], e: int, i: int) -> Fraction:
    """alpha_i as the minimum over T_0 .. T_{m-1} (0-based i)."""
    m = len(R)
    best: Value = Fraction(R[i + 1] - R[i], 2) + e
    for j in range(m - 1):
        if j <= i:
            best = min(best, R[i + 1] - R[j] + pair_d[j])
        if j >= i:
            best = min(best, R[j + 1] - R[i] + pair_d[j])
    return Fraction(best)


def _alpha_short_form(
    R: Sequence[int], pair_d: Sequence[Value], alphas: Sequence[Fraction], e: int, i: int
) -> Fraction:
    """alpha_i from its neighbours via d[-a_{i,i+1}] (0-based i)."""
    m = len(R)
    bracket: Value = pair_d[i]
    if i >= 1:
        bracket = min(bracket, alphas[i - 1])
    if i + 2 <= m - 1:
        bracket = min(bracket, alphas[i + 1])
    step = R[i + 1] - R[i]
    return Fraction(min(Fraction(step, 2) + e, step + bracket))


def validate_bong(a: Iterable[FieldElement], label: str = "") -> BongLattice:
    """Check the good-BONG inequalities and compute R and alpha.

    Raises:
        NotAGoodBong: first violated inequality
        PrecisionLoss: an entry carries fewer than 2e+1 digits
        AlphaInconsistency: the two alpha formulas disagree
    """
    entries = tuple(a)
    if not entries:
        raise NotAGoodBong(0, "nonempty", "a BONG has at least one entry")
    ctx = entries[0].ctx
    for x in entries:
        if x.ctx is not ctx:
            raise FieldMismatch("BONG entries belong to different fields")
        if x.is_zero:
            raise NotAGoodBong(0, "a_i != 0", "zero entry")
    violations = bong_violations(entries)
    if violations:
        first = violations[0]
        raise NotAGoodBong(first.index, first.which, first.detail)

    e = ctx.e
    classes = tuple(square_class_of(x) for x in entries)
    R = tuple(int(x.val) for x in entries)
    minus_one = class_table(ctx).minus_one
    pair_d = [
        class_of_coords(ctx, minus_one.coords ^ classes[j].coords ^ classes[j + 1].coords).dval
        for j in range(len(entries) - 1)
    ]
    alphas = [_alpha_by_minimum(R, pair_d, e, i) for i in range(len(entries) - 1)]
    for i, value in enumerate(alphas):
        short = _alpha_short_form(R, pair_d, alphas, e, i)
        if short != value:
            raise AlphaInconsistency(
                f"alpha_{i + 1}: minimum over T_j gives {value}, short form gives {short} (R={R})"
            )
    logger.debug(f"validated BONG R={R} alpha={[str(x) for x in alphas]}")
    return BongLattice(ctx, entries, classes, R, tuple(alphas), label)


# =============================================================================
# Invariants
# =============================================================================


def alpha(lattice: BongLattice, i: int) -> Fraction:
    """alpha_i, 1 <= i <= m-1."""
    if not 1 <= i <= lattice.rank - 1:
        raise IndexError(f"alpha_{i} outside 1..{lattice.rank - 1}")
    return lattice.alpha[i - 1]


def d_bracket(lattice: BongLattice, c: Scalar, i: int, j: int) -> Value:
    """d[c a_{i,j}] = min(d(c a_i...a_j), alpha_{i-1}, alpha_j)."""
    ctx = lattice.ctx
    coords = as_class(c, ctx).coords ^ lattice.product_coords(i, j)
    d = class_of_coords(ctx, coords).dval
    return min(d, lattice.alpha_at(i - 1), lattice.alpha_at(j))


def d_bracket_pair(m_lat: BongLattice, n_lat: BongLattice, c: Scalar, i: int, j: int) -> Value:
    """d[c a_{1,i} b_{1,j}] = min(d(c a_{1,i} b_{1,j}), alpha_i, beta_j)."""
    if m_lat.ctx is not n_lat.ctx:
        raise FieldMismatch("lattices belong to different fields")
    if not 0 <= i <= m_lat.rank or not 0 <= j <= n_lat.rank:
        raise IndexError(f"d[a_{{1,{i}}} b_{{1,{j}}}] out of range")
    ctx = m_lat.ctx
    coords = as_class(c, ctx).coords ^ m_lat.product_coords(1, i) ^ n_lat.product_coords(1, j)
    d = class_of_coords(ctx, coords).dval
    return min(d, m_lat.alpha_at(i), n_lat.alpha_at(j))


def big_a(m_lat: BongLattice, n_lat: BongLattice, i: int) -> Value:
    """A_i(M, N) for 1 <= i <= min(m-1, n).

    The third term is dropped when i = 1 or i = m-1.
    """
    m, n = m_lat.rank, n_lat.rank
    if not 1 <= i <= min(m - 1, n):
        raise IndexError(f"A_{i} outside 1..{min(m - 1, n)}")
    e = m_lat.ctx.e
    R, S = m_lat.r, n_lat.r
    gap = R(i + 1) - S(i)
    terms: list[Value] = [
        Fraction(gap, 2) + e,
        gap + d_bracket_pair(m_lat, n_lat, -1, i + 1, i - 1),
    ]
    if i != 1 and i != m - 1:
        terms.append(
            R(i + 1) + R(i + 2) - S(i - 1) - S(i) + d_bracket_pair(m_lat, n_lat, 1, i + 2, i - 2)
        )
    return min(terms)


# =============================================================================
# Composition
# =============================================================================


def _join_labels(lattices: Sequence[BongLattice]) -> str:
    """Join block labels with ⊥, collapsing runs of H into H^k."""
    parts: list[str] = []
    run = 0
    for lat in lattices:
        if lat.label == "H":
            run += 1
            continue
        if run:
            parts.append(f"H^{run}")
            run = 0
        parts.append(lat.label or str(lat))
    if run:
        parts.append(f"H^{run}")
    return " ⊥ ".join(parts)


def concat(*lattices: BongLattice) -> BongLattice:
    """Orthogonal sum by juxtaposing BONGs; the result is re-validated.

    Raises:
        NotAGoodBong: the juxtaposed sequence is not a good BONG
    """
    if not lattices:
        raise ValueError("concat needs at least one lattice")
    entries: list[FieldElement] = []
    for lat in lattices:
        entries.extend(lat.a)
    return validate_bong(entries, _join_labels(lattices))


def space_of(lattice: BongLattice) -> SpaceInv:
    """FL = [a_1, ..., a_m]; BONG vectors are pairwise orthogonal."""
    return lattice.space
