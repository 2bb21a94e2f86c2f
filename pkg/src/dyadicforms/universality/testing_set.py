"""The minimal testing set for n-universality.

The O_F-maximal lattices N_nu^n(c) on the n-dimensional spaces W_nu^n(c),
one for each isometry class, written as good BONGs. With H^k the
hyperbolic part, for even n (k = (n-2)/2):

    N_1(1)      H^{n/2}
    N_2(1)      H^{k-1} ⊥ 2^{-1}A(2,2ρ) ⊥ 2^{-1}πA(2,2ρ)      (n >= 4)
    N_1(Δ)      H^k ⊥ 2^{-1}A(2,2ρ)
    N_2(Δ)      H^k ⊥ 2^{-1}πA(2,2ρ)
    N_1(δ)      H^k ⊥ ≺1, -δπ^{1-d(δ)}≻                        δ ∈ U \\ {1, Δ}
    N_2(δ)      H^k ⊥ ≺δ♯, -δ♯δπ^{1-d(δ)}≻
    N_1(δπ)     H^k ⊥ ⟨1, -δπ⟩                                  δ ∈ U
    N_2(δπ)     H^k ⊥ ⟨Δ, -Δδπ⟩

and for odd n (k = (n-1)/2):

    N_1(δ)      H^k ⊥ ⟨δ⟩
    N_2(δ)      H^{k-1} ⊥ 2^{-1}πA(2,2ρ) ⊥ ⟨Δδ⟩
    N_1(δπ)     H^k ⊥ ⟨δπ⟩
    N_2(δπ)     H^{k-1} ⊥ 2^{-1}A(2,2ρ) ⊥ ⟨Δδπ⟩

A lattice is n-universal iff it represents all of them, and no member can
be dropped: the maximal lattice on W_{3-nu}^{n+2}(c) represents every member
except N_nu^n(c).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from ..enums import LatticeKind
from ..errors import BadParams
from ..field import SquareClass, class_table, unit_class_reps
from ..lattice import BongLattice, LatticeDescriptor, hyperbolic_lattice, make_block, represents

if TYPE_CHECKING:
    from ..field import FieldContext

logger = logging.getLogger(__name__)

__all__ = [
    "TestingSetEntry",
    "RepresentationMatrix",
    "testing_set",
    "representation_matrix",
    "minimality_check",
]


@dataclass(frozen=True)
class TestingSetEntry:
    """One member N_nu^n(c) of the testing set.

    Attributes:
        n: Rank
        nu: 1 or 2, which of the two spaces of determinant class c
        c: Square class indexing the space
        lattice: Good BONG of the maximal lattice
        jordan_text: Human-readable Jordan-style description
    """

    __test__ = False  # keep pytest from collecting this class

    n: int
    nu: int
    c: SquareClass
    lattice: BongLattice
    jordan_text: str

    @property
    def key(self) -> tuple[int, int]:
        return self.nu, self.c.index

    @property
    def name(self) -> str:
        return f"N_{self.nu}^{self.n}({self.c.label})"


def _block(ctx: FieldContext, kind: LatticeKind, **params) -> BongLattice:
    return make_block(ctx, LatticeDescriptor(kind, params))


def _entry(n: int, nu: int, c: SquareClass, lattice: BongLattice) -> TestingSetEntry:
    return TestingSetEntry(n, nu, c, lattice, lattice.label)


def _even_entries(ctx: FieldContext, n: int) -> list[TestingSetEntry]:
    table = class_table(ctx)
    k = (n - 2) // 2
    a22 = _block(ctx, LatticeKind.A22RHO)
    pi_a22 = _block(ctx, LatticeKind.PI_A22RHO)
    entries = [_entry(n, 1, table.one, hyperbolic_lattice(ctx, k + 1))]
    if n >= 4:
        entries.append(_entry(n, 2, table.one, hyperbolic_lattice(ctx, k - 1, a22, pi_a22)))
    entries.append(_entry(n, 1, table.delta, hyperbolic_lattice(ctx, k, a22)))
    entries.append(_entry(n, 2, table.delta, hyperbolic_lattice(ctx, k, pi_a22)))
    for c in unit_class_reps(ctx):
        if c == table.one or c == table.delta:
            continue
        for nu in (1, 2):
            block = _block(ctx, LatticeKind.DEFECT_BINARY, delta=c.rep, nu=nu)
            entries.append(_entry(n, nu, c, hyperbolic_lattice(ctx, k, block)))
    for delta in unit_class_reps(ctx):
        c = delta * table.pi
        first = _block(ctx, LatticeKind.BINARY_DIAG, a=ctx.one, b=-(delta.rep * ctx.pi))
        second = _block(ctx, LatticeKind.BINARY_DIAG, a=ctx.delta, b=-(ctx.delta * delta.rep * ctx.pi))
        entries.append(_entry(n, 1, c, hyperbolic_lattice(ctx, k, first)))
        entries.append(_entry(n, 2, c, hyperbolic_lattice(ctx, k, second)))
    return entries


def _odd_entries(ctx: FieldContext, n: int) -> list[TestingSetEntry]:
    table = class_table(ctx)
    k = (n - 1) // 2
    a22 = _block(ctx, LatticeKind.A22RHO)
    entries = []
    for delta in unit_class_reps(ctx):
        unary = _block(ctx, LatticeKind.UNARY, a=delta.rep)
        ternary = _block(ctx, LatticeKind.TERNARY_KAPPA, delta=delta.rep)
        entries.append(_entry(n, 1, delta, hyperbolic_lattice(ctx, k, unary)))
        entries.append(_entry(n, 2, delta, hyperbolic_lattice(ctx, k - 1, ternary)))
    for delta in unit_class_reps(ctx):
        c = delta * table.pi
        unary = _block(ctx, LatticeKind.UNARY, a=c.rep)
        twisted = _block(ctx, LatticeKind.UNARY, a=ctx.delta * c.rep)
        entries.append(_entry(n, 1, c, hyperbolic_lattice(ctx, k, unary)))
        entries.append(_entry(n, 2, c, hyperbolic_lattice(ctx, k - 1, a22, twisted)))
    return entries


def testing_set(ctx: FieldContext, n: int) -> list[TestingSetEntry]:
    """The minimal testing set for n-universality over ``ctx``.

    Has 2^{ef+3} members, one fewer for n = 2 where W_2^2(1) does not exist.

    Raises:
        BadParams: n < 2
    """
    if n < 2:
        raise BadParams(f"testing sets need n >= 2, got {n}")
    key = ("testing_set", n)
    cached = ctx.cache.get(key)
    if cached is None:
        with ctx.lock:
            cached = ctx.cache.get(key)
            if cached is None:
                entries = _even_entries(ctx, n) if n % 2 == 0 else _odd_entries(ctx, n)
                cached = tuple(entries)
                ctx.cache[key] = cached
                logger.info(f"testing set for n={n} built: {len(cached)} lattices")
    return list(cached)


# =============================================================================
# Minimality
# =============================================================================


@dataclass
class RepresentationMatrix:
    """Verdicts represents(N_j, M_i) for the testing set at rank n.

    Attributes:
        n: Rank of the testing set
        entries: Testing-set members N_j (columns)
        targets: M_i, the maximal lattice on W_{3-nu}^{n+2}(c) for row i
        values: values[i][j] is True iff M_i represents N_j
    """

    n: int
    entries: list[TestingSetEntry]
    targets: list[TestingSetEntry]
    values: list[list[bool]]

    def mismatches(self) -> list[tuple[int, int]]:
        """Cells that differ from the all-true-except-diagonal pattern."""
        size = len(self.entries)
        return [(i, j) for i in range(size) for j in range(size) if self.values[i][j] == (i == j)]


def representation_matrix(ctx: FieldContext, n: int) -> RepresentationMatrix:
    """Represent every member of the rank n testing set by every partner lattice."""
    entries = testing_set(ctx, n)
    by_key = {entry.key: entry for entry in testing_set(ctx, n + 2)}
    targets = [by_key[(3 - entry.nu, entry.c.index)] for entry in entries]
    values = [[represents(entry.lattice, target.lattice).represented for entry in entries] for target in targets]
    return RepresentationMatrix(n, entries, targets, values)


def minimality_check(ctx: FieldContext, n: int) -> bool:
    """True iff each partner lattice misses exactly its own testing-set member."""
    matrix = representation_matrix(ctx, n)
    bad = matrix.mismatches()
    for i, j in bad:
        logger.warning(
            f"{matrix.targets[i].name} -> {matrix.entries[j].name}: got {matrix.values[i][j]}"
        )
    return not bad
