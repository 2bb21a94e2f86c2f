"""
Seeded random integral lattices for cross-validation.

Entries are a_i = delta_i * pi^{R_i} with delta_i a random unit class
representative. Increments R_{i+1} - R_i are drawn from [-2e, r_bound], with a
share of them forced onto the values where the universality clauses change
(-2e, 2-2e, 1, 2e, 2e+1). A candidate that breaks a good-BONG inequality is
redrawn; after enough failures the entry falls back to
R_i = max(R_{i-1}, R_{i-2}), which always extends a good BONG.
"""

from __future__ import annotations

import logging
import random
from typing import TYPE_CHECKING

from ..constants import SAMPLER_ATTEMPTS_PER_ENTRY, SAMPLER_BOUNDARY_BIAS
from ..errors import BadParams
from ..field import FieldElement, unit_class_reps
from ..lattice import BongLattice, bong_violations, validate_bong

if TYPE_CHECKING:
    from ..field import FieldContext

logger = logging.getLogger(__name__)

__all__ = ["sample_lattice", "boundary_increments"]


def boundary_increments(e: int) -> tuple[int, ...]:
    return (-2 * e, 2 - 2 * e, 1, 2 * e, 2 * e + 1)


def _draw_increment(rng: random.Random, e: int, r_bound: int) -> int:
    if rng.random() < SAMPLER_BOUNDARY_BIAS:
        return rng.choice(boundary_increments(e))
    return rng.randint(-2 * e, r_bound)


def _hyperbolic_pairs(ctx: FieldContext, rng: random.Random, k: int) -> list[FieldElement]:
    """k pairs ≺δ, -δμπ^{-2e}≻ with μ in {1, Δ}."""
    units = unit_class_reps(ctx)
    entries = []
    for _ in range(k):
        delta = rng.choice(units).rep
        mu = rng.choice((ctx.one, ctx.delta))
        entries.extend([delta, -delta * mu * ctx.pi ** (-2 * ctx.e)])
    return entries


def sample_lattice(
    ctx: FieldContext,
    m: int,
    r_bound: int,
    seed: int,
    hyperbolic_prefix: int = 0,
) -> BongLattice:
    """Draw an integral lattice of rank m, deterministic in ``seed``.

    Args:
        ctx: Field
        m: Rank, at least 1
        r_bound: Largest R_1 and largest increment; at least 2e
        seed: Random seed
        hyperbolic_prefix: Number of leading hyperbolic-type pairs

    Raises:
        BadParams: m < 1, r_bound < 2e or the prefix does not fit in rank m
    """
    e = ctx.e
    if m < 1:
        raise BadParams(f"rank must be at least 1, got {m}")
    if r_bound < 2 * e:
        raise BadParams(f"r_bound must be at least 2e = {2 * e}, got {r_bound}")
    if not 0 <= 2 * hyperbolic_prefix <= m:
        raise BadParams(f"{hyperbolic_prefix} hyperbolic pairs do not fit in rank {m}")

    rng = random.Random(seed)
    units = unit_class_reps(ctx)
    entries = _hyperbolic_pairs(ctx, rng, hyperbolic_prefix)
    R = [int(x.val) for x in entries]
    if not entries:
        first = rng.choice(units).rep * ctx.pi ** rng.randint(0, r_bound)
        entries.append(first)
        R.append(int(first.val))

    while len(entries) < m:
        for _ in range(SAMPLER_ATTEMPTS_PER_ENTRY):
            r = R[-1] + _draw_increment(rng, e, r_bound)
            candidate = rng.choice(units).rep * ctx.pi**r
            if not bong_violations(entries[-2:] + [candidate]):
                break
        else:
            r = max(R[-2:])
            candidate = rng.choice(units).rep * ctx.pi**r
            logger.debug(f"sampler seed={seed}: falling back to R_{len(entries) + 1}={r}")
        entries.append(candidate)
        R.append(r)

    return validate_bong(entries)
