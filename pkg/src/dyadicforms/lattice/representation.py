"""Representation of one integral lattice by another, read off good BONGs.

For N = ≺b_1, ..., b_n≻ and M = ≺a_1, ..., a_m≻ with S_i = ord b_i and
R_i = ord a_i, N is represented by M iff FN embeds in FM and

    (i)   for 1 <= i <= n:
              R_i <= S_i, or 1 < i < m and R_i + R_{i+1} <= S_{i-1} + S_i
    (ii)  for 1 <= i <= min(m-1, n):
              d[a_{1,i} b_{1,i}] >= A_i
    (iii) for 1 < i <= min(m-1, n+1), if R_{i+1} > S_{i-1} and
              d[-a_{1,i} b_{1,i-2}] + d[-a_{1,i+1} b_{1,i-1}] > 2e + S_{i-1} - R_{i+1}
          then [b_1, ..., b_{i-1}] embeds in [a_1, ..., a_i]
    (iv)  for 1 < i <= min(m-2, n+1), if S_i >= R_{i+2} (not required at
          i = n+1) and R_{i+2} > S_{i-1} + 2e >= R_{i+1} + 2e
          then [b_1, ..., b_{i-1}] embeds in [a_1, ..., a_{i+1}]

The conditions are evaluated in this order and the first failure is
returned as the witness.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Optional

from ..enums import Condition
from ..errors import FieldMismatch, RankError
from ..forms import space_represents
from .bong import BongLattice, big_a, d_bracket_pair

logger = logging.getLogger(__name__)

__all__ = ["RepVerdict", "represents", "essential_indices"]


@dataclass(frozen=True)
class RepVerdict:
    """Outcome of a representation query.

    Attributes:
        represented: True if N embeds in M
        condition: First failed condition, None when represented
        index: Index i at which it failed (None for the space condition)
        detail: Human-readable account of the failed inequality
    """

    represented: bool
    condition: Optional[Condition] = None
    index: Optional[int] = None
    detail: str = ""

    @property
    def witness(self) -> Optional[dict[str, Any]]:
        if self.represented:
            return None
        return {"condition": self.condition.value, "i": self.index}

    def __bool__(self) -> bool:
        return self.represented


_YES = RepVerdict(True)


def essential_indices(m_lat: BongLattice, n_lat: BongLattice) -> list[int]:
    """Indices 2 <= i <= min(m-1, n) with R_{i+1} > S_{i-1}."""
    R, S = m_lat.r, n_lat.r
    top = min(m_lat.rank - 1, n_lat.rank)
    return [i for i in range(2, top + 1) if R(i + 1) > S(i - 1)]


def _check_one(m_lat: BongLattice, n_lat: BongLattice) -> RepVerdict:
    R, S = m_lat.r, n_lat.r
    m = m_lat.rank
    for i in range(1, n_lat.rank + 1):
        if R(i) <= S(i):
            continue
        if 1 < i < m and R(i) + R(i + 1) <= S(i - 1) + S(i):
            continue
        return RepVerdict(False, Condition.ONE, i, f"R_{i}={R(i)} > S_{i}={S(i)}")
    return _YES


def _check_two(m_lat: BongLattice, n_lat: BongLattice, skip_inessential: bool) -> RepVerdict:
    top = min(m_lat.rank - 1, n_lat.rank)
    essential = set(essential_indices(m_lat, n_lat)) if skip_inessential else set()
    for i in range(1, top + 1):
        if skip_inessential and 2 <= i and i + 1 <= top and i not in essential and i + 1 not in essential:
            continue
        lhs = d_bracket_pair(m_lat, n_lat, 1, i, i)
        rhs = big_a(m_lat, n_lat, i)
        if lhs < rhs:
            return RepVerdict(False, Condition.TWO, i, f"d[a_(1,{i}) b_(1,{i})]={lhs} < A_{i}={rhs}")
    return _YES


def _check_three(m_lat: BongLattice, n_lat: BongLattice) -> RepVerdict:
    R, S = m_lat.r, n_lat.r
    e = m_lat.ctx.e
    top = min(m_lat.rank - 1, n_lat.rank + 1)
    for i in range(2, top + 1):
        if R(i + 1) <= S(i - 1):
            continue
        total = d_bracket_pair(m_lat, n_lat, -1, i, i - 2) + d_bracket_pair(m_lat, n_lat, -1, i + 1, i - 1)
        if total <= 2 * e + S(i - 1) - R(i + 1):
            continue
        if not space_represents(n_lat.prefix_space(i - 1), m_lat.prefix_space(i)):
            return RepVerdict(False, Condition.THREE, i, f"[b_1..b_{i - 1}] does not embed in [a_1..a_{i}]")
    return _YES


def _check_four(m_lat: BongLattice, n_lat: BongLattice) -> RepVerdict:
    R, S = m_lat.r, n_lat.r
    e = m_lat.ctx.e
    n = n_lat.rank
    top = min(m_lat.rank - 2, n + 1)
    for i in range(2, top + 1):
        if i != n + 1 and S(i) < R(i + 2):
            continue
        if not R(i + 2) > S(i - 1) + 2 * e >= R(i + 1) + 2 * e:
            continue
        if not space_represents(n_lat.prefix_space(i - 1), m_lat.prefix_space(i + 1)):
            return RepVerdict(False, Condition.FOUR, i, f"[b_1..b_{i - 1}] does not embed in [a_1..a_{i + 1}]")
    return _YES


def represents(n_lat: BongLattice, m_lat: BongLattice, skip_inessential: bool = False) -> RepVerdict:
    """Decide whether M represents N.

    Args:
        n_lat: The lattice to be represented, rank n
        m_lat: The target lattice, rank m >= n
        skip_inessential: Skip condition (ii) at i when neither i nor i+1 is
            an essential index; the verdict does not change

    Raises:
        RankError: n > m
        NotIntegral: either lattice has R_1 < 0
        FieldMismatch: the lattices live in different fields
    """
    if n_lat.rank > m_lat.rank:
        raise RankError(f"rank {n_lat.rank} lattice cannot embed in rank {m_lat.rank}")
    n_lat.require_integral()
    m_lat.require_integral()
    if n_lat.ctx is not m_lat.ctx:
        raise FieldMismatch("lattices belong to different fields")

    if not space_represents(n_lat.space, m_lat.space):
        verdict = RepVerdict(False, Condition.SPACE, None, f"FN {n_lat.space} does not embed in FM {m_lat.space}")
    else:
        verdict = _check_one(m_lat, n_lat)
        if verdict:
            verdict = _check_two(m_lat, n_lat, skip_inessential)
        if verdict:
            verdict = _check_three(m_lat, n_lat)
        if verdict:
            verdict = _check_four(m_lat, n_lat)
    logger.debug(f"represents S={n_lat.R} in R={m_lat.R}: {verdict.represented} {verdict.detail}")
    return verdict
