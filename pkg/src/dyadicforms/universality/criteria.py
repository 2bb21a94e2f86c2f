"""n-universality of integral lattices from good-BONG invariants.

Every decider takes M = ≺a_1, ..., a_m≻ and n, and returns the clause that
fails (None when M is n-universal). Writing R_i = ord a_i, alpha_i for the
alpha invariants, [h, k]^E for the even integers in [h, k] and
d_j = d(-a_j a_{j+1}):

    thm11   the clause tree valid for every n: the quaternary branch
            m = n+2 = 4, FM = H^2, R = (0, -2e, 0, -2e), or m >= n+3 with
            the R pattern on [1, n] and the parity-specific clauses
    even41  FM n-universal, I1E (R pattern on [1, n+1]), I2E
            (alpha_{n+1} = 0, or alpha_{n+1} = 1 and d[-a_{n+1,n+2}] = 1 - R_{n+2})
            and I3E (the jump R_{n+3} - R_{n+2} > 2e forces R_{n+2} = -2e)
    even47  the concise even form with alpha_{n+1} <= 1
    odd51   I1O/I2O/I3O with G_n = 2(e - floor((R_{n+2} - R_{n+1})/2)) - 1
    odd53   the same conditions split on alpha_n in {0, 1}

All formulations agree; crosscheck samples lattices to confirm it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Optional

from ..enums import Method
from ..errors import BadParams, ParityMismatch, RankError
from ..field import class_of_coords
from ..forms import hyperbolic_space, is_isometric, space_is_n_universal
from ..lattice import BongLattice, d_bracket, represents
from .testing_set import testing_set

logger = logging.getLogger(__name__)

__all__ = [
    "UniversalityVerdict",
    "thm11",
    "even41",
    "even47",
    "odd51",
    "odd53",
    "testing_set_check",
    "is_n_universal",
    "quaternary_2universal",
    "universal_ranks",
]

Clause = Optional[str]


@dataclass(frozen=True)
class UniversalityVerdict:
    """Answer to "is M n-universal?".

    Attributes:
        universal: True if M represents every integral lattice of rank n
        method: Decision procedure that produced the answer
        witness: Failed clause, or the testing-set member M misses
    """

    universal: bool
    method: Method
    witness: Optional[str] = None

    def __bool__(self) -> bool:
        return self.universal


def _even_in(x: int, lo: int, hi: int) -> bool:
    return x % 2 == 0 and lo <= x <= hi


def _product_defect(lattice: BongLattice, i: int, j: int):
    """d(a_i ... a_j)."""
    return class_of_coords(lattice.ctx, lattice.product_coords(i, j)).dval


def _r_pattern(lattice: BongLattice, top: int) -> bool:
    """R_i = 0 for odd i <= top and R_i = -2e for even i <= top."""
    e = lattice.ctx.e
    return all(lattice.r(i) == (0 if i % 2 else -2 * e) for i in range(1, top + 1))


def _is_h2(lattice: BongLattice) -> bool:
    return is_isometric(lattice.space, hyperbolic_space(lattice.ctx, 2))


# =============================================================================
# Clause tree valid for all n
# =============================================================================


def _thm11_even(M: BongLattice, n: int) -> Clause:
    e, m, R = M.ctx.e, M.rank, M.r
    if R(n + 1) != 0:
        return "(ii): R_{n+1} = 0"
    r2, r3 = R(n + 2), R(n + 3)
    if not (_even_in(r2, -2 * e, 0) or r2 == 1):
        return "(ii)(1): R_{n+2} in [-2e,0]^E or {1}"
    if _even_in(r2, 2 - 2 * e, 0):
        if r2 == 2 - 2 * e:
            if not (M.pair_defect(n + 1) == 2 * e - 1 or r3 in (0, 1)):
                return "(ii)(1)(a): d(-a_{n+1}a_{n+2}) = 2e-1 or R_{n+3} in {0,1}"
        elif not any(M.pair_defect(j) == 1 - R(j + 1) for j in range(n + 1, m)):
            return "(ii)(1)(b): d(-a_j a_{j+1}) = 1-R_{j+1} for some n+1 <= j <= m-1"
    if r3 - r2 > 2 * e:
        if r2 != -2 * e:
            return "(ii)(2): R_{n+3}-R_{n+2} > 2e forces R_{n+2} = -2e"
        if (n >= 4 or (n == 2 and _product_defect(M, 1, 4) == 2 * e)) and r3 != 1:
            return "(ii)(2): R_{n+3} = 1"
    return None


def _thm11_odd(M: BongLattice, n: int) -> Clause:
    e, m, R = M.ctx.e, M.rank, M.r
    r1, r2, r3 = R(n + 1), R(n + 2), R(n + 3)
    if not (_even_in(r1, -2 * e, 0) or r1 == 1):
        return "(iii)(1): R_{n+1} in [-2e,0]^E or {1}"
    if _even_in(r1, 4 - 2 * e, 0) and not any(M.pair_defect(j) == 1 - R(j + 1) for j in range(n, m)):
        return "(iii)(1): d(-a_j a_{j+1}) = 1-R_{j+1} for some n <= j <= m-1"
    if r1 == 1 or (r1 != -2 * e and r2 > 1):
        slack = -1 if (r2 - r1) % 2 == 0 else 0
        ok = r3 + r2 - 2 * r1 <= 2 * e + 2 * slack or any(
            M.pair_defect(j) <= 2 * e + r1 - R(j + 1) + slack for j in range(n + 2, m)
        )
        if not ok:
            return "(iii)(2)(a)" if slack else "(iii)(2)(b)"
    if r1 == -2 * e and r2 not in (0, 1):
        return "(iii)(3): R_{n+2} in {0,1}"
    if r3 - r2 > 2 * e:
        return "(iii)(4): R_{n+3}-R_{n+2} <= 2e"
    return None


def thm11(M: BongLattice, n: int) -> Clause:
    e, m, R = M.ctx.e, M.rank, M.r
    if m == n + 2 == 4:
        if not _is_h2(M):
            return "FM = H^2"
        if not (R(1) == R(3) == R(2) + 2 * e == R(4) + 2 * e == 0):
            return "R_1 = R_3 = R_2+2e = R_4+2e = 0"
        return None
    if m < n + 3:
        return "m >= n+3"
    if not _r_pattern(M, n):
        return "(i): R pattern on [1,n]"
    return _thm11_even(M, n) if n % 2 == 0 else _thm11_odd(M, n)


# =============================================================================
# Even n
# =============================================================================


def _i3e(M: BongLattice, n: int) -> bool:
    e, R = M.ctx.e, M.r
    if M.rank < n + 3 or R(n + 3) - R(n + 2) <= 2 * e:
        return True
    if R(n + 2) != -2 * e:
        return False
    if n >= 4 or (n == 2 and _product_defect(M, 1, 4) == 2 * e):
        return R(n + 3) == 1
    return True


def even41(M: BongLattice, n: int) -> Clause:
    if not space_is_n_universal(M.space, n):
        return "FM n-universal"
    if not _r_pattern(M, n + 1):
        return "I1E"
    a = M.alpha_at(n + 1)
    if not (a == 0 or (a == 1 and d_bracket(M, -1, n + 1, n + 2) == 1 - M.r(n + 2))):
        return "I2E"
    if not _i3e(M, n):
        return "I3E"
    return None


def even47(M: BongLattice, n: int) -> Clause:
    e, m, R = M.ctx.e, M.rank, M.r
    if not (m >= n + 3 or m == n + 2 == 4):
        return "m >= n+3 or m = n+2 = 4"
    if not _r_pattern(M, n + 1):
        return "(i)"
    if m == n + 2:
        if not (_is_h2(M) and R(4) == -2 * e):
            return "(ii): FM = H^2 and R_4 = -2e"
        return None
    if M.alpha_at(n + 1) > 1:
        return "(iii)(1): alpha_{n+1} <= 1"
    if not _i3e(M, n):
        return "(iii)(2)"
    if R(n + 3) - R(n + 2) == 2 * e and R(n + 2) == 2 - 2 * e and M.pair_defect(n + 1) != 2 * e - 1:
        return "(iii)(3): d(-a_{n+1}a_{n+2}) = 2e-1"
    return None


# =============================================================================
# Odd n
# =============================================================================


def _g(M: BongLattice, n: int) -> int:
    return 2 * (M.ctx.e - (M.r(n + 2) - M.r(n + 1)) // 2) - 1


def _alpha_n2_bound(M: BongLattice, n: int) -> bool:
    """If R_{n+1} = 1 or R_{n+2} > 1, then alpha_{n+2} <= G_n."""
    if M.r(n + 1) == 1 or M.r(n + 2) > 1:
        return M.alpha_at(n + 2) <= _g(M, n)
    return True


def odd51(M: BongLattice, n: int) -> Clause:
    e = M.ctx.e
    if M.rank < n + 3:
        return "m >= n+3"
    a = M.alpha_at(n)
    if not _r_pattern(M, n) or a not in (0, 1):
        return "I1O"
    if a == 0 and M.r(n + 2) not in (0, 1):
        return "I2O: R_{n+2} in {0,1}"
    if a == 1 and not _alpha_n2_bound(M, n):
        return "I2O: alpha_{n+2} <= G_n"
    if M.r(n + 3) - M.r(n + 2) > 2 * e:
        return "I3O"
    return None


def odd53(M: BongLattice, n: int) -> Clause:
    e = M.ctx.e
    if M.rank < n + 3:
        return "m >= n+3"
    if not _r_pattern(M, n):
        return "R pattern on [1,n]"
    if M.r(n + 3) - M.r(n + 2) > 2 * e:
        return "R_{n+3}-R_{n+2} <= 2e"
    a = M.alpha_at(n)
    if a == 0 and M.r(n + 2) <= 1:
        return None
    if a == 1 and _alpha_n2_bound(M, n):
        return None
    return "(i) or (ii)"


# =============================================================================
# Oracle
# =============================================================================


def testing_set_check(M: BongLattice, n: int) -> Clause:
    """First member of the minimal testing set that M does not represent."""
    if M.rank < n:
        return "m >= n"
    for entry in testing_set(M.ctx, n):
        verdict = represents(entry.lattice, M)
        if not verdict:
            return f"{entry.name} not represented: ({verdict.condition.value}) at i={verdict.index}"
    return None


_DECIDERS: dict[Method, Callable[[BongLattice, int], Clause]] = {
    Method.THM11: thm11,
    Method.EVEN41: even41,
    Method.EVEN47: even47,
    Method.ODD51: odd51,
    Method.ODD53: odd53,
    Method.TESTING_SET: testing_set_check,
}


def is_n_universal(M: BongLattice, n: int, method: Method = Method.THM11) -> UniversalityVerdict:
    """Decide whether M represents every integral lattice of rank n.

    Raises:
        BadParams: n < 2
        ParityMismatch: an even-only method asked about odd n, or vice versa
        NotIntegral: R_1 < 0
    """
    if n < 2:
        raise BadParams(f"n must be at least 2, got {n}")
    if method.parity is not None and method.parity != n % 2:
        raise ParityMismatch(f"{method.value} does not apply to n={n}")
    M.require_integral()
    clause = _DECIDERS[method](M, n)
    logger.debug(f"{method.value} n={n} R={M.R}: {'universal' if clause is None else clause}")
    return UniversalityVerdict(clause is None, method, clause)


def quaternary_2universal(M: BongLattice) -> UniversalityVerdict:
    """A rank 4 lattice is 2-universal iff FM = H^2 and R = (0, -2e, 0, -2e).

    Raises:
        RankError: rank is not 4
    """
    if M.rank != 4:
        raise RankError(f"quaternary check needs rank 4, got {M.rank}")
    M.require_integral()
    e = M.ctx.e
    if not _is_h2(M):
        return UniversalityVerdict(False, Method.THM11, "FM = H^2")
    if M.R != (0, -2 * e, 0, -2 * e):
        return UniversalityVerdict(False, Method.THM11, "R = (0, -2e, 0, -2e)")
    return UniversalityVerdict(True, Method.THM11)


def universal_ranks(M: BongLattice, method: Method = Method.THM11) -> list[int]:
    """Every n in [2, m-2] for which M is n-universal."""
    return [
        n
        for n in range(2, M.rank - 1)
        if (method.parity is None or method.parity == n % 2) and is_n_universal(M, n, method).universal
    ]
