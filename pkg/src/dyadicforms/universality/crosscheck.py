"""
Cross-validation of the n-universality deciders on sampled lattices.

Each sample is decided by thm11, by the even or odd reformulations matching
the parity of n and, unless disabled, by the testing-set oracle. Any sample on
which they disagree is reported with its full BONG.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Optional

from ..constants import CROSSCHECK_EXTRA_RANK, CROSSCHECK_R_BOUND_OFFSET, CROSSCHECK_R_BOUND_PER_E
from ..enums import Method
from ..errors import BadParams
from ..lattice import BongLattice
from .criteria import is_n_universal
from .sampling import sample_lattice

if TYPE_CHECKING:
    from ..field import FieldContext

logger = logging.getLogger(__name__)

__all__ = ["Disagreement", "CrosscheckReport", "crosscheck", "methods_for"]


@dataclass
class Disagreement:
    """A sample on which the deciders differ.

    Attributes:
        sample: Position of the sample in the run
        lattice: The sampled lattice
        verdicts: method value -> universal
        witnesses: method value -> failed clause (None when universal)
    """

    sample: int
    lattice: BongLattice
    verdicts: dict[str, bool]
    witnesses: dict[str, Optional[str]]


@dataclass
class CrosscheckReport:
    """Summary of a crosscheck run.

    Attributes:
        n: Rank being tested for universality
        seed: Seed of the run
        count: Number of samples drawn
        methods: Methods compared
        universal: Samples every method found n-universal
        not_universal: Samples every method rejected
        disagreements: Samples with differing verdicts
    """

    n: int
    seed: int
    count: int
    methods: list[Method]
    universal: int = 0
    not_universal: int = 0
    disagreements: list[Disagreement] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements


def methods_for(n: int, oracle: bool = True) -> list[Method]:
    """thm11, the reformulations for the parity of n, and optionally the oracle."""
    methods = [Method.THM11]
    methods += [m for m in Method if m.parity == n % 2]
    if oracle:
        methods.append(Method.TESTING_SET)
    return methods


def _draw_shape(rng: random.Random, n: int) -> tuple[int, int]:
    """Rank and hyperbolic-prefix length of the next sample."""
    rank = n + 2 + rng.randint(0, CROSSCHECK_EXTRA_RANK)
    prefix = rng.choice((0, n // 2, (n + 1) // 2))
    return rank, min(prefix, rank // 2)


def crosscheck(
    ctx: FieldContext,
    n: int,
    count: int,
    seed: int,
    oracle: bool = True,
    r_bound: int | None = None,
) -> CrosscheckReport:
    """Compare the universality deciders on ``count`` seeded samples.

    Args:
        ctx: Field
        n: Rank tested for universality, at least 2
        count: Number of samples; 0 gives an empty report
        seed: Seed of the run, echoed in the report
        oracle: Include the testing-set oracle
        r_bound: Sampler bound, by default 2e + 2 scaled per constants

    Raises:
        BadParams: n < 2 or count < 0
    """
    if n < 2:
        raise BadParams(f"n must be at least 2, got {n}")
    if count < 0:
        raise BadParams(f"count must be non-negative, got {count}")
    if r_bound is None:
        r_bound = CROSSCHECK_R_BOUND_PER_E * ctx.e + CROSSCHECK_R_BOUND_OFFSET

    methods = methods_for(n, oracle)
    report = CrosscheckReport(n=n, seed=seed, count=count, methods=methods)
    rng = random.Random(seed)
    for index in range(count):
        rank, prefix = _draw_shape(rng, n)
        lattice = sample_lattice(ctx, rank, r_bound, rng.getrandbits(32), hyperbolic_prefix=prefix)
        results = {m: is_n_universal(lattice, n, m) for m in methods}
        answers = {v.universal for v in results.values()}
        if len(answers) > 1:
            report.disagreements.append(Disagreement(
                sample=index,
                lattice=lattice,
                verdicts={m.value: v.universal for m, v in results.items()},
                witnesses={m.value: v.witness for m, v in results.items()},
            ))
            logger.warning(f"crosscheck sample {index}: deciders disagree on R={lattice.R}")
        elif answers == {True}:
            report.universal += 1
        else:
            report.not_universal += 1
        logger.debug(f"crosscheck sample {index}/{count}: R={lattice.R}")

    logger.info(
        f"crosscheck n={n} seed={seed}: {report.universal} universal, "
        f"{report.not_universal} not, {len(report.disagreements)} disagreements"
    )
    return report
