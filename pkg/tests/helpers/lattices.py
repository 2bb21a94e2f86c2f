"""Small builders shared by the lattice and universality tests."""

from dyadicforms.enums import LatticeKind
from dyadicforms.lattice import LatticeDescriptor, make_block, validate_bong


def block(ctx, kind, **params):
    """make_block with keyword parameters."""
    return make_block(ctx, LatticeDescriptor(LatticeKind(kind), params))


def bong(ctx, *entries):
    """Good BONG from (unit, valuation) pairs or plain ints."""
    values = []
    for x in entries:
        if isinstance(x, tuple):
            unit, val = x
            values.append(ctx.from_int(unit) * ctx.pi ** val)
        else:
            values.append(ctx.from_int(x))
    return validate_bong(values)


def q2_squares_oracle(u: int, bits: int = 6) -> int | float:
    """d(u) for an odd integer u in Q_2, by brute force over squares mod 2^bits.

    d(u) is the largest ord(u - x^2) over odd x; anything that reaches 3
    makes u a square.
    """
    best = 0
    modulus = 1 << bits
    for x in range(1, modulus, 2):
        diff = (u - x * x) % modulus
        k = bits if diff == 0 else (diff & -diff).bit_length() - 1
        best = max(best, k)
    return float("inf") if best >= 3 else best
