"""Arithmetic in the residue field k = GF(2^f).

Elements are Python ints read as bit vectors: bit j is the coefficient of
t^j in the polynomial basis 1, t, ..., t^{f-1}. The modulus is an int with
bit f set. Everything here is small (f is single digits in practice), so
root finding is exhaustive.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from ..errors import ReducibleUnramifiedPoly

__all__ = [
    "ResidueField",
    "poly_degree",
    "poly_mod",
    "is_irreducible",
    "default_modulus",
    "bits_to_poly",
    "poly_to_bits",
]


def poly_degree(p: int) -> int:
    """Degree of a GF(2)[x] polynomial (-1 for zero)."""
    return p.bit_length() - 1


def poly_mod(a: int, m: int) -> int:
    """Remainder of a modulo m in GF(2)[x]."""
    dm = poly_degree(m)
    while a and poly_degree(a) >= dm:
        a ^= m << (poly_degree(a) - dm)
    return a


def _carryless_mul(a: int, b: int) -> int:
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def is_irreducible(p: int) -> bool:
    """Trial division by every polynomial of degree <= deg(p)/2."""
    deg = poly_degree(p)
    if deg < 1:
        return False
    for g in range(2, 1 << (deg // 2 + 1)):
        if poly_mod(p, g) == 0:
            return False
    return True


def default_modulus(f: int) -> int:
    """Smallest irreducible polynomial of degree f (x itself when f = 1)."""
    for p in range(1 << f, 1 << (f + 1)):
        if is_irreducible(p):
            return p
    raise ReducibleUnramifiedPoly(f"no irreducible polynomial of degree {f}")


def bits_to_poly(bits: list[int] | tuple[int, ...]) -> int:
    """Little-endian coefficient list [c_0, ..., c_f] -> int."""
    value = 0
    for j, bit in enumerate(bits):
        if bit not in (0, 1):
            raise ReducibleUnramifiedPoly(f"coefficient {bit!r} is not a bit")
        value |= bit << j
    return value


def poly_to_bits(p: int) -> list[int]:
    return [(p >> j) & 1 for j in range(poly_degree(p) + 1)]


@dataclass(frozen=True)
class ResidueField:
    """GF(2^f) presented as GF(2)[t]/(modulus)."""

    f: int
    modulus: int

    def __post_init__(self) -> None:
        if poly_degree(self.modulus) != self.f:
            raise ReducibleUnramifiedPoly(
                f"residue polynomial has degree {poly_degree(self.modulus)}, expected {self.f}"
            )
        if not is_irreducible(self.modulus):
            raise ReducibleUnramifiedPoly(
                f"residue polynomial {poly_to_bits(self.modulus)} is reducible over GF(2)"
            )

    @property
    def order(self) -> int:
        return 1 << self.f

    def elements(self) -> Iterator[int]:
        """All elements in increasing integer order (0 first)."""
        return iter(range(self.order))

    def mul(self, a: int, b: int) -> int:
        return poly_mod(_carryless_mul(a, b), self.modulus)

    def pow(self, a: int, exponent: int) -> int:
        result = 1
        while exponent:
            if exponent & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            exponent >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse in the residue field")
        return self.pow(a, self.order - 2)

    def frobenius(self, a: int) -> int:
        return self.mul(a, a)

    def sqrt(self, a: int) -> int:
        """Unique square root: a^{2^{f-1}}."""
        for _ in range(self.f - 1):
            a = self.frobenius(a)
        return a

    def trace(self, a: int) -> int:
        """Absolute trace to GF(2): a + a^2 + ... + a^{2^{f-1}}."""
        total = 0
        for _ in range(self.f):
            total ^= a
            a = self.frobenius(a)
        return total

    def artin_schreier_root(self, a: int) -> int | None:
        """Smallest z with z^2 + z = a, or None when trace(a) = 1."""
        if self.trace(a):
            return None
        for z in self.elements():
            if self.mul(z, z) ^ z == a:
                return z
        return None

    @cached_property
    def trace_one_element(self) -> int:
        """First element (in integer order) of absolute trace 1."""
        for a in self.elements():
            if self.trace(a) == 1:
                return a
        raise ReducibleUnramifiedPoly("residue field has no trace-one element")
