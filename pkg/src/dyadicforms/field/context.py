"""Dyadic local fields as a two-step tower.

    O_0 = Z_2[t] / (u(t))          unramified of degree f, u reduces to an
                                   irreducible polynomial mod 2
    O_F = O_0[pi] / (E(pi))        E Eisenstein of degree e over O_0

An element of O_F is stored as a *lift*: a tuple of e coefficients in the
pi-basis 1, pi, ..., pi^{e-1}, each coefficient an O_0 element stored as a
tuple of f integers reduced mod 2^K. Lifts are exact algebraic objects; the
precision actually known about a value is tracked separately by
``FieldElement``.

Because the pi-powers below e have distinct residues mod e,

    ord(x) = min_i (e * v_2(x_i) + i)

which keeps valuation, digit extraction and division by pi exact on lifts.

References:
    - O'Meara, Introduction to Quadratic Forms, sections 5, 32 and 63
"""

from __future__ import annotations

import logging
import threading
from typing import Any, Sequence

from ..constants import COEFF_GUARD_BITS, DEFAULT_PREC_OFFSET, DEFAULT_PREC_PER_E, INFINITY
from ..errors import NonEisenstein, PrecisionLoss
from .element import FieldElement
from .residue import ResidueField, bits_to_poly, default_modulus, poly_to_bits

logger = logging.getLogger(__name__)

__all__ = ["FieldContext", "make_field", "O0", "Lift"]

O0 = tuple[int, ...]
Lift = tuple[O0, ...]


def _v2(n: int) -> float:
    if n == 0:
        return INFINITY
    return (n & -n).bit_length() - 1


class FieldContext:
    """A dyadic local field F with fixed pi, rho and Delta = 1 - 4 rho.

    Build instances with ``make_field``. Everything is fixed at construction
    except the lazily built square-class and Hilbert tables, which are
    created once under ``lock`` and read-only afterwards.
    """

    def __init__(
        self,
        e: int,
        f: int,
        residue: ResidueField,
        eis_coeffs: Sequence[Sequence[int]],
        default_prec: int,
    ):
        self.e = e
        self.f = f
        self.residue = residue
        self.default_prec = default_prec
        # One bit of O_0 precision is worth e pi-digits
        self.coeff_bits = -(-default_prec // e) + COEFF_GUARD_BITS + 1
        self.modulus = 1 << self.coeff_bits
        self.lock = threading.RLock()
        self.cache: dict[str, Any] = {}

        # monic lift u(t) of the residue modulus, low coefficients only
        self._u_low = tuple(poly_to_bits(residue.modulus)[:f])

        self._eis = self._normalize_eisenstein(eis_coeffs)
        # pi^e = -(c_0 + c_1 pi + ... + c_{e-1} pi^{e-1})
        self._pi_e: Lift = tuple(self.o0_neg(c) for c in self._eis)
        # lambda = pi^e / 2 is a unit
        self._lambda: Lift = tuple(tuple(x >> 1 for x in c) for c in self._pi_e)
        self._lambda_inv: Lift = self._unit_inverse(self._lambda)

        self.one = self.from_lift(0, self.lift_one())
        self.pi = self.from_lift(1, self.lift_one())
        self.zero = FieldElement.zero_of(self)
        self.rho = self.residue_lift(residue.trace_one_element)
        self.delta = self.one - self.from_int(4) * self.rho

        logger.debug(
            f"field e={e} f={f} residue modulus={poly_to_bits(residue.modulus)} "
            f"prec={default_prec} coeff_bits={self.coeff_bits}"
        )

    def __repr__(self) -> str:
        return f"FieldContext(e={self.e}, f={self.f}, prec={self.default_prec})"

    @property
    def degree(self) -> int:
        """[F : Q_2] = e f."""
        return self.e * self.f

    @property
    def unram_poly(self) -> list[int]:
        return poly_to_bits(self.residue.modulus)

    @property
    def eis_poly(self) -> list[list[int]]:
        """Monic Eisenstein polynomial, coefficients as centred t-coordinates."""
        half = self.modulus >> 1
        coeffs = [[x - self.modulus if x >= half else x for x in c] for c in self._eis]
        return coeffs + [[1] + [0] * (self.f - 1)]

    # =========================================================================
    # O_0 arithmetic
    # =========================================================================

    def o0(self, value: int = 0) -> O0:
        return (value % self.modulus,) + (0,) * (self.f - 1)

    def o0_reduce(self, coeffs: Sequence[int]) -> O0:
        return tuple(c % self.modulus for c in coeffs)

    def o0_add(self, a: O0, b: O0) -> O0:
        return tuple((x + y) % self.modulus for x, y in zip(a, b))

    def o0_sub(self, a: O0, b: O0) -> O0:
        return tuple((x - y) % self.modulus for x, y in zip(a, b))

    def o0_neg(self, a: O0) -> O0:
        return tuple(-x % self.modulus for x in a)

    def o0_mul(self, a: O0, b: O0) -> O0:
        f = self.f
        prod = [0] * (2 * f - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        # t^f = -(u_0 + u_1 t + ... + u_{f-1} t^{f-1})
        for k in range(2 * f - 2, f - 1, -1):
            z = prod[k]
            if z:
                prod[k] = 0
                for i, ui in enumerate(self._u_low):
                    if ui:
                        prod[k - f + i] -= z
        return tuple(c % self.modulus for c in prod[:f])

    def o0_v2(self, a: O0) -> float:
        return min(_v2(x) for x in a)

    def o0_residue(self, a: O0) -> int:
        bits = 0
        for j, x in enumerate(a):
            bits |= (x & 1) << j
        return bits

    def o0_lift(self, bits: int) -> O0:
        return tuple((bits >> j) & 1 for j in range(self.f))

    def o0_inverse(self, a: O0) -> O0:
        """Newton iteration y <- y(2 - a y) from the residue inverse."""
        y = self.o0_lift(self.residue.inv(self.o0_residue(a)))
        two = self.o0(2)
        for _ in range(self.coeff_bits.bit_length() + 1):
            y = self.o0_mul(y, self.o0_sub(two, self.o0_mul(a, y)))
        return y

    # =========================================================================
    # O_F lifts
    # =========================================================================

    def lift_zero(self) -> Lift:
        return (self.o0(0),) * self.e

    def lift_one(self) -> Lift:
        return (self.o0(1),) + (self.o0(0),) * (self.e - 1)

    def lift_const(self, a: O0) -> Lift:
        return (a,) + (self.o0(0),) * (self.e - 1)

    def lift_add(self, x: Lift, y: Lift) -> Lift:
        return tuple(self.o0_add(a, b) for a, b in zip(x, y))

    def lift_sub(self, x: Lift, y: Lift) -> Lift:
        return tuple(self.o0_sub(a, b) for a, b in zip(x, y))

    def lift_neg(self, x: Lift) -> Lift:
        return tuple(self.o0_neg(a) for a in x)

    def lift_mul(self, x: Lift, y: Lift) -> Lift:
        e, f = self.e, self.f
        prod = [[0] * f for _ in range(2 * e - 1)]
        for i, a in enumerate(x):
            if not any(a):
                continue
            for j, b in enumerate(y):
                if not any(b):
                    continue
                c = self.o0_mul(a, b)
                row = prod[i + j]
                for k in range(f):
                    row[k] += c[k]
        for k in range(2 * e - 2, e - 1, -1):
            z = self.o0_reduce(prod[k])
            if not any(z):
                continue
            prod[k] = [0] * f
            for i, pe in enumerate(self._pi_e):
                c = self.o0_mul(z, pe)
                row = prod[k - e + i]
                for t in range(f):
                    row[t] += c[t]
        return tuple(self.o0_reduce(row) for row in prod[:e])

    def lift_ord(self, x: Lift) -> float:
        """Valuation of a lift; infinity when every coefficient is 0 mod 2^K."""
        return min(self.e * self.o0_v2(a) + i for i, a in enumerate(x))

    def lift_residue(self, x: Lift) -> int:
        return self.o0_residue(x[0])

    def lift_mul_pi(self, x: Lift) -> Lift:
        top = x[-1]
        shifted = (self.o0(0),) + tuple(x[:-1])
        if not any(top):
            return shifted
        return self.lift_add(shifted, tuple(self.o0_mul(top, pe) for pe in self._pi_e))

    def lift_mul_pi_power(self, x: Lift, k: int) -> Lift:
        """x * pi^k for k >= 0, using pi^e = 2 lambda."""
        q, r = divmod(k, self.e)
        if q:
            x = tuple(tuple((c << q) % self.modulus for c in a) for a in x)
            for _ in range(q):
                x = self.lift_mul(x, self._lambda)
        for _ in range(r):
            x = self.lift_mul_pi(x)
        return x

    def lift_div_pi_power(self, x: Lift, k: int) -> Lift:
        """Exact x / pi^k for a lift with ord(x) >= k."""
        if k <= 0:
            return x
        q, r = divmod(k, self.e)
        if r:
            for _ in range(self.e - r):
                x = self.lift_mul_pi(x)
            q += 1
        mask = (1 << q) - 1
        if any(c & mask for a in x for c in a):
            raise PrecisionLoss(f"lift is not divisible by pi^{k}")
        x = tuple(tuple(c >> q for c in a) for a in x)
        for _ in range(q):
            x = self.lift_mul(x, self._lambda_inv)
        return x

    def _unit_inverse(self, x: Lift) -> Lift:
        y = self.lift_const(self.o0_inverse(x[0]))
        two = self.lift_const(self.o0(2))
        for _ in range((self.e * self.coeff_bits).bit_length() + 1):
            y = self.lift_mul(y, self.lift_sub(two, self.lift_mul(x, y)))
        return y

    def lift_unit_inverse(self, x: Lift) -> Lift:
        return self._unit_inverse(x)

    def lift_key(self, x: Lift, digits: int) -> tuple[O0, ...]:
        """Canonical form of x mod pi^digits (coordinate-wise reduction)."""
        key = []
        for i, a in enumerate(x):
            bits = max(0, -(-(digits - i) // self.e))
            key.append(tuple(c & ((1 << bits) - 1) for c in a))
        return tuple(key)

    # =========================================================================
    # Element constructors
    # =========================================================================

    def from_lift(self, val: int, unit: Lift, rel_prec: int | None = None) -> FieldElement:
        rel = self.default_prec if rel_prec is None else rel_prec
        return FieldElement(self, val, unit, val + rel)

    def residue_lift(self, bits: int) -> FieldElement:
        """Teichmueller-free lift sum_j bit_j t^j of a residue element."""
        if bits == 0:
            return self.zero
        return self.from_lift(0, self.lift_const(self.o0_lift(bits)))

    def from_int(self, n: int) -> FieldElement:
        if n == 0:
            return self.zero
        s = (n & -n).bit_length() - 1
        odd = n >> s
        unit = self.lift_const(self.o0(odd))
        for _ in range(s):
            unit = self.lift_mul(unit, self._lambda_inv)
        return self.from_lift(self.e * s, unit)

    def from_rational(self, numerator: int, denominator: int = 1) -> FieldElement:
        return self.from_int(numerator) / self.from_int(denominator)

    def from_digits(self, val: int, digits: Sequence[int]) -> FieldElement:
        """Element pi^val * sum_j [d_j] pi^j with residue digits d_j in [0, 2^f)."""
        for d in digits:
            if not 0 <= d < self.residue.order:
                raise ValueError(f"digit {d} outside [0, {self.residue.order})")
        lead = 0
        while lead < len(digits) and digits[lead] == 0:
            lead += 1
        body = list(digits[lead:])
        if not body:
            return self.zero
        unit = self.lift_zero()
        for d in reversed(body):
            unit = self.lift_add(self.lift_mul_pi(unit), self.lift_const(self.o0_lift(d)))
        return self.from_lift(val + lead, unit)

    def from_literal(self, literal: dict[str, Any]) -> FieldElement:
        return self.from_digits(int(literal["val"]), [int(d) for d in literal["digits"]])

    # =========================================================================
    # Construction helpers
    # =========================================================================

    def _normalize_eisenstein(self, coeffs: Sequence[Sequence[int]]) -> tuple[O0, ...]:
        if len(coeffs) != self.e + 1:
            raise NonEisenstein(
                f"Eisenstein polynomial must have {self.e + 1} coefficients, got {len(coeffs)}"
            )
        padded = []
        for c in coeffs:
            if len(c) > self.f:
                raise NonEisenstein(f"coefficient {list(c)} has more than f={self.f} coordinates")
            padded.append(self.o0_reduce(list(c) + [0] * (self.f - len(c))))
        lead = padded[-1]
        if self.o0_v2(lead) != 0:
            raise NonEisenstein("leading coefficient is not a unit")
        if self.o0_v2(padded[0]) != 1:
            raise NonEisenstein("constant term must have 2-adic valuation exactly 1")
        for i, c in enumerate(padded[1:-1], start=1):
            if self.o0_v2(c) < 1:
                raise NonEisenstein(f"coefficient of x^{i} is a unit")
        lead_inv = self.o0_inverse(lead)
        return tuple(self.o0_mul(c, lead_inv) for c in padded[:-1])


def make_field(
    e: int,
    f: int,
    unram_poly: Sequence[int] | None = None,
    eis_poly: Sequence[Sequence[int]] | None = None,
    prec: int | None = None,
) -> FieldContext:
    """Instantiate a dyadic local field.

    Args:
        e: Ramification index (ord(2) = e), at least 1
        f: Residue degree, at least 1
        unram_poly: Little-endian bits of an irreducible degree-f polynomial over
            GF(2). Defaults to the smallest such polynomial.
        eis_poly: e+1 coefficients (constant term first), each a list of
            t-coordinates of an O_0 element. Defaults to x^e - 2.
        prec: Absolute pi-adic precision cap. Defaults to 6e + 12.

    Returns:
        FieldContext with pi, rho (first trace-one residue lift) and
        Delta = 1 - 4 rho fixed.

    Raises:
        ReducibleUnramifiedPoly: unram_poly is not irreducible of degree f
        NonEisenstein: eis_poly is not Eisenstein
    """
    if e < 1 or f < 1:
        raise ValueError(f"e and f must be positive, got e={e}, f={f}")
    modulus = default_modulus(f) if unram_poly is None else bits_to_poly(list(unram_poly))
    residue = ResidueField(f, modulus)
    if eis_poly is None:
        eis_poly = [[-2]] + [[0]] * (e - 1) + [[1]]
    default_prec = prec if prec is not None else DEFAULT_PREC_PER_E * e + DEFAULT_PREC_OFFSET
    if default_prec < 2 * e + 2:
        raise ValueError(f"precision {default_prec} is below the 2e+2 needed for defects")
    ctx = FieldContext(e, f, residue, eis_poly, default_prec)
    logger.info(f"built field [F:Q2]={ctx.degree} (e={e}, f={f})")
    return ctx
