"""String enums shared across the arithmetic, lattice and CLI layers."""

from enum import Enum


class Method(Enum):
    """n-universality decision procedure"""
    THM11 = "thm11"  # BONG-invariant clause tree, valid for every n
    EVEN41 = "even41"  # I1E/I2E/I3E conditions, even n only
    EVEN47 = "even47"  # concise even form with alpha_{n+1} <= 1
    ODD51 = "odd51"  # I1O/I2O/I3O conditions with G_n, odd n only
    ODD53 = "odd53"  # restatement of the odd conditions
    TESTING_SET = "testing_set"  # represent every member of the minimal testing set

    @property
    def parity(self) -> int | None:
        """0 for even-only methods, 1 for odd-only, None when any n is allowed."""
        if self in (Method.EVEN41, Method.EVEN47):
            return 0
        if self in (Method.ODD51, Method.ODD53):
            return 1
        return None


class LatticeKind(Enum):
    """Building blocks a lattice can be described with"""
    H = "H"  # hyperbolic plane 2^{-1}A(0,0)
    A22RHO = "A22rho"  # 2^{-1}A(2,2rho)
    PI_A22RHO = "piA22rho"  # 2^{-1}piA(2,2rho)
    UNARY = "unary"  # <a>
    BINARY_DIAG = "binary_diag"  # <a, b> with ord a <= ord b
    DEFECT_BINARY = "defect_binary"  # even testing-set rows indexed by a unit delta
    TERNARY_KAPPA = "ternary_kappa"  # 2^{-1}piA(2,2rho) + <Delta delta> via kappa
    BONG_LITERAL = "bong_literal"  # explicit good BONG
    CONCAT = "concat"  # orthogonal sum of blocks


class Condition(Enum):
    """Condition of the representation criterion that failed"""
    SPACE = "space"  # FN does not embed in FM
    ONE = "i"  # R_i <= S_i or the paired-sum fallback
    TWO = "ii"  # d[a_{1,i}b_{1,i}] >= A_i
    THREE = "iii"  # conditional subspace representation
    FOUR = "iv"  # gap-triggered subspace representation


class OutputFormat(Enum):
    """CLI output format"""
    JSON = "json"
    TEXT = "text"
