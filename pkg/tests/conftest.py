"""
Pytest configuration and shared fixtures for dyadicforms tests.

Field contexts are expensive to set up (square-class table, Hilbert pairing),
so every field fixture is session-scoped and shared across modules.
"""

import pytest

from dyadicforms.field import class_table, make_field
from dyadicforms.lattice import hyperbolic_lattice

from tests.helpers.lattices import block


# ─── Fields ───────────────────────────────────────────────────────────────


@pytest.fixture(scope="session")
def q2():
    """Q_2 (e=1, f=1): 8 square classes."""
    return make_field(1, 1)


@pytest.fixture(scope="session")
def ramified():
    """Q_2(sqrt 2) (e=2, f=1): 16 square classes."""
    return make_field(2, 1)


@pytest.fixture(scope="session")
def unramified():
    """Unramified quadratic extension of Q_2 (e=1, f=2): 16 square classes."""
    return make_field(1, 2)


@pytest.fixture(scope="session", params=["q2", "ramified", "unramified"])
def any_field(request):
    """Each of the three small fields in turn."""
    return request.getfixturevalue(request.param)


# ─── Lattices ─────────────────────────────────────────────────────────────


@pytest.fixture(scope="session")
def h2_q2(q2):
    """H ⊥ H over Q_2."""
    return hyperbolic_lattice(q2, 2)


@pytest.fixture(scope="session")
def h_a22_q2(q2):
    """H ⊥ 2^{-1}A(2,2ρ) over Q_2 (space is not H^2)."""
    return hyperbolic_lattice(q2, 1, block(q2, "A22rho"))


@pytest.fixture(scope="session")
def classes_q2(q2):
    """Class table of Q_2."""
    return class_table(q2)
