"""
dyadicforms CLI.

Commands:
    invariants    R, alpha and space invariants of a lattice
    universal     n-universality by any decision procedure
    represents    representation of one lattice by another
    testing-set   the minimal testing set for n-universality
    crosscheck    agreement of all deciders on random lattices
    minimality    no testing-set member can be dropped
    classes       square-class table
    defect        quadratic defect order
    hilbert       Hilbert symbol
    sharp         the companion unit c#

Example:
    $ dyadicforms testing-set --n 2
    $ dyadicforms --field '{"e": 2, "f": 1}' crosscheck --n 3 --count 200 --seed 42
"""

from .main import cli, main

__all__ = ["cli", "main"]
