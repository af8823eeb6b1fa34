from fractions import Fraction as F

import pytest

from latticeops import (
    AWParams,
    QLattice,
    Quadratic,
    RacahParams,
    aw_bundle,
    racah_bundle,
)

# The lattices the identity suite runs over.
Q_LATTICES = [
    QLattice(p=F(2), c3=F(0), m=F(1)),
    QLattice(p=F(3), c3=F(1, 4), m=F(2, 3)),
    QLattice(p=F(1, 2), c3=F(-1), m=F(0)),
    QLattice(p=F(7, 5), c3=F(3), m=F(-2)),
]
QUAD_LATTICES = [
    Quadratic(c4=F(1), c5=F(2), c6=F(3)),
    Quadratic(c4=F(2), c5=F(0), c6=F(0)),
    Quadratic(c4=F(0), c5=F(1), c6=F(0)),
]
ALL_LATTICES = Q_LATTICES + QUAD_LATTICES


@pytest.fixture(scope="session")
def racah_std():
    """The Racah preset used throughout: (a,b,c,d) = (1/2,1/3,1/4,1/5)."""
    return racah_bundle(RacahParams(F(1, 2), F(1, 3), F(1, 4), F(1, 5)))


@pytest.fixture(scope="session")
def aw_std():
    """The Askey-Wilson preset: (1/2,1/3,1/5,1/7), p=1/2, r=1, c3=0."""
    return aw_bundle(
        AWParams(F(1, 2), F(1, 3), F(1, 5), F(1, 7), p=F(1, 2), r=F(1), c3=F(0))
    )
