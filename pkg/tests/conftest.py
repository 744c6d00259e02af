"""Shared fixtures: the fully worked reference pair and small sweep boxes.

The reference pair is a weight-(20,22) sl2hat polytope with nontrivial
multiplicities on both ladders and unequal decorations; its transition
partner and vertex coordinates are frozen oracle values.
"""

import pytest

from affmv import DecoratedPolytope, LusztigDatum, datum
from affmv.roots import HIGH, LOW, Algebra, RootVector

KINDS = (Algebra.SL2_HAT, Algebra.A2_TWISTED)

# Exhaustive-sweep weight boxes small enough for per-module tests.
SMALL_BOX = {
    Algebra.SL2_HAT: RootVector(4, 4),
    Algebra.A2_TWISTED: RootVector(3, 6),
}

REFERENCE_WEIGHT = RootVector(20, 22)


def reference_right_datum() -> LusztigDatum:
    return datum(
        Algebra.SL2_HAT,
        {(LOW, 1): 2, (LOW, 2): 1, (LOW, 3): 1, (HIGH, 1): 1, (HIGH, 3): 1},
        (9, 2, 1, 1),
    )


def reference_left_datum() -> LusztigDatum:
    return datum(
        Algebra.SL2_HAT,
        {
            (LOW, 1): 5,
            (LOW, 2): 1,
            (LOW, 4): 1,
            (HIGH, 1): 1,
            (HIGH, 2): 2,
            (HIGH, 3): 1,
            (HIGH, 4): 1,
        },
        (2, 1, 1),
    )


@pytest.fixture
def reference_right() -> LusztigDatum:
    return reference_right_datum()


@pytest.fixture
def reference_left() -> LusztigDatum:
    return reference_left_datum()


@pytest.fixture
def reference_pair() -> DecoratedPolytope:
    return DecoratedPolytope(reference_left_datum(), reference_right_datum())
