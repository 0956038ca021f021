"""Shared fixtures: block structures and frozen golden generator sets.

The golden exponent sets are transcribed by hand from the worked examples
the construction must reproduce; variables are flattened block by block
(x11, x12, x21, x22, ...).
"""

import pytest

from bitype import BlockStructure, Monomial, MonomialIdeal


# L*_{2,2} on blocks (2,2): the four cross products.
GOLDEN_2_2 = {
    (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1),
}

# L*_{4,2} on blocks (2,2): seventeen generators.
GOLDEN_4_2 = {
    (2, 1, 1, 0), (2, 1, 0, 1), (1, 2, 1, 0), (1, 2, 0, 1),
    (1, 0, 2, 1), (0, 1, 2, 1), (1, 0, 1, 2), (0, 1, 1, 2),
    (2, 0, 2, 0), (2, 0, 1, 1), (2, 0, 0, 2), (0, 2, 2, 0),
    (0, 2, 0, 2), (0, 2, 1, 1), (1, 1, 2, 0), (1, 1, 0, 2),
    (1, 1, 1, 1),
}

# L*_{3,2} on blocks (2,2,2): one variable from each block.
GOLDEN_3_2_222 = {
    (1, 0, 1, 0, 1, 0), (1, 0, 1, 0, 0, 1), (1, 0, 0, 1, 1, 0), (1, 0, 0, 1, 0, 1),
    (0, 1, 1, 0, 1, 0), (0, 1, 1, 0, 0, 1), (0, 1, 0, 1, 1, 0), (0, 1, 0, 1, 0, 1),
}

# L*_{3,2} on blocks (2,2): twelve generators.
GOLDEN_3_2_22 = {
    (2, 0, 1, 0), (2, 0, 0, 1), (1, 1, 1, 0), (1, 1, 0, 1),
    (0, 2, 1, 0), (0, 2, 0, 1), (1, 0, 2, 0), (1, 0, 1, 1),
    (1, 0, 0, 2), (0, 1, 2, 0), (0, 1, 1, 1), (0, 1, 0, 2),
}

# L*_{11,3} on blocks (2,2): deficit one below the (3,3,3,3) corner.
GOLDEN_11_3 = {
    (3, 3, 3, 2), (3, 3, 2, 3), (3, 2, 3, 3), (2, 3, 3, 3),
}

# L*_{15,4} on blocks (2,2): deficit one below the (4,4,4,4) corner.
GOLDEN_15_4 = {
    (4, 4, 4, 3), (4, 4, 3, 4), (4, 3, 4, 4), (3, 4, 4, 4),
}

# Edge ideal of the strong graph on blocks (2,2): crosses plus squares.
GOLDEN_EDGE_22 = {
    (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1),
    (2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2),
}


def gen_set(ideal: MonomialIdeal) -> set[tuple[int, ...]]:
    return {g.entries for g in ideal.gens}


def mono(blocks: BlockStructure, *entries: int) -> Monomial:
    return Monomial(blocks, tuple(entries))


@pytest.fixture
def b22() -> BlockStructure:
    return BlockStructure((2, 2))


@pytest.fixture
def b222() -> BlockStructure:
    return BlockStructure((2, 2, 2))


@pytest.fixture
def b11() -> BlockStructure:
    return BlockStructure((1, 1))
