"""Shared fixture structures.

T1        one-element structure
SL2       two-chain meet semilattice (min, 0 <= 1)
SL2_DUAL  min table under the reversed chain
LZ2/RZ2   left-/right-zero bands, discrete order
N2        null semigroup (xy = 0), discrete order
N2_CHAIN  null semigroup with 0 <= 1
CH3       three-chain meet semilattice (min, 0 <= 1 <= 2)
B2        five-element combinatorial inverse semigroup, discrete order
Z2/Z3     cyclic groups (unordered)
PZ2       power structure of Z2
PLZ2      power structure of the left-zero band
"""

import pytest

from ordsgp import (
    power_ordered_semigroup,
    validate_semigroup,
    validate_structure,
)


def make_t1():
    return validate_structure(1, [[0]])


def make_sl2():
    return validate_structure(2, [[0, 0], [0, 1]], [(0, 1)])


def make_sl2_dual():
    return validate_structure(2, [[0, 0], [0, 1]], [(1, 0)])


def make_lz2():
    return validate_structure(2, [[0, 0], [1, 1]])


def make_rz2():
    return validate_structure(2, [[0, 1], [0, 1]])


def make_n2():
    return validate_structure(2, [[0, 0], [0, 0]])


def make_n2_chain():
    return validate_structure(2, [[0, 0], [0, 0]], [(0, 1)])


def make_ch3():
    table = [[min(i, j) for j in range(3)] for i in range(3)]
    return validate_structure(3, table, [(0, 1), (0, 2), (1, 2)])


def make_b2():
    # elements: 0 = zero, 1 = a, 2 = b, 3 = ab, 4 = ba with aba = a,
    # bab = b, a*a = b*b = 0
    table = [
        [0, 0, 0, 0, 0],
        [0, 0, 3, 0, 1],
        [0, 4, 0, 2, 0],
        [0, 1, 0, 3, 0],
        [0, 0, 2, 0, 4],
    ]
    return validate_structure(5, table)


def make_z2():
    return validate_semigroup(2, [[0, 1], [1, 0]])


def make_z3():
    return validate_semigroup(3, [[(i + j) % 3 for j in range(3)] for i in range(3)])


def make_lz2_sg():
    return validate_semigroup(2, [[0, 0], [1, 1]])


def make_n2_sg():
    return validate_semigroup(2, [[0, 0], [0, 0]])


def make_pz2():
    return power_ordered_semigroup(make_z2())


def make_plz2():
    return power_ordered_semigroup(make_lz2_sg())


ORDERED_FIXTURES = {
    "T1": make_t1,
    "SL2": make_sl2,
    "SL2_DUAL": make_sl2_dual,
    "LZ2": make_lz2,
    "RZ2": make_rz2,
    "N2": make_n2,
    "N2_CHAIN": make_n2_chain,
    "CH3": make_ch3,
    "B2": make_b2,
    "PZ2": make_pz2,
    "PLZ2": make_plz2,
}

# every pair in these has a least upper bound (and joins distribute)
JOIN_CLOSED = ("T1", "SL2", "CH3", "PZ2", "PLZ2")


def all_ordered_fixtures():
    return [(name, build()) for name, build in ORDERED_FIXTURES.items()]


@pytest.fixture
def t1():
    return make_t1()


@pytest.fixture
def sl2():
    return make_sl2()


@pytest.fixture
def lz2():
    return make_lz2()


@pytest.fixture
def rz2():
    return make_rz2()


@pytest.fixture
def n2():
    return make_n2()


@pytest.fixture
def ch3():
    return make_ch3()


@pytest.fixture
def b2():
    return make_b2()


@pytest.fixture
def z2():
    return make_z2()


@pytest.fixture
def pz2():
    return make_pz2()


@pytest.fixture
def plz2():
    return make_plz2()
