import random
from fractions import Fraction

import pytest

from hurwitzcert import CartanMatrix, NumberField


@pytest.fixture(scope="session")
def QQ():
    return NumberField.rationals()


@pytest.fixture(scope="session")
def sqrt2_field():
    # Q(sqrt2), generator isolated in (1, 3/2)
    return NumberField((-2, 0, 1), (1, Fraction(3, 2)))


@pytest.fixture(scope="session")
def quartic_field():
    # the counterexample field: (x^2 + x)^2 = 2, positive real root ~ 0.7900
    return NumberField((-2, 0, 1, 2, 1), (Fraction(79, 100), Fraction(4, 5)))


@pytest.fixture(scope="session")
def golden_field():
    # x^2 - x - 1, golden ratio root in (1, 2)
    return NumberField((-1, -1, 1), (1, 2))


@pytest.fixture(scope="session")
def a2(QQ):
    return CartanMatrix.from_rows(QQ, [[2, -1], [-1, 2]])


@pytest.fixture(scope="session")
def a3(QQ):
    return CartanMatrix.from_rows(QQ, [[2, -1, 0], [-1, 2, -1], [0, -1, 2]])


@pytest.fixture(scope="session")
def affine_a1(QQ):
    return CartanMatrix.from_rows(QQ, [[2, -2], [-2, 2]])


@pytest.fixture(scope="session")
def b2_sym(sqrt2_field):
    s = sqrt2_field.gen()
    return CartanMatrix.from_rows(sqrt2_field, [[2, -s], [-s, 2]])


@pytest.fixture(scope="session")
def h2_5(golden_field):
    phi = golden_field.gen()
    return CartanMatrix.from_rows(golden_field, [[2, -phi], [-phi, 2]])


@pytest.fixture(scope="session")
def counterexample_cartan(quartic_field):
    t = quartic_field.gen()
    return CartanMatrix.from_rows(
        quartic_field, [[2, -1, -1], [-1, 2, -t], [-1, -t, 2]])


OFF_DIAGONAL_VALUES = (0, 1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2))


def random_symmetric_cartan(field, rng, n, values=OFF_DIAGONAL_VALUES):
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 2
        for j in range(i + 1, n):
            v = rng.choice(values)
            rows[i][j] = rows[j][i] = v
    return CartanMatrix.from_rows(field, rows)


def seeded_rng(seed):
    return random.Random(seed)
