import pytest

from symspread import GF


@pytest.fixture(scope="session")
def fields():
    """One shared context per order used across the suite."""
    orders = {
        3: (3, 1), 4: (2, 2), 5: (5, 1), 7: (7, 1), 8: (2, 3), 9: (3, 2),
        16: (2, 4), 27: (3, 3), 32: (2, 5), 81: (3, 4), 128: (2, 7),
        243: (3, 5), 2187: (3, 7),
    }
    return {q: GF(p, h) for q, (p, h) in orders.items()}


@pytest.fixture(scope="session")
def gf3(fields):
    return fields[3]


@pytest.fixture(scope="session")
def gf4(fields):
    return fields[4]


@pytest.fixture(scope="session")
def gf8(fields):
    return fields[8]


@pytest.fixture(scope="session")
def gf9(fields):
    return fields[9]


@pytest.fixture(scope="session")
def gf27(fields):
    return fields[27]


@pytest.fixture(scope="session")
def gf243(fields):
    return fields[243]
