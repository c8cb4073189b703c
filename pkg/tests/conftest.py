import pytest

from esnlab.tables import CayleyTable, parse_table

B2_TEXT = """\
5
1 1 1 1 1
1 1 4 1 2
1 5 1 3 1
1 2 1 4 1
1 1 3 1 5
"""

CLIFFORD3 = CayleyTable(((1, 1, 1), (1, 2, 3), (1, 3, 2)))


@pytest.fixture
def b2():
    return parse_table(B2_TEXT)


@pytest.fixture
def clifford3():
    return CLIFFORD3


def all_tables(n):
    """Every n-by-n magma table, lexicographic."""
    from itertools import product

    for values in product(range(1, n + 1), repeat=n * n):
        yield CayleyTable(tuple(values[a * n : (a + 1) * n] for a in range(n)))


def assoc_oracle(t):
    """Direct triple loop, kept independent of the production scan."""
    for a in t.elements():
        for b in t.elements():
            for c in t.elements():
                if t.product(t.product(a, b), c) != t.product(a, t.product(b, c)):
                    return (a, b, c)
    return None
