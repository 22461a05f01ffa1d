import pytest

from numsgps.core import NumericalSemigroup, from_generators
from numsgps.oracle import all_with_frobenius, semigroups_by_genus


def sgp(*gens) -> NumericalSemigroup:
    return from_generators(gens)


@pytest.fixture(scope="session")
def census_by_frobenius():
    """Complete censuses, cached per session: f -> all semigroups with F = f."""
    cache: dict[int, tuple] = {}

    def get(f: int):
        if f not in cache:
            cache[f] = all_with_frobenius(f)
        return cache[f]

    return get


@pytest.fixture(scope="session")
def small_semigroups(census_by_frobenius):
    """Every numerical semigroup with 1 <= F <= 12."""
    out = []
    for f in range(1, 13):
        out.extend(census_by_frobenius(f))
    return out


@pytest.fixture(scope="session")
def genus_tree_12():
    """Every numerical semigroup with genus <= 12 (ℕ included)."""
    return semigroups_by_genus(12)
